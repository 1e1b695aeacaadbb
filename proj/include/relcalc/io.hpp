#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relcalc/relation.hpp"
#include "relcalc/types.hpp"

namespace relcalc {

using Json = nlohmann::json;

/// Complex scalars travel as [re, im]; a bare number is accepted on input
/// and read as a real.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);

/// On-disk description of a relation: an n x n operator matrix, a list of
/// (f, g) pairs, or a 2n x d matrix whose columns span the graph.
struct RelationDocument {
  enum class Kind { Operator, Pairs, Basis };

  Index space_dim = 0;
  Kind kind = Kind::Operator;
  Matrix operator_matrix;
  std::vector<std::pair<Vector, Vector>> pairs;
  Matrix basis;
  double tol = kDefaultTol;

  /// Throws ParseError naming the offending field.
  static RelationDocument from_json(const Json& j, double default_tol = kDefaultTol);
  static RelationDocument from_file(const std::string& path,
                                    double default_tol = kDefaultTol);
  Json to_json() const;
  LinearRelation to_relation() const;
};

}  // namespace relcalc
