#include "relcalc/io.hpp"

#include <fstream>

#include "relcalc/errors.hpp"
#include "internal.hpp"

namespace relcalc {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw ParseError(where + ": expected a number or an [re, im] pair");
}

namespace {

Matrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(where + ", row " + std::to_string(r) + ": expected " +
                       std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(row[static_cast<size_t>(c)],
                                  where + "[" + std::to_string(r) + "][" +
                                      std::to_string(c) + "]");
  }
  if (!internal::all_finite(m)) throw ParseError(where + ": non-finite entries");
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Vector vector_from_json(const Json& j, Index n, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n)
    throw ParseError(where + ": expected " + std::to_string(n) + " entries");
  Vector v(n);
  for (Index k = 0; k < n; ++k)
    v(k) = complex_from_json(j[static_cast<size_t>(k)],
                             where + "[" + std::to_string(k) + "]");
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

}  // namespace

RelationDocument RelationDocument::from_json(const Json& j, double default_tol) {
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  RelationDocument doc;

  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
    throw ParseError("ambient_dim: expected a positive integer");
  doc.space_dim = j["ambient_dim"].get<Index>();
  if (doc.space_dim < 1) throw ParseError("ambient_dim: expected a positive integer");

  doc.tol = default_tol;
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0.0))
      throw ParseError("tol: expected a positive number");
    doc.tol = j["tol"].get<double>();
  }

  const std::string kind = j.value("kind", std::string());
  const Json& payload = j.contains("payload") ? j["payload"] : Json();
  const Index n = doc.space_dim;
  if (kind == "operator") {
    doc.kind = Kind::Operator;
    doc.operator_matrix = matrix_from_json(payload, n, n, "payload");
  } else if (kind == "pairs") {
    doc.kind = Kind::Pairs;
    if (!payload.is_array()) throw ParseError("payload: expected a list of [f, g] pairs");
    for (size_t k = 0; k < payload.size(); ++k) {
      const Json& pair = payload[k];
      const std::string where = "payload[" + std::to_string(k) + "]";
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError(where + ": expected an [f, g] pair");
      doc.pairs.emplace_back(vector_from_json(pair[0], n, where + ".f"),
                             vector_from_json(pair[1], n, where + ".g"));
    }
  } else if (kind == "basis") {
    doc.kind = Kind::Basis;
    if (!payload.is_array() || payload.empty() ||
        static_cast<Index>(payload.size()) != 2 * n)
      throw ParseError("payload: expected a 2n x d matrix");
    const Index d = payload[0].is_array() ? static_cast<Index>(payload[0].size()) : -1;
    if (d < 0) throw ParseError("payload: expected a 2n x d matrix");
    doc.basis = matrix_from_json(payload, 2 * n, d, "payload");
  } else {
    throw ParseError("kind: expected one of operator, pairs, basis");
  }
  return doc;
}

RelationDocument RelationDocument::from_file(const std::string& path, double default_tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return from_json(j, default_tol);
}

Json RelationDocument::to_json() const {
  Json j;
  j["ambient_dim"] = space_dim;
  j["tol"] = tol;
  switch (kind) {
    case Kind::Operator:
      j["kind"] = "operator";
      j["payload"] = matrix_to_json(operator_matrix);
      break;
    case Kind::Pairs: {
      j["kind"] = "pairs";
      Json list = Json::array();
      for (const auto& [f, g] : pairs)
        list.push_back(Json::array({vector_to_json(f), vector_to_json(g)}));
      j["payload"] = std::move(list);
      break;
    }
    case Kind::Basis:
      j["kind"] = "basis";
      j["payload"] = matrix_to_json(basis);
      break;
  }
  return j;
}

LinearRelation RelationDocument::to_relation() const {
  switch (kind) {
    case Kind::Operator:
      return LinearRelation::from_operator(operator_matrix, tol);
    case Kind::Pairs:
      return LinearRelation::from_pairs(space_dim, pairs, tol);
    case Kind::Basis:
      return LinearRelation::from_graph_columns(space_dim, basis, tol);
  }
  throw Error("unreachable");
}

}  // namespace relcalc
