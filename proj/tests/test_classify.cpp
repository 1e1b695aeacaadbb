#include <doctest.h>

#include "relcalc/classify.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/spectral.hpp"
#include "oracles.hpp"

using namespace relcalc;

namespace {

const Complex kI(0.0, 1.0);

Vector cvec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index k = 0;
  for (Complex z : entries) v(k++) = z;
  return v;
}

Matrix flip2() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

LinearRelation b_delta() {
  return LinearRelation::from_pairs(2, {{cvec({0, 1}), cvec({1, 0})}});
}

LinearRelation j_inf() {
  return LinearRelation::from_pairs(
      2, {{cvec({0, 1}), cvec({1, 0})}, {cvec({0, 0}), cvec({1, 0})}});
}

}  // namespace

TEST_CASE("symmetry of canonical relations") {
  CHECK(is_symmetric(LinearRelation::from_operator(flip2())));
  CHECK(is_symmetric(b_delta()));  // Im<e2, e1> = 0

  Matrix nilpotent(2, 2);
  nilpotent << 0, 1, 0, 0;
  LinearRelation t = LinearRelation::from_operator(nilpotent);
  CHECK_FALSE(is_symmetric(t));
  // oracle: T ⊆ T* fails
  const auto order = compare(t, oracle::adjoint_by_definition(t));
  CHECK(order != SubspaceOrder::Equal);
  CHECK(order != SubspaceOrder::ASubsetB);
}

TEST_CASE("symmetry matches the subset characterization on random input") {
  oracle::Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 4);
    LinearRelation t = oracle::random_relation(rng, n, static_cast<Index>(rng() % (2 * n + 1)));
    const auto order = compare(t, adjoint(t));
    const bool subset = order == SubspaceOrder::Equal || order == SubspaceOrder::ASubsetB;
    CAPTURE(trial);
    CHECK(is_symmetric(t) == subset);
  }
}

TEST_CASE("dissipativity") {
  const Index n = 3;
  CHECK(is_dissipative(LinearRelation::from_operator(kI * Matrix::Identity(n, n))));
  CHECK_FALSE(is_dissipative(LinearRelation::from_operator(-kI * Matrix::Identity(n, n))));

  // every symmetric relation is dissipative; T symmetric iff Im form is both >= 0 and <= 0
  oracle::Rng rng(91);
  for (int trial = 0; trial < 30; ++trial) {
    const Index m = 1 + static_cast<Index>(rng() % 4);
    LinearRelation t = oracle::random_relation(rng, m, static_cast<Index>(rng() % (2 * m + 1)));
    const bool both = is_dissipative(t) && is_dissipative(scale(-1.0, t));
    CAPTURE(trial);
    CHECK(is_symmetric(t) == both);
    if (is_symmetric(t)) CHECK(is_dissipative(t));
  }
}

TEST_CASE("selfadjointness") {
  CHECK(is_selfadjoint(LinearRelation::from_operator(flip2())));
  CHECK(is_selfadjoint(j_inf()));
  CHECK_FALSE(is_selfadjoint(b_delta()));

  SelfadjointDiagnostic d = selfadjoint_diagnostic(j_inf());
  CHECK(d.selfadjoint);
  CHECK(d.deficiency_zero);
  CHECK(d.nonreal_points_regular);

  SelfadjointDiagnostic db = selfadjoint_diagnostic(b_delta());
  CHECK_FALSE(db.selfadjoint);
  CHECK(db.eta_plus == 1);
  CHECK(db.eta_minus == 1);
}

TEST_CASE("diagnostic equivalences agree on random symmetric relations") {
  oracle::Rng rng(555);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 4);
    const Index r = static_cast<Index>(rng() % (n + 1));
    LinearRelation a = oracle::random_selfadjoint_relation(rng, n, r);
    SelfadjointDiagnostic d = selfadjoint_diagnostic(a);
    CAPTURE(trial);
    CHECK(d.selfadjoint);
    CHECK(d.deficiency_zero);
    CHECK(d.nonreal_points_regular);
  }
}

TEST_CASE("boundedness is the operator property") {
  CHECK(is_bounded(LinearRelation::from_operator(flip2())));
  CHECK_FALSE(is_bounded(LinearRelation::from_pairs(2, {{cvec({0, 0}), cvec({1, 0})}})));
  CHECK_FALSE(is_bounded(j_inf()));
}

TEST_CASE("deficiency indices") {
  CHECK(deficiency(b_delta(), -kI).index == 1);
  CHECK(deficiency(b_delta(), kI).index == 1);
  CHECK(deficiency(LinearRelation::from_operator(flip2()), kI).index == 0);
  CHECK(deficiency(LinearRelation::from_operator(flip2()), -kI).index == 0);

  // constancy across the half-plane (connected components)
  CHECK(deficiency(b_delta(), Complex(0.0, -2.0)).index == 1);
  CHECK(deficiency(b_delta(), Complex(0.7, -0.4)).index == 1);

  // deficiency space is N_zeta(T) and its graph dimension is dim ker(T - zeta)
  DeficiencyData data = deficiency(b_delta(), -kI);
  CHECK(data.space.dim() == eigenvalue_multiplicity(b_delta(), -kI));
  const auto order = compare(data.space, b_delta());
  CHECK((order == SubspaceOrder::ASubsetB || order == SubspaceOrder::Equal));
  CHECK(deficiency_index(b_delta(), -kI) == data.index);
}

TEST_CASE("maximal dissipativity") {
  CHECK(is_maximal_dissipative(
      LinearRelation::from_operator(kI * Matrix::Identity(2, 2))));
  CHECK_FALSE(is_maximal_dissipative(b_delta()));
  CHECK(is_maximal_dissipative(j_inf()));  // selfadjoint relations qualify
}

TEST_CASE("eigenvalue multiplicities") {
  CHECK(eigenvalue_multiplicity(LinearRelation::from_operator(flip2()), 1.0) == 1);
  CHECK(eigenvalue_multiplicity(j_inf(), 0.0) == 1);
  CHECK(eigenvalue_multiplicity(LinearRelation::identity(4), 1.0) == 4);
  CHECK(eigenvalue_multiplicity(LinearRelation::identity(4), 2.0) == 0);
}

TEST_CASE("dissipative domain guard") {
  oracle::Rng rng(314);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 4);
    const Index r = static_cast<Index>(rng() % (n + 1));
    LinearRelation l =
        oracle::random_dissipative_relation(rng, n, r, static_cast<Index>(rng() % (r + 1)));
    CAPTURE(trial);
    CHECK(is_dissipative(l));
    CHECK(domain_in_mul_complement(l));
    CHECK(is_maximal_dissipative(l));
  }
}

TEST_CASE("mu equals the kernel of the operator part for dissipative relations") {
  oracle::Rng rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 3);
    const Index r = 1 + static_cast<Index>(rng() % n);
    LinearRelation l =
        oracle::random_dissipative_relation(rng, n, r, static_cast<Index>(rng() % (r + 1)));
    LinearRelation op = decompose(l).operator_part;
    // probe at the eigenvalues of the reduced relation plus a generic point
    std::vector<Complex> probes = {Complex(0.4, 0.2)};
    for (const auto& entry : spectrum(reduce(l, l)).eigenvalues)
      probes.push_back(entry.value);
    for (Complex lambda : probes) {
      CAPTURE(trial);
      CHECK(eigenvalue_multiplicity(l, lambda) == eigenvalue_multiplicity(op, lambda));
    }
  }
}
