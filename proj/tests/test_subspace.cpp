#include <doctest.h>

#include "relcalc/errors.hpp"
#include "relcalc/subspace.hpp"
#include "oracles.hpp"

using namespace relcalc;

namespace {

Vector cvec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index k = 0;
  for (Complex z : entries) v(k++) = z;
  return v;
}

}  // namespace

TEST_CASE("span of collinear vectors has dimension one") {
  Subspace s = span(2, {cvec({1, 0}), cvec({2, 0})});
  CHECK(s.dim() == 1);
  CHECK(member(s, cvec({5, 0})));
  CHECK_FALSE(member(s, cvec({0, 1})));
}

TEST_CASE("span of the empty family is the zero subspace") {
  Subspace s = span(3, {});
  CHECK(s.dim() == 0);
  CHECK(project(s, cvec({1, 2, 3})).norm() == 0.0);
}

TEST_CASE("span rank matches an independent SVD oracle on oversampled input") {
  oracle::Rng rng(101);
  Matrix cols = oracle::random_matrix(rng, 3, 50);
  Subspace s = span(cols);
  CHECK(s.dim() == 3);
  // Oracle: direct singular value count on the raw sample matrix.
  Eigen::JacobiSVD<Matrix> svd(cols);
  Index rank = 0;
  for (Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) > 1e-10 * svd.singularValues()(0)) ++rank;
  CHECK(s.dim() == rank);
}

TEST_CASE("span rejects bad input") {
  CHECK_THROWS_AS(span(Matrix(0, 0)), InvalidArgument);
  Matrix bad(2, 1);
  bad << Complex(1, 0), Complex(std::nan(""), 0);
  CHECK_THROWS_AS(span(bad), InvalidArgument);
  CHECK_THROWS_AS(span(2, {cvec({1, 0, 0})}), DimensionMismatch);
}

TEST_CASE("lattice operations on canonical subspaces") {
  Subspace e1 = span(2, {cvec({1, 0})});
  Subspace e2 = span(2, {cvec({0, 1})});
  Subspace diag = span(2, {cvec({1, 1})});

  CHECK(intersect(e1, e2).dim() == 0);
  CHECK(sum(e1, diag).dim() == 2);
  CHECK(equal(ominus(Subspace::full(2), e1), e2));
  CHECK_THROWS_AS(sum(e1, span(3, {cvec({1, 0, 0})})), DimensionMismatch);
}

TEST_CASE("projection onto a coordinate line") {
  Subspace e1 = span(2, {cvec({1, 0})});
  Vector p = project(e1, cvec({3, 4}));
  CHECK(std::abs(p(0) - Complex(3, 0)) < 1e-12);
  CHECK(std::abs(p(1)) < 1e-12);
}

TEST_CASE("membership at the coordinate axes") {
  Subspace e1 = span(2, {cvec({1, 0})});
  CHECK(member(e1, cvec({3, 0})));
  CHECK_FALSE(member(e1, cvec({0, 1})));
}

TEST_CASE("subspace constructor enforces orthonormality") {
  Matrix skew(2, 1);
  skew << Complex(1, 0), Complex(1, 0);  // norm sqrt(2)
  CHECK_THROWS_AS(Subspace(2, skew), InvalidArgument);
}

TEST_CASE("randomized lattice invariants") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const Index m = 2 + static_cast<Index>(rng() % 5);  // ambient 2..6
    const Index da = static_cast<Index>(rng() % (m + 1));
    const Index db = static_cast<Index>(rng() % (m + 1));
    Subspace a = da == 0 ? Subspace::zero(m) : span(oracle::random_matrix(rng, m, da));
    Subspace b = db == 0 ? Subspace::zero(m) : span(oracle::random_matrix(rng, m, db));

    CAPTURE(trial);
    // dim a + dim a^⊥ = m
    CHECK(a.dim() + complement(a).dim() == m);
    // commutativity
    CHECK(equal(sum(a, b), sum(b, a)));
    CHECK(equal(intersect(a, b), intersect(b, a)));
    // De Morgan
    CHECK(equal(complement(intersect(a, b)), sum(complement(a), complement(b))));
    // projection is idempotent and norm-nonincreasing
    Vector v = oracle::random_matrix(rng, m, 1).col(0);
    Vector pv = project(a, v);
    CHECK((project(a, pv) - pv).norm() <= 1e-10 * std::max(1.0, v.norm()));
    CHECK(pv.norm() <= v.norm() + 1e-12);
    // dimension formula for sums
    CHECK(sum(a, b).dim() ==
          a.dim() + b.dim() - intersect(a, b).dim());
  }
}

TEST_CASE("randomized associativity up to tolerance") {
  oracle::Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const Index m = 3 + static_cast<Index>(rng() % 3);
    Subspace a = span(oracle::random_matrix(rng, m, 1 + static_cast<Index>(rng() % m)));
    Subspace b = span(oracle::random_matrix(rng, m, 1 + static_cast<Index>(rng() % m)));
    Subspace c = span(oracle::random_matrix(rng, m, 1 + static_cast<Index>(rng() % m)));
    CHECK(equal(sum(sum(a, b), c), sum(a, sum(b, c))));
    CHECK(equal(intersect(intersect(a, b), c), intersect(a, intersect(b, c))));
  }
}

TEST_CASE("compare distinguishes the four orders") {
  Subspace e1 = span(2, {cvec({1, 0})});
  Subspace e2 = span(2, {cvec({0, 1})});
  Subspace full = Subspace::full(2);
  CHECK(compare(e1, e1) == SubspaceOrder::Equal);
  CHECK(compare(e1, full) == SubspaceOrder::ASubsetB);
  CHECK(compare(full, e2) == SubspaceOrder::BSubsetA);
  CHECK(compare(e1, e2) == SubspaceOrder::Incomparable);
}

TEST_CASE("largest principal angle is a usable distance") {
  Subspace e1 = span(2, {cvec({1, 0})});
  Subspace diag = span(2, {cvec({1, 1})});
  CHECK(largest_principal_angle(e1, e1) < 1e-9);
  CHECK(largest_principal_angle(e1, diag) == doctest::Approx(M_PI / 4));
  CHECK(largest_principal_angle(e1, Subspace::full(2)) == doctest::Approx(M_PI / 2));
}
