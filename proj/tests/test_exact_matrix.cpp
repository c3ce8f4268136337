#include <catch2/catch_amalgamated.hpp>

#include "koloc/exact_matrix.hpp"

using namespace koloc;

TEST_CASE("rref, rank, nullspace on small systems") {
  ExactMat a = ExactMat::from_rows({{rat(1), rat(2), rat(3)},
                                    {rat(2), rat(4), rat(6)},
                                    {rat(1), rat(0), rat(1)}});
  REQUIRE(a.rank() == 2);
  ExactMat ns = a.nullspace();
  REQUIRE(ns.cols() == 1);
  // A * v = 0 exactly for the nullspace vector.
  RatVec v = ns.column(0);
  for (const Rat& x : a * v) REQUIRE(is_zero(x));
}

TEST_CASE("solve and inverse are exact") {
  ExactMat a = ExactMat::from_rows({{rat(2), rat(1)}, {rat(5), rat(3)}});
  ExactMat inv = a.inverse();
  REQUIRE(a * inv == ExactMat::identity(2));
  REQUIRE(inv * a == ExactMat::identity(2));
  REQUIRE(a.det() == rat(1));
}

TEST_CASE("determinant tracks swaps and singularity") {
  ExactMat a = ExactMat::from_rows({{rat(0), rat(1)}, {rat(1), rat(0)}});
  REQUIRE(a.det() == rat(-1));
  ExactMat s = ExactMat::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
  REQUIRE(is_zero(s.det()));
}

TEST_CASE("kron and direct sum shapes and traces") {
  ExactMat a = ExactMat::from_rows({{rat(1), rat(2)}, {rat(3), rat(4)}});
  ExactMat b = ExactMat::identity(3);
  ExactMat k = ExactMat::kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.trace() == a.trace() * b.trace());
  ExactMat d = ExactMat::direct_sum(a, b);
  REQUIRE(d.rows() == 5);
  REQUIRE(d.trace() == a.trace() + b.trace());
}

TEST_CASE("eigenspace of an involution splits the space") {
  ExactMat k = ExactMat::from_rows({{rat(0), rat(1)}, {rat(1), rat(0)}});
  ExactMat plus = k.eigenspace(rat(1));
  ExactMat minus = k.eigenspace(rat(-1));
  REQUIRE(plus.cols() == 1);
  REQUIRE(minus.cols() == 1);
}

TEST_CASE("commutant dimension of an irreducible real pair is 1") {
  // The 2x2 matrices {sigma_x, diag(1,-1)} generate all of M_2(R).
  std::vector<ExactMat> gens = {ExactMat::from_rows({{rat(0), rat(1)}, {rat(1), rat(0)}}),
                                ExactMat::from_rows({{rat(1), rat(0)}, {rat(0), rat(-1)}})};
  REQUIRE(commutant_dimension(gens, 2) == 1);
}
