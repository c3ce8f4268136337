#include <catch2/catch_amalgamated.hpp>

#include "koloc/quat_reps.hpp"

using namespace koloc;

TEST_CASE("quaternion convention ijk = 1") {
  Quat i = Quat::unit(1), j = Quat::unit(2), k = Quat::unit(3);
  REQUIRE(i * j * k == Quat::unit(0));
  REQUIRE(i * i == -Quat::unit(0));
  REQUIRE(j * j == -Quat::unit(0));
  REQUIRE(k * k == -Quat::unit(0));
  REQUIRE(i * j == -k);
  REQUIRE(j * k == -i);
  REQUIRE(k * i == -j);
  REQUIRE(j * i == k);
}

TEST_CASE("alpha generators satisfy Cl(0,4) relations") {
  for (int p = 1; p <= 4; ++p) {
    REQUIRE(alpha_gen(p) * alpha_gen(p) == -QMat2::identity());
    for (int q = p + 1; q <= 4; ++q) {
      QMat2 anti = alpha_gen(p) * alpha_gen(q) + alpha_gen(q) * alpha_gen(p);
      REQUIRE(anti == QMat2::zero());
    }
  }
}

TEST_CASE("alpha(Gamma) is diag(1,-1), byte exact") {
  QMat2 g = alpha_gamma();
  QMat2 want;
  want.e[0][0] = Quat::unit(0);
  want.e[1][1] = -Quat::unit(0);
  REQUIRE(g == want);
  REQUIRE(g.str() == "[[(1,0,0,0),(0,0,0,0)],[(0,0,0,0),(-1,0,0,0)]]");
  REQUIRE(g * g == QMat2::identity());
}

TEST_CASE("alpha module verifies") {
  GradedModule a = alpha_module();
  REQUIRE(a.dim == 16);
  REQUIRE(verify_module(a).empty());
}

TEST_CASE("beta module verifies and beta(eps_0)^2 = 1") {
  GradedModule b = beta_module();
  REQUIRE(b.dim == 32);
  REQUIRE(verify_module(b).empty());
  BPair e0 = beta_gen(0);
  REQUIRE(e0 * e0 == BPair::identity());
}

TEST_CASE("f module verifies") {
  GradedModule f = f_module();
  REQUIRE(f.dim == 512);
  REQUIRE(verify_module(f).empty());
  // Left and right multiplications commute.
  REQUIRE(f.gen[0].commutes_with(f.right_gen[3]));
  REQUIRE(f.gen[7].commutes_with(f.right_gen[8]));
}

TEST_CASE("the 512 blade images under f are linearly independent") {
  ExactMat m(512, 512);
  for (Blade b = 0; b < 512; ++b) {
    RatVec v = f_blade_image(b);
    for (int i = 0; i < 512; ++i)
      if (!is_zero(v[i])) m.set(static_cast<int>(b), i, v[i]);
  }
  REQUIRE(m.rank() == 512);
}

TEST_CASE("tilde_s: dimension, grading, Cl(0,1) structure") {
  GradedModule f = f_module();
  TildeS ts = tilde_s(f);
  REQUIRE(ts.basis.cols() == 32);
  REQUIRE(verify_module(ts.cl_minus1).empty());
  // Grading restricts to an involution; left multiplications restrict.
  REQUIRE(ts.cl_minus1.grading * ts.cl_minus1.grading == ExactMat::identity(32));
}

TEST_CASE("Phi identifies tilde S with S' (+) S'") {
  GradedModule f = f_module();
  TildeS ts = tilde_s(f);
  ExactMat phi = phi_reduction_map();
  SPrimePair sp = s_prime_pair();

  // Phi is invariant under right multiplication by eps_q e_q.
  for (int q = 1; q <= 4; ++q) {
    ExactMat right_k = f.right_gen[4 + q] * f.right_gen[q];
    REQUIRE(phi * right_k == phi);
  }

  // Restricted to tilde S, Phi is a linear isomorphism onto the 32-dim space.
  ExactMat phi_s = phi * ts.basis;  // 32 x 32
  REQUIRE(phi_s.rank() == 32);

  // Intertwining: grading, the five left eps multiplications, right eps_0.
  REQUIRE(phi * f.grading * ts.basis == sp.grading * phi_s);
  for (int j = 0; j <= 4; ++j) REQUIRE(phi * f.gen[j] * ts.basis == sp.c_tz[j] * phi_s);
  REQUIRE(phi * f.right_gen[0] * ts.basis == sp.right_eps0 * phi_s);

  // Hence the left Cl(0,1) action matches as well.
  ExactMat left_e0_512 = f.right_gen[0] * f.grading;
  REQUIRE(phi * left_e0_512 * ts.basis == sp.left_e0 * phi_s);
}
