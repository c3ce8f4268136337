#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "abs_oracle.hpp"
#include "koloc/ko.hpp"

using namespace koloc;

namespace {

// M (+) M carrying an invertible skew pairing the two copies.
GradedModule with_paired_skew(const GradedModule& a) {
  GradedModule m = module_direct_sum(a, a);
  ExactMat T = a.grading * blade_action(a, 1);
  ExactMat s(2 * a.dim, 2 * a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (auto& [j, v] : T.row(i)) {
      s.set(i, a.dim + j, v);
      s.set(a.dim + j, i, -v);
    }
  GradedModule trial = m;
  trial.skew = s;
  if (!verify_module(trial).empty()) throw std::logic_error("no paired skew found for test module");
  return trial;
}

}  // namespace

TEST_CASE("KO kind table matches the brute-force ABS oracle") {
  for (int k = 0; k <= 7; ++k) {
    auto q = abs_oracle::quotient_for_degree(k);
    REQUIRE(q.kind == KOClass::kind_for(k));
  }
}

TEST_CASE("regular module classes match the oracle in all eight degrees") {
  for (int k = 0; k <= 7; ++k) {
    auto q = abs_oracle::quotient_for_degree(k);
    KOClass got = ko_class(regular_module({0, k}));
    REQUIRE(got.k == k);
    REQUIRE(got.kind == q.kind);
    if (q.kind == KOClass::Kind::Mod2) {
      REQUIRE(got.value == q.regular_value);
    } else if (q.kind == KOClass::Kind::Integer) {
      REQUIRE(std::abs(got.value) == std::abs(q.regular_value));
    }
  }
}

TEST_CASE("the generator of KO^-1 and its double") {
  GradedModule m = regular_module({0, 1});
  KOClass c = ko_class(m);
  REQUIRE(c.k == 1);
  REQUIRE(c.kind == KOClass::Kind::Mod2);
  REQUIRE(c.value == 1);
  KOClass c2 = ko_class(module_direct_sum(m, m));
  REQUIRE(c2.value == 0);
}

TEST_CASE("invertible skew gives the zero class") {
  GradedModule m = with_paired_skew(regular_module({0, 1}));
  REQUIRE(verify_module(m).empty());
  KOClass c = ko_class(m);
  REQUIRE(c.is_zero());
}

TEST_CASE("ko_class is additive on direct sums") {
  std::vector<GradedModule> pool = {regular_module({0, 1}),
                                    module_direct_sum(regular_module({0, 1}), regular_module({0, 1})),
                                    with_paired_skew(regular_module({0, 1}))};
  for (auto& a : pool)
    for (auto& b : pool) {
      GradedModule sum = module_direct_sum(a, b);
      REQUIRE(ko_class(sum) == ko_class(a) + ko_class(b));
    }
  GradedModule r2 = regular_module({0, 2});
  REQUIRE(ko_class(r2).value == 1);
  REQUIRE(ko_class(module_direct_sum(r2, r2)).value == 0);
}

TEST_CASE("appending a V1 tensor factor does not change the class") {
  std::vector<GradedModule> pool = {regular_module({0, 1}), regular_module({0, 2}),
                                    with_paired_skew(regular_module({0, 1}))};
  for (auto& m : pool) {
    KOClass before = ko_class(m);
    GradedModule shifted = module_tensor(m, v1_module());
    REQUIRE(shifted.sig.l == m.sig.l + 1);
    REQUIRE(shifted.sig.m == m.sig.m + 1);
    KOClass after = ko_class(shifted);
    REQUIRE(after == before);
    REQUIRE(ko_class(module_tensor(shifted, v1_module())) == before);
  }
}

TEST_CASE("degree bookkeeping: k = (a - b) mod 8") {
  REQUIRE(ko_class(regular_module({0, 3})).k == 3);
  REQUIRE(ko_class(module_tensor(regular_module({0, 1}), v1_module())).k == 1);
  REQUIRE(ko_class(vn_module(2)).k == 0);
}

TEST_CASE("mod-2 kernel formula matches ko_class in degree one") {
  GradedModule m = regular_module({0, 1});
  REQUIRE(mod2_index_even_kernel(m) == ko_class(m).value);
  GradedModule mm = module_direct_sum(m, m);
  REQUIRE(mod2_index_even_kernel(mm) == ko_class(mm).value);
  GradedModule ms = with_paired_skew(m);
  REQUIRE(mod2_index_even_kernel(ms) == 0);
  REQUIRE(ko_class(ms).value == 0);
  GradedModule mixed = module_direct_sum(ms, m);
  REQUIRE(mod2_index_even_kernel(mixed) == 1);
  REQUIRE(ko_class(mixed).value == 1);
}

TEST_CASE("ko_class of the oracle irreducibles agrees up to generator choice") {
  for (int k : {0, 1, 2, 4}) {
    auto irr = abs_oracle::graded_irreducibles(k);
    auto q = abs_oracle::quotient_for_degree(k);
    for (auto& m : irr) {
      KOClass c = ko_class(m);
      REQUIRE(c.kind == q.kind);
      if (q.kind == KOClass::Kind::Mod2) REQUIRE(c.value == 1);
      if (q.kind == KOClass::Kind::Integer) REQUIRE(std::abs(c.value) == 1);
    }
  }
}
