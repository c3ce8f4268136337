#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "koloc/clifford.hpp"

using namespace koloc;

namespace {

Multivector random_mv(Signature sig, std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterm(1, max_terms);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<Blade> blade(0, (Blade(1) << sig.total()) - 1);
  Multivector v(sig);
  int n = nterm(rng);
  for (int i = 0; i < n; ++i) v.add_term(blade(rng), rat(num(rng), den(rng)));
  return v;
}

}  // namespace

TEST_CASE("generator relations") {
  Signature s{1, 1};
  Multivector eps = Multivector::generator(s, 0);
  Multivector e = Multivector::generator(s, 1);
  Multivector one = Multivector::scalar(s, 1);
  REQUIRE(eps * eps == one);
  REQUIRE(e * e == -one);
  REQUIRE((eps * e + e * eps).is_zero());
}

TEST_CASE("embed_vector squares to the quadratic form") {
  REQUIRE(embed_vector({2, 0}, {rat(3, 5), rat(4, 5)}) * embed_vector({2, 0}, {rat(3, 5), rat(4, 5)}) ==
          Multivector::scalar({2, 0}, 1));
  REQUIRE(embed_vector({0, 1}, {rat(1)}) * embed_vector({0, 1}, {rat(1)}) ==
          Multivector::scalar({0, 1}, -1));
  // Q(1,1) = 1 - 1 = 0 in signature (1,1).
  Multivector v = embed_vector({1, 1}, {rat(1), rat(1)});
  REQUIRE((v * v).is_zero());
}

TEST_CASE("embed_vector rejects wrong length") {
  REQUIRE_THROWS_AS(embed_vector({2, 1}, {rat(1)}), std::invalid_argument);
}

TEST_CASE("mul rejects signature mismatch") {
  Multivector a = Multivector::scalar({1, 0}, 1);
  Multivector b = Multivector::scalar({0, 1}, 1);
  REQUIRE_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("grading involution and parts") {
  Signature s{1, 1};
  Multivector eps = Multivector::generator(s, 0);
  Multivector e = Multivector::generator(s, 1);
  Multivector one = Multivector::scalar(s, 1);
  REQUIRE(grading_involution(eps) == -eps);
  REQUIRE(grading_involution(eps * e) == eps * e);
  REQUIRE(even_part(one + eps) == one);
  REQUIRE(odd_part(one + eps) == eps);
  Multivector a = one + eps + e + eps * e;
  REQUIRE(even_part(a) + odd_part(a) == a);
}

TEST_CASE("volume elements") {
  // sig (0,4): Gamma = e1 e2 e3 e4 with Gamma^2 = 1.
  Multivector g = volume_element({0, 4});
  REQUIRE(g * g == Multivector::scalar({0, 4}, 1));
  REQUIRE(volume_element({1, 0}) * volume_element({1, 0}) == Multivector::scalar({1, 0}, 1));
  // Direct product check: (e1 e2)^2 = -1 in sig (0,2).
  Signature s02{0, 2};
  Multivector e1 = Multivector::generator(s02, 0);
  Multivector e2 = Multivector::generator(s02, 1);
  Multivector vol = volume_element(s02);
  REQUIRE(vol == e1 * e2);
  REQUIRE(vol * vol == Multivector::scalar(s02, -1));
}

TEST_CASE("graded tensor Koszul sign") {
  // (1 (x) e) * (e' (x) 1) = -(e' (x) e) for odd e, e'.
  Signature s01{0, 1};
  Multivector one01 = Multivector::scalar(s01, 1);
  Multivector e = Multivector::generator(s01, 0);
  Multivector lhs = graded_tensor(one01, e) * graded_tensor(e, one01);
  Multivector rhs = -graded_tensor(e, e);
  REQUIRE(lhs == rhs);
}

TEST_CASE("graded tensor realizes Cl(1,0) x Cl(0,1) -> Cl(1,1)") {
  Signature sa{1, 0}, sb{0, 1};
  Multivector one_a = Multivector::scalar(sa, 1);
  Multivector one_b = Multivector::scalar(sb, 1);
  Multivector ge = graded_tensor(Multivector::generator(sa, 0), one_b);
  Multivector gf = graded_tensor(one_a, Multivector::generator(sb, 0));
  Signature st{1, 1};
  REQUIRE(ge * ge == Multivector::scalar(st, 1));
  REQUIRE(gf * gf == Multivector::scalar(st, -1));
  REQUIRE((ge * gf + gf * ge).is_zero());
  REQUIRE(ge == Multivector::generator(st, 0));
  REQUIRE(gf == Multivector::generator(st, 1));
}

TEST_CASE("graded tensor is an algebra map on random samples") {
  std::mt19937_64 rng(7);
  Signature sa{1, 1}, sb{1, 1};
  for (int i = 0; i < 50; ++i) {
    Multivector a1 = random_mv(sa, rng), a2 = random_mv(sa, rng);
    Multivector b = random_mv(sb, rng);
    // On pure-left and pure-right factors the map is multiplicative.
    REQUIRE(graded_tensor(a1 * a2, Multivector::scalar(sb, 1)) ==
            graded_tensor(a1, Multivector::scalar(sb, 1)) * graded_tensor(a2, Multivector::scalar(sb, 1)));
    REQUIRE(graded_tensor(Multivector::scalar(sa, 1), b * b) ==
            graded_tensor(Multivector::scalar(sa, 1), b) * graded_tensor(Multivector::scalar(sa, 1), b));
  }
}

TEST_CASE("blade basis count is 2^(l+m)") {
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3; ++m) {
      Signature s{l, m};
      // Every blade mask is reachable and products stay in range.
      Blade all = (Blade(1) << s.total()) - 1;
      REQUIRE(static_cast<int>(all) + 1 == (1 << s.total()));
    }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(11);
  for (int l = 0; l <= 2; ++l)
    for (int m = 0; m <= 2; ++m) {
      Signature s{l, m};
      for (int i = 0; i < 30; ++i) {
        Multivector a = random_mv(s, rng), b = random_mv(s, rng), c = random_mv(s, rng);
        REQUIRE((a * b) * c == a * (b * c));
      }
    }
}

TEST_CASE("text serialization round trip") {
  std::mt19937_64 rng(13);
  Signature s{2, 3};
  for (int i = 0; i < 40; ++i) {
    Multivector v = random_mv(s, rng, 6);
    REQUIRE(from_text(s, to_text(v)) == v);
  }
  REQUIRE(to_text(Multivector(s)) == "0");
  Multivector w = Multivector::scalar(s, rat(-3, 7)) + Multivector::generator(s, 0) * rat(2) +
                  Multivector::basis_blade(s, 0b10100);
  REQUIRE(to_text(w) == "-3/7 * 1 + 2 * eps1 + 1 * e1 e3");
  REQUIRE(from_text(s, to_text(w)) == w);
}

TEST_CASE("json serialization round trip") {
  std::mt19937_64 rng(17);
  Signature s{1, 2};
  for (int i = 0; i < 40; ++i) {
    Multivector v = random_mv(s, rng, 6);
    REQUIRE(from_json(to_json(v)) == v);
  }
}
