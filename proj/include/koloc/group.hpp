#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "koloc/clifford.hpp"
#include "koloc/exact_matrix.hpp"
#include "koloc/quaternion.hpp"
#include "koloc/quat_reps.hpp"

namespace koloc {

// The groups of even products of unit vectors from R^n, R^{s+}, R^{s-}
// inside Cl_{+-n} (x) Cl_(s+,s-), together with the two-to-one projection
// onto S(O(n) x O(s+) x O(s-)) and the translation maps into the eight
// central-extension groups of the H_n(s) family.

enum class SubspaceTag { N, SPlus, SMinus };

struct GroupParams {
  int n = 0, sp = 0, sm = 0;
  char variant = '+';

  Signature signature() const {
    return variant == '+' ? Signature{n + sp, sm} : Signature{sp, n + sm};
  }

  int subspace_dim(SubspaceTag t) const {
    switch (t) {
      case SubspaceTag::N: return n;
      case SubspaceTag::SPlus: return sp;
      default: return sm;
    }
  }

  int gen_index(SubspaceTag t, int i) const {
    if (variant == '+') {
      switch (t) {
        case SubspaceTag::N: return i;
        case SubspaceTag::SPlus: return n + i;
        default: return n + sp + i;
      }
    }
    switch (t) {
      case SubspaceTag::SPlus: return i;
      case SubspaceTag::N: return sp + i;
      default: return sp + n + i;
    }
  }

  // Clifford square of a unit vector from the tagged subspace.
  int square_sign(SubspaceTag t) const {
    if (t == SubspaceTag::SPlus) return +1;
    if (t == SubspaceTag::SMinus) return -1;
    return variant == '+' ? +1 : -1;
  }
};

struct TaggedVector {
  SubspaceTag tag;
  std::vector<Rat> coords;
};

struct GroupElement {
  GroupParams params;
  Multivector value;
  std::vector<TaggedVector> factors;  // membership certificate
};

inline Multivector embed_tagged(const GroupParams& p, const TaggedVector& v) {
  Signature sig = p.signature();
  Multivector out(sig);
  for (int i = 0; i < static_cast<int>(v.coords.size()); ++i)
    out.add_term(Blade(1) << p.gen_index(v.tag, i), v.coords[i]);
  return out;
}

inline GroupElement group_element(GroupParams params, const std::vector<TaggedVector>& factors) {
  if (factors.size() % 2 != 0) throw std::invalid_argument("group element needs an even factor count");
  GroupElement g;
  g.params = params;
  g.factors = factors;
  Multivector acc = Multivector::scalar(params.signature(), 1);
  for (auto& f : factors) {
    if (static_cast<int>(f.coords.size()) != params.subspace_dim(f.tag))
      throw std::invalid_argument("factor dimension does not match its subspace");
    Rat norm = 0;
    for (auto& c : f.coords) norm += c * c;
    if (norm != 1) throw std::invalid_argument("factor is not an exact unit vector");
    acc = acc * embed_tagged(params, f);
  }
  g.value = acc;
  return g;
}

inline Multivector group_inverse(const GroupElement& g) {
  Multivector inv = Multivector::scalar(g.params.signature(), 1);
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) {
    Multivector v = embed_tagged(g.params, *it);
    if (g.params.square_sign(it->tag) < 0) v = -v;  // v^{-1} = v / v^2
    inv = inv * v;
  }
  return inv;
}

inline GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  GroupElement g;
  g.params = a.params;
  g.factors = a.factors;
  g.factors.insert(g.factors.end(), b.factors.begin(), b.factors.end());
  g.value = a.value * b.value;
  return g;
}

struct OrthogonalTriple {
  ExactMat A, Bp, Bm;
};

// Conjugation action v -> g v g^{-1} on the three subspaces; exact, with the
// orthogonality and determinant-product invariants enforced.
inline OrthogonalTriple project_p(const GroupElement& g) {
  Multivector inv = group_inverse(g);
  auto block = [&](SubspaceTag tag) {
    int d = g.params.subspace_dim(tag);
    ExactMat m(d, d);
    for (int j = 0; j < d; ++j) {
      Multivector u = Multivector::generator(g.params.signature(), g.params.gen_index(tag, j));
      Multivector w = g.value * u * inv;
      // w must be degree one and supported in the same subspace.
      Rat seen_mass = 0;
      for (auto& [b, c] : w.terms()) {
        if (blade_degree(b) != 1) throw std::domain_error("conjugation left the degree-one space");
        int idx = std::countr_zero(b);
        bool placed = false;
        for (int i = 0; i < d; ++i)
          if (idx == g.params.gen_index(tag, i)) {
            m.set(i, j, c);
            placed = true;
            break;
          }
        if (!placed) throw std::domain_error("conjugation does not preserve the tagged subspaces");
        seen_mass += c * c;
      }
      (void)seen_mass;
    }
    return m;
  };
  OrthogonalTriple t{block(SubspaceTag::N), block(SubspaceTag::SPlus), block(SubspaceTag::SMinus)};
  auto orth = [](const ExactMat& m) { return m.transpose() * m == ExactMat::identity(m.rows()); };
  if (!orth(t.A) || !orth(t.Bp) || !orth(t.Bm)) throw std::domain_error("projection block not orthogonal");
  if (t.A.det() * t.Bp.det() * t.Bm.det() != 1)
    throw std::domain_error("determinant product condition violated");
  return t;
}

// ---------------------------------------------------------------------------
// Spin embedding: eps_i -> e'_0 e_0 e_i into Cl(0, (n+1)+(s+ +1)+s-).
//
// Target generator order: e'_0, e_0, e_1..e_{n+s+}, then the s- block.

inline Signature spin_embedding_signature(const GroupParams& p) {
  return Signature{0, 2 + p.n + p.sp + p.sm};
}

inline Multivector spin_embedding_vector(const GroupParams& p, const TaggedVector& f) {
  Signature st = spin_embedding_signature(p);
  Multivector out(st);
  if (f.tag == SubspaceTag::SMinus) {
    for (int i = 0; i < p.sm; ++i) out.add_term(Blade(1) << (2 + p.n + p.sp + i), f.coords[i]);
    return out;
  }
  int base = f.tag == SubspaceTag::N ? 2 : 2 + p.n;
  Multivector unit(st);
  for (int i = 0; i < static_cast<int>(f.coords.size()); ++i)
    unit.add_term(Blade(1) << (base + i), f.coords[i]);
  Multivector ep0 = Multivector::generator(st, 0);
  Multivector e0 = Multivector::generator(st, 1);
  return ep0 * e0 * unit;
}

inline Multivector spin_embedding(const GroupElement& g) {
  if (g.params.variant != '+') throw std::invalid_argument("spin embedding is defined on the + variant");
  Signature st = spin_embedding_signature(g.params);
  Multivector out = Multivector::scalar(st, 1);
  for (auto& f : g.factors) out = out * spin_embedding_vector(g.params, f);
  return out;
}

// Image of the generator eps_i (i = 0-based over the n + s+ eps block).
inline Multivector spin_embedding_gen_image(const GroupParams& p, int i) {
  Signature st = spin_embedding_signature(p);
  return Multivector::generator(st, 0) * Multivector::generator(st, 1) *
         Multivector::generator(st, 2 + i);
}

// ---------------------------------------------------------------------------
// H_n(s) translation.

// A class in H_n(s), represented by a pair canonicalized under the central
// (-1,-1) identification: the first nonzero coefficient of the first
// component is made positive.
struct HnClass {
  int s = 0;
  Multivector p;
  Multivector q;  // used for |s| <= 3
  Quat q4;        // used for s == 4

  void canonicalize() {
    if (p.is_zero()) throw std::logic_error("empty first component in an H_n(s) class");
    if (sgn(p.terms().begin()->second) < 0) {
      p = -p;
      if (s == 4)
        q4 = -q4;
      else
        q = -q;
    }
  }

  bool operator==(const HnClass& o) const {
    if (s != o.s || p != o.p) return false;
    return s == 4 ? q4 == o.q4 : q == o.q;
  }
};

inline HnClass hn_mul(const HnClass& a, const HnClass& b) {
  if (a.s != b.s) throw std::invalid_argument("multiplying classes of different H_n(s)");
  HnClass r;
  r.s = a.s;
  r.p = a.p * b.p;
  if (a.s == 4)
    r.q4 = a.q4 * b.q4;
  else
    r.q = a.q * b.q;
  r.canonicalize();
  return r;
}

namespace detail {

// Sorts the factor list into (N block, s block), tracking the sign from
// anticommuting distinct-block unit vectors past each other.
inline int split_factors(const GroupElement& g, std::vector<TaggedVector>& n_part,
                         std::vector<TaggedVector>& s_part) {
  int swaps = 0;
  for (auto& f : g.factors) {
    if (f.tag == SubspaceTag::N) {
      swaps += static_cast<int>(s_part.size());
      n_part.push_back(f);
    } else {
      s_part.push_back(f);
    }
  }
  return (swaps % 2 == 0) ? +1 : -1;
}

inline Multivector product_of(const GroupParams& params, const std::vector<TaggedVector>& fs) {
  Multivector acc = Multivector::scalar(params.signature(), 1);
  for (auto& f : fs) acc = acc * embed_tagged(params, f);
  return acc;
}

}  // namespace detail

inline GroupParams hn_source_params(int n, int s) {
  if (s < -3 || s > 4) throw std::invalid_argument("H_n(s) defined here for s in [-3, 4]");
  if (s >= 0) return GroupParams{n, s == 4 ? 0 : s, s == 4 ? 4 : 0, '+'};
  return GroupParams{n, 0, -s, '+'};
}

// Piecewise translation g u -> [g, u] / [g twist, twist^{-1} u] into the
// quotient-pair picture of H_n(s); for s = 4 the source element must lie in
// the diagonally embedded subgroup of G^+(n,0,4).
inline HnClass hn_translate(int s, const GroupElement& g) {
  if (s < -3 || s > 4) throw std::invalid_argument("s outside the supported table");
  GroupParams expect = hn_source_params(g.params.n, s);
  Signature have = g.params.signature(), want = expect.signature();
  if (g.params.variant != '+' || have != want)
    throw std::invalid_argument("group element does not match the source group of H_n(s)");

  std::vector<TaggedVector> n_part, s_part;
  int sign = detail::split_factors(g, n_part, s_part);
  Multivector gn = detail::product_of(g.params, n_part);
  Multivector u = detail::product_of(g.params, s_part) * rat(sign);

  HnClass out;
  out.s = s;

  if (s == 4) {
    if (n_part.size() % 2 != 0)
      throw std::domain_error("element is not in the embedded H_n(4) subgroup");
    // Map the Cl(0,4) block through the quaternionic picture and demand a
    // diagonal pair with equal entries.
    QMat2 au;
    bool any = false;
    for (auto& [b, c] : u.terms()) {
      Blade block_mask = b >> g.params.gen_index(SubspaceTag::SMinus, 0);
      if ((b & ((Blade(1) << g.params.gen_index(SubspaceTag::SMinus, 0)) - 1)) != 0)
        throw std::domain_error("u component strays outside the s block");
      QMat2 img = alpha_of_blade(block_mask);
      for (int r = 0; r < 2; ++r)
        for (int cc = 0; cc < 2; ++cc) au.e[r][cc] = au.e[r][cc] + img.e[r][cc] * c;
      any = true;
    }
    if (!any) throw std::domain_error("empty u component");
    if (!au.e[0][1].is_zero() || !au.e[1][0].is_zero() || !(au.e[0][0] == au.e[1][1]))
      throw std::domain_error("element is not in the embedded H_n(4) subgroup");
    out.p = gn;
    out.q4 = au.e[0][0];
    out.canonicalize();
    return out;
  }

  out.q = u;
  out.p = gn;
  if (n_part.size() % 2 == 1) {
    int d = std::abs(s);
    Signature sig = g.params.signature();
    Multivector twist(sig);
    if (d == 3) {
      Blade mask = 0;
      for (int i = 0; i < 3; ++i) mask |= Blade(1) << g.params.gen_index(SubspaceTag::SMinus, i);
      if (s > 0) {
        mask = 0;
        for (int i = 0; i < 3; ++i) mask |= Blade(1) << g.params.gen_index(SubspaceTag::SPlus, i);
      }
      twist = Multivector::basis_blade(sig, mask);
    } else {
      SubspaceTag t = s > 0 ? SubspaceTag::SPlus : SubspaceTag::SMinus;
      twist = Multivector::generator(sig, g.params.gen_index(t, 0));
    }
    Multivector tw2 = twist * twist;
    Rat sq = tw2.scalar_part();  // +-1
    Multivector twist_inv = twist * sq;
    out.p = gn * twist;
    out.q = twist_inv * out.q;
  }
  if (out.p.is_zero()) out.p = Multivector::scalar(g.params.signature(), 1);
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Seeded sampling of exact rational unit vectors (Pythagorean parametrization
// plus coordinate placement and signs).

class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  Rat small_rational() {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    return rat(num(rng_), den(rng_));
  }

  std::vector<Rat> unit_vector(int dim) {
    if (dim < 1) throw std::invalid_argument("unit vector needs dim >= 1");
    std::vector<Rat> v(dim, Rat(0));
    std::uniform_int_distribution<int> coin(0, 1);
    if (dim == 1) {
      v[0] = coin(rng_) ? rat(1) : rat(-1);
      return v;
    }
    std::uniform_int_distribution<int> pos(0, dim - 1);
    int i = pos(rng_), j = pos(rng_);
    while (j == i) j = pos(rng_);
    Rat t = small_rational();
    Rat denom = 1 + t * t;
    v[i] = (1 - t * t) / denom;
    v[j] = (2 * t) / denom;
    if (coin(rng_)) v[i] = -v[i];
    if (coin(rng_)) v[j] = -v[j];
    return v;
  }

  TaggedVector tagged_unit(const GroupParams& p, SubspaceTag tag) {
    return {tag, unit_vector(p.subspace_dim(tag))};
  }

  // Random element with the requested number of factor pairs; tags are drawn
  // from the nonempty subspaces.
  GroupElement random_element(const GroupParams& p, int pairs) {
    std::vector<SubspaceTag> tags;
    if (p.n > 0) tags.push_back(SubspaceTag::N);
    if (p.sp > 0) tags.push_back(SubspaceTag::SPlus);
    if (p.sm > 0) tags.push_back(SubspaceTag::SMinus);
    if (tags.empty()) throw std::invalid_argument("no subspace to sample from");
    std::uniform_int_distribution<std::size_t> pick(0, tags.size() - 1);
    std::vector<TaggedVector> fs;
    for (int i = 0; i < 2 * pairs; ++i) fs.push_back(tagged_unit(p, tags[pick(rng_)]));
    return group_element(p, fs);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace koloc
