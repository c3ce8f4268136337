#pragma once

#include <stdexcept>
#include <string>

#include "koloc/graded_module.hpp"

namespace koloc {

// Value in KO^{-k}(pt) under the eight-fold pattern: k = 0,4 integers,
// k = 1,2 mod-2 bits, otherwise the trivial group.
struct KOClass {
  enum class Kind { Integer, Mod2, Trivial };

  int k = 0;  // class lives in KO^{-k}(pt), k reduced mod 8
  Kind kind = Kind::Trivial;
  long value = 0;

  static Kind kind_for(int k) {
    int r = ((k % 8) + 8) % 8;
    if (r == 0 || r == 4) return Kind::Integer;
    if (r == 1 || r == 2) return Kind::Mod2;
    return Kind::Trivial;
  }

  static KOClass make(int k, long value) {
    KOClass c;
    c.k = ((k % 8) + 8) % 8;
    c.kind = kind_for(c.k);
    switch (c.kind) {
      case Kind::Integer:
        c.value = value;
        break;
      case Kind::Mod2:
        c.value = ((value % 2) + 2) % 2;
        break;
      case Kind::Trivial:
        c.value = 0;
        break;
    }
    return c;
  }

  static KOClass zero(int k) { return make(k, 0); }

  bool is_zero() const { return value == 0; }

  KOClass operator+(const KOClass& o) const {
    if (k != o.k) throw std::invalid_argument("adding KO classes of different degrees");
    return make(k, value + o.value);
  }

  bool operator==(const KOClass& o) const { return k == o.k && kind == o.kind && value == o.value; }

  std::string str() const {
    switch (kind) {
      case Kind::Integer:
        return "Z:" + std::to_string(value);
      case Kind::Mod2:
        return "Z/2:" + std::to_string(value);
      default:
        return "0";
    }
  }
};

// Atiyah-Bott-Shapiro style classification of a graded Cl(b,a) module with an
// optional skew operator: split off the image of the skew, reduce to a
// Cl(0, a-b) module, and read off the multiplicity invariant of the degree.
inline KOClass ko_class(const GradedModule& M_in) {
  const int b = M_in.sig.l, a = M_in.sig.m;
  if (a < b)
    throw std::domain_error("ko_class currently requires at least as many negative generators");
  int K = a - b;
  int k = K % 8;
  KOClass::Kind kind = KOClass::kind_for(k);
  if (kind == KOClass::Kind::Trivial) return KOClass::zero(k);
  if (K > 7)
    throw std::domain_error("ko_class: nontrivial degrees with a-b > 7 unsupported");

  GradedModule M = M_in;
  if (M.has_skew()) {
    // ker(skew) is a graded submodule; the complement carries an invertible
    // skew and contributes the zero class.
    ExactMat kb = M.skew->nullspace();
    std::vector<int> all;
    for (int i = 0; i < M.sig.total(); ++i) all.push_back(i);
    M = restrict_module(M, kb, M.sig, all);
    M.skew.reset();
  }
  if (b > 0) M = reduce_bb(M, b);

  long dim = M.dim;
  Rat grading_trace = M.grading.trace();
  if (grading_trace.get_den() != 1) throw std::logic_error("non-integer grading trace");
  long gt = static_cast<long>(grading_trace.get_num().get_si());

  switch (K) {
    case 0:
      // Two irreducibles: the even and the odd line; value = dim0 - dim1.
      return KOClass::make(k, gt);
    case 1: {
      if (dim % 2 != 0 || gt != 0) throw std::logic_error("invalid Cl(0,1) module profile");
      return KOClass::make(k, (dim / 2) % 2);
    }
    case 2: {
      if (dim % 4 != 0 || gt != 0) throw std::logic_error("invalid Cl(0,2) module profile");
      return KOClass::make(k, (dim / 4) % 2);
    }
    case 4: {
      // The two irreducibles are separated by the volume element's action on
      // the even part: value = (dim of +1 part - dim of -1 part) / 4.
      if (dim % 8 != 0) throw std::logic_error("invalid Cl(0,4) module profile");
      ExactMat omega = blade_action(M, 0b1111);
      Rat t = ((omega + omega * M.grading) * Rat(1, 2)).trace();
      if (t.get_den() != 1) throw std::logic_error("non-integer volume trace");
      long tv = static_cast<long>(t.get_num().get_si());
      if (tv % 4 != 0) throw std::logic_error("volume trace not divisible by 4");
      return KOClass::make(k, tv / 4);
    }
    default:
      throw std::logic_error("unreachable KO degree");
  }
}

// The paper's mod-2 formula for degree-one cycles: the kernel dimension of
// the skew operator taken from the even part to the odd part, mod 2.
inline long mod2_index_even_kernel(const GradedModule& M) {
  ExactMat even = M.grading.eigenspace(rat(1));
  ExactMat s = M.skew ? *M.skew : ExactMat(M.dim, M.dim);
  ExactMat mapped = s * even;
  long dim_ker = even.cols() - mapped.rank();
  return dim_ker % 2;
}

}  // namespace koloc
