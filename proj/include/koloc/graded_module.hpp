#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "koloc/clifford.hpp"
#include "koloc/exact_matrix.hpp"

namespace koloc {

// Finite-dimensional Z/2-graded Clifford module over the rationals.
//
// The acting signature (b, a) lists b generator actions squaring to +1
// followed by a actions squaring to -1. The optional skew operator is
// skew-adjoint with respect to `ip`, a symmetric Gram matrix (identity for
// every canonically constructed module; restrictions may produce non-trivial
// Gram data).
struct GradedModule {
  Signature sig;
  int dim = 0;
  std::vector<ExactMat> gen;
  ExactMat grading;
  std::optional<ExactMat> skew;
  ExactMat ip;
  std::vector<ExactMat> right_gen;  // right multiplications, for regular modules

  bool has_skew() const { return skew.has_value() && !skew->is_zero_matrix(); }
};

// The paper-fixed 2-dimensional Cl(1,1) module: rho(eps) antidiagonal (1,1),
// rho(e) antidiagonal (-1,1), grading diag(1,-1).
inline GradedModule v1_module() {
  GradedModule m;
  m.sig = {1, 1};
  m.dim = 2;
  m.gen = {ExactMat::from_rows({{rat(0), rat(1)}, {rat(1), rat(0)}}),
           ExactMat::from_rows({{rat(0), rat(-1)}, {rat(1), rat(0)}})};
  m.grading = ExactMat::from_rows({{rat(1), rat(0)}, {rat(0), rat(-1)}});
  m.ip = ExactMat::identity(2);
  return m;
}

// Graded tensor of modules: first-factor generators act as g (x) 1, second
// factor as grading (x) h; the combined generator list keeps eps-blocks
// before e-blocks.
inline GradedModule module_tensor(const GradedModule& A, const GradedModule& B) {
  GradedModule m;
  m.sig = {A.sig.l + B.sig.l, A.sig.m + B.sig.m};
  m.dim = A.dim * B.dim;
  ExactMat idB = ExactMat::identity(B.dim);
  auto lift_first = [&](const ExactMat& g) { return ExactMat::kron(g, idB); };
  auto lift_second = [&](const ExactMat& h) { return ExactMat::kron(A.grading, h); };
  for (int i = 0; i < A.sig.l; ++i) m.gen.push_back(lift_first(A.gen[i]));
  for (int i = 0; i < B.sig.l; ++i) m.gen.push_back(lift_second(B.gen[i]));
  for (int i = 0; i < A.sig.m; ++i) m.gen.push_back(lift_first(A.gen[A.sig.l + i]));
  for (int i = 0; i < B.sig.m; ++i) m.gen.push_back(lift_second(B.gen[B.sig.l + i]));
  m.grading = ExactMat::kron(A.grading, B.grading);
  if (A.skew && B.skew)
    m.skew = ExactMat::kron(*A.skew, idB) + ExactMat::kron(A.grading, *B.skew);
  else if (A.skew)
    m.skew = ExactMat::kron(*A.skew, idB);
  else if (B.skew)
    m.skew = ExactMat::kron(A.grading, *B.skew);
  m.ip = ExactMat::kron(A.ip, B.ip);
  return m;
}

inline GradedModule module_direct_sum(const GradedModule& A, const GradedModule& B) {
  if (A.sig != B.sig) throw std::invalid_argument("direct sum of modules over different signatures");
  GradedModule m;
  m.sig = A.sig;
  m.dim = A.dim + B.dim;
  for (int i = 0; i < A.sig.total(); ++i) m.gen.push_back(ExactMat::direct_sum(A.gen[i], B.gen[i]));
  m.grading = ExactMat::direct_sum(A.grading, B.grading);
  if (A.skew || B.skew) {
    ExactMat sa = A.skew ? *A.skew : ExactMat(A.dim, A.dim);
    ExactMat sb = B.skew ? *B.skew : ExactMat(B.dim, B.dim);
    m.skew = ExactMat::direct_sum(sa, sb);
  }
  m.ip = ExactMat::direct_sum(A.ip, B.ip);
  return m;
}

// V_n := V_1^{(x) n} over Cl(n,n); n = 0 gives the trivial even line.
inline GradedModule vn_module(int n) {
  if (n < 0) throw std::invalid_argument("vn_module: negative n");
  GradedModule m;
  m.sig = {0, 0};
  m.dim = 1;
  m.grading = ExactMat::identity(1);
  m.ip = ExactMat::identity(1);
  for (int i = 0; i < n; ++i) m = module_tensor(m, v1_module());
  return m;
}

inline GradedModule parity_flip(const GradedModule& M) {
  GradedModule m = M;
  m.grading = -M.grading;
  return m;
}

// Left regular graded module of Cl_(l,m); also records right multiplications.
inline GradedModule regular_module(Signature sig) {
  sig.validate();
  int dim = 1 << sig.total();
  GradedModule m;
  m.sig = sig;
  m.dim = dim;
  for (int g = 0; g < sig.total(); ++g) {
    Blade gb = Blade(1) << g;
    ExactMat L(dim, dim), R(dim, dim);
    for (Blade b = 0; b < static_cast<Blade>(dim); ++b) {
      auto [sl, tl] = blade_mul(gb, b, sig);
      L.set(static_cast<int>(tl), static_cast<int>(b), rat(sl));
      auto [sr, tr] = blade_mul(b, gb, sig);
      R.set(static_cast<int>(tr), static_cast<int>(b), rat(sr));
    }
    m.gen.push_back(L);
    m.right_gen.push_back(R);
  }
  ExactMat G(dim, dim);
  for (Blade b = 0; b < static_cast<Blade>(dim); ++b)
    G.set(static_cast<int>(b), static_cast<int>(b), rat((blade_degree(b) & 1) ? -1 : 1));
  m.grading = G;
  m.ip = ExactMat::identity(dim);
  return m;
}

// Action of a basis blade, lowest generator index leftmost.
inline ExactMat blade_action(const GradedModule& M, Blade blade) {
  ExactMat r = ExactMat::identity(M.dim);
  for (Blade t = blade; t != 0; t &= t - 1) r = r * M.gen[std::countr_zero(t)];
  return r;
}

// Right multiplication by a basis blade (regular modules only).
inline ExactMat right_blade_action(const GradedModule& M, Blade blade) {
  if (M.right_gen.empty()) throw std::domain_error("module carries no right action data");
  ExactMat r = ExactMat::identity(M.dim);
  for (Blade t = blade; t != 0; t &= t - 1) {
    int i = std::countr_zero(t);
    r = M.right_gen[i] * r;  // x * g1 * g2: apply R_{g1} first
  }
  return r;
}

// Reports every violated module invariant; empty report means valid.
inline std::vector<std::string> verify_module(const GradedModule& M) {
  std::vector<std::string> bad;
  int n = M.dim;
  auto shape_ok = [&](const ExactMat& x) { return x.rows() == n && x.cols() == n; };
  if (static_cast<int>(M.gen.size()) != M.sig.total()) {
    bad.push_back("generator count does not match signature");
    return bad;
  }
  if (!shape_ok(M.grading) || !shape_ok(M.ip)) {
    bad.push_back("operator shape mismatch");
    return bad;
  }
  for (auto& g : M.gen)
    if (!shape_ok(g)) {
      bad.push_back("generator shape mismatch");
      return bad;
    }
  ExactMat id = ExactMat::identity(n);
  if (M.grading * M.grading != id) bad.push_back("grading^2 != 1");
  if (M.ip.transpose() != M.ip) bad.push_back("inner product not symmetric");
  for (int i = 0; i < M.sig.total(); ++i) {
    ExactMat sq = M.gen[i] * M.gen[i];
    int want = M.sig.square_sign(i);
    if (sq != (want > 0 ? id : -id))
      bad.push_back("generator " + std::to_string(i + 1) + " squares to the wrong sign");
    if (!M.gen[i].anticommutes_with(M.grading))
      bad.push_back("generator " + std::to_string(i + 1) + " does not anticommute with grading");
    for (int j = i + 1; j < M.sig.total(); ++j)
      if (!M.gen[i].anticommutes_with(M.gen[j]))
        bad.push_back("generators " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      " do not anticommute");
  }
  if (M.skew) {
    const ExactMat& s = *M.skew;
    if (!shape_ok(s)) {
      bad.push_back("skew shape mismatch");
      return bad;
    }
    ExactMat ws = M.ip * s;
    if (ws.transpose() != -ws) bad.push_back("skew operator not skew-adjoint");
    if (!s.anticommutes_with(M.grading)) bad.push_back("skew does not anticommute with grading");
    for (int i = 0; i < M.sig.total(); ++i)
      if (!s.anticommutes_with(M.gen[i]))
        bad.push_back("skew does not anticommute with generator " + std::to_string(i + 1));
  }
  return bad;
}

// Restricts all structure to the span of the given basis columns.
inline GradedModule restrict_module(const GradedModule& M, const ExactMat& basis, Signature new_sig,
                                    const std::vector<int>& gen_indices) {
  GradedModule r;
  r.sig = new_sig;
  r.dim = basis.cols();
  for (int i : gen_indices) r.gen.push_back(ExactMat::solve(basis, M.gen[i] * basis));
  r.grading = ExactMat::solve(basis, M.grading * basis);
  if (M.skew) r.skew = ExactMat::solve(basis, *M.skew * basis);
  r.ip = basis.transpose() * M.ip * basis;
  return r;
}

// Restriction to the joint +1 eigenspace of eps_i e_i for i = 1..b.
// Output: module over Cl(0, a-b), dimension dim / 2^b.
inline GradedModule reduce_bb(const GradedModule& M, int b) {
  if (b < 0 || b > M.sig.l) throw std::invalid_argument("reduce_bb: b out of range");
  if (M.sig.m < b) throw std::invalid_argument("reduce_bb: needs at least b negative generators");
  if (b == 0) return M;
  // Stack (K_i - 1) vertically and take the common nullspace.
  ExactMat stack(0, 0);
  std::vector<ExactMat> parts;
  for (int i = 0; i < b; ++i) {
    ExactMat K = M.gen[i] * M.gen[M.sig.l + i];
    for (int d = 0; d < M.dim; ++d) K.add_to(d, d, rat(-1));
    parts.push_back(K);
  }
  ExactMat sys(b * M.dim, M.dim);
  for (int i = 0; i < b; ++i)
    for (int r = 0; r < M.dim; ++r)
      for (auto& [c, v] : parts[i].row(r)) sys.add_to(i * M.dim + r, c, v);
  ExactMat basis = sys.nullspace();
  long expect = M.dim >> b;
  if (basis.cols() != expect)
    throw std::domain_error("joint eigenspace dimension " + std::to_string(basis.cols()) +
                            " != dim/2^b = " + std::to_string(expect) + " (invalid module)");
  std::vector<int> keep;
  for (int i = b; i < M.sig.m; ++i) keep.push_back(M.sig.l + i);
  return restrict_module(M, basis, Signature{M.sig.l - b, M.sig.m - b}, keep);
}

// The 2^b-dimensional standard factor used to reconstruct a module from its
// reduce_bb image: M is isomorphic to standard factor (x) reduce_bb(M, b).
inline GradedModule standard_vb_factor(int b) { return vn_module(b); }

inline std::vector<Rat> blade_traces(const GradedModule& M) {
  std::vector<Rat> out;
  Blade n = Blade(1) << M.sig.total();
  for (Blade b = 0; b < n; ++b) out.push_back(blade_action(M, b).trace());
  return out;
}

// Traces of blade . grading, refining blade_traces to a complete invariant.
inline std::vector<Rat> blade_supertraces(const GradedModule& M) {
  std::vector<Rat> out;
  Blade n = Blade(1) << M.sig.total();
  for (Blade b = 0; b < n; ++b) out.push_back((M.grading * blade_action(M, b)).trace());
  return out;
}

inline int module_commutant_dimension(const GradedModule& M) {
  std::vector<ExactMat> mats = M.gen;
  mats.push_back(M.grading);
  return commutant_dimension(mats, M.dim);
}

}  // namespace koloc
