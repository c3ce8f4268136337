#pragma once

#include <utility>
#include <vector>

#include "koloc/graded_module.hpp"
#include "koloc/quaternion.hpp"

namespace koloc {

// The three explicit quaternionic representations: Cl(0,4) on H(2),
// Cl(5,0) on H(2) (+) H(2), and Cl(5,4) on (H(2) (+) H(2)) (x) H(2),
// realized as graded modules of real dimensions 16, 32 and 512.

// Cl(0,4) -> H(2): e1..e4 as antidiagonal quaternion-unit matrices.
inline QMat2 alpha_gen(int q) {
  if (q < 1 || q > 4) throw std::invalid_argument("alpha_gen index in 1..4");
  QMat2 m;
  if (q == 1) {
    m.e[0][1] = Quat::unit(0);
    m.e[1][0] = -Quat::unit(0);
  } else {
    m.e[0][1] = Quat::unit(q - 1);
    m.e[1][0] = Quat::unit(q - 1);
  }
  return m;
}

inline QMat2 alpha_gamma() { return alpha_gen(1) * alpha_gen(2) * alpha_gen(3) * alpha_gen(4); }

inline QMat2 alpha_of_blade(Blade mask) {
  QMat2 r = QMat2::identity();
  for (Blade t = mask; t != 0; t &= t - 1) r = r * alpha_gen(std::countr_zero(t) + 1);
  return r;
}

// Pair of quaternion matrices: an element of H(2) (+) H(2).
struct BPair {
  QMat2 first, second;

  bool operator==(const BPair& o) const { return first == o.first && second == o.second; }
  BPair operator*(const BPair& o) const { return {first * o.first, second * o.second}; }
  BPair operator-() const { return {-first, -second}; }
  static BPair identity() { return {QMat2::identity(), QMat2::identity()}; }
};

inline RatVec bpair_flatten(const BPair& b) {
  RatVec v(32, Rat(0));
  RatVec f = qmat2_flatten(b.first), s = qmat2_flatten(b.second);
  for (int i = 0; i < 16; ++i) {
    v[i] = f[i];
    v[16 + i] = s[i];
  }
  return v;
}

// Cl(5,0) -> H(2) (+) H(2): eps_0 -> (G, -G), eps_i -> (G a_i, -G a_i).
inline BPair beta_gen(int p) {
  if (p < 0 || p > 4) throw std::invalid_argument("beta_gen index in 0..4");
  QMat2 g = alpha_gamma();
  QMat2 x = (p == 0) ? g : g * alpha_gen(p);
  return {x, -x};
}

// Pure tensor in (H(2) (+) H(2)) (x) H(2); products of generator images stay pure.
struct FTensor {
  BPair x;
  QMat2 y;

  FTensor operator*(const FTensor& o) const { return {x * o.x, y * o.y}; }
};

// Cl(5,4) -> (H(2) (+) H(2)) (x) H(2).
inline FTensor f_gen(int idx) {
  // idx 0..4: eps_0..eps_4;  idx 5..8: e_1..e_4.
  if (idx < 0 || idx > 8) throw std::invalid_argument("f_gen index in 0..8");
  if (idx < 5) return {beta_gen(idx), alpha_gamma()};
  return {BPair::identity(), alpha_gen(idx - 4)};
}

inline RatVec ftensor_flatten(const FTensor& t) {
  RatVec xv = bpair_flatten(t.x);
  RatVec yv = qmat2_flatten(t.y);
  RatVec v(512, Rat(0));
  for (int i = 0; i < 32; ++i) {
    if (is_zero(xv[i])) continue;
    for (int j = 0; j < 16; ++j)
      if (!is_zero(yv[j])) v[i * 16 + j] = xv[i] * yv[j];
  }
  return v;
}

// Image of a Cl(5,4) basis blade (mask over generators eps_0..eps_4,e_1..e_4,
// ascending) as an element of the target algebra.
inline RatVec f_blade_image(Blade mask) {
  FTensor t = {BPair::identity(), QMat2::identity()};
  for (Blade b = mask; b != 0; b &= b - 1) t = t * f_gen(std::countr_zero(b));
  return ftensor_flatten(t);
}

// --- real matrices of structural maps -------------------------------------

// (A,B) -> (B,A) on H(2) (+) H(2).
inline ExactMat bpair_swap_mat() {
  ExactMat m(32, 32);
  for (int i = 0; i < 16; ++i) {
    m.set(i, 16 + i, rat(1));
    m.set(16 + i, i, rat(1));
  }
  return m;
}

inline ExactMat bpair_left_mult(const BPair& b) {
  return ExactMat::direct_sum(qmat2_left_mult(b.first), qmat2_left_mult(b.second));
}

inline ExactMat bpair_right_mult(const BPair& b) {
  return ExactMat::direct_sum(qmat2_right_mult(b.first), qmat2_right_mult(b.second));
}

// X -> G X G^{-1} on H(2) with G = alpha(Gamma); even part diagonal, odd
// part antidiagonal.
inline ExactMat qmat2_gamma_conj_mat() {
  QMat2 g = alpha_gamma();
  return qmat2_left_mult(g) * qmat2_right_mult(g);  // G^2 = 1
}

// The graded module picture of the representation alpha: dim 16.
inline GradedModule alpha_module() {
  GradedModule m;
  m.sig = {0, 4};
  m.dim = 16;
  for (int q = 1; q <= 4; ++q) m.gen.push_back(qmat2_left_mult(alpha_gen(q)));
  m.grading = qmat2_gamma_conj_mat();
  m.ip = ExactMat::identity(16);
  return m;
}

// The graded module picture of the representation beta: dim 32.
inline GradedModule beta_module() {
  GradedModule m;
  m.sig = {5, 0};
  m.dim = 32;
  for (int p = 0; p <= 4; ++p) m.gen.push_back(bpair_left_mult(beta_gen(p)));
  m.grading = bpair_swap_mat();
  m.ip = ExactMat::identity(32);
  return m;
}

// The graded module picture of f: dim 512, with right action data.
inline GradedModule f_module() {
  GradedModule m;
  m.sig = {5, 4};
  m.dim = 512;
  for (int i = 0; i <= 8; ++i) {
    FTensor g = f_gen(i);
    m.gen.push_back(ExactMat::kron(bpair_left_mult(g.x), qmat2_left_mult(g.y)));
    m.right_gen.push_back(ExactMat::kron(bpair_right_mult(g.x), qmat2_right_mult(g.y)));
  }
  m.grading = ExactMat::kron(bpair_swap_mat(), qmat2_gamma_conj_mat());
  m.ip = ExactMat::identity(512);
  return m;
}

// Joint +1 eigenspace of the right multiplications by eps_q e_q (q = 1..4)
// inside the 512-dimensional module: the 32-dimensional spinor space with
// grading, a left Cl(0,1) action, and the surviving left multiplications.
struct TildeS {
  ExactMat basis;                    // 512 x 32
  GradedModule cl_minus1;            // the (0,1)-module structure
  std::vector<ExactMat> left_gen;    // restricted left multiplications (9)
  ExactMat right_eps0;               // restricted right eps_0 action
};

inline TildeS tilde_s(const GradedModule& M) {
  if (M.sig.l != 5 || M.sig.m != 4) throw std::invalid_argument("tilde_s expects a Cl(5,4) module");
  if (M.right_gen.size() != 9) throw std::domain_error("tilde_s needs right action data");
  // Right multiplication by eps_q e_q: apply R_{eps_q} then R_{e_q}.
  ExactMat sys(4 * M.dim, M.dim);
  for (int q = 1; q <= 4; ++q) {
    ExactMat K = M.right_gen[4 + q] * M.right_gen[q];
    for (int d = 0; d < M.dim; ++d) K.add_to(d, d, rat(-1));
    for (int r = 0; r < M.dim; ++r)
      for (auto& [c, v] : K.row(r)) sys.add_to((q - 1) * M.dim + r, c, v);
  }
  ExactMat basis = sys.nullspace();
  if (basis.cols() != M.dim / 16)
    throw std::domain_error("tilde_s eigenspace dimension mismatch");
  TildeS out;
  out.basis = basis;
  auto restrict_op = [&](const ExactMat& op) { return ExactMat::solve(basis, op * basis); };
  for (auto& g : M.gen) out.left_gen.push_back(restrict_op(g));
  out.right_eps0 = restrict_op(M.right_gen[0]);
  GradedModule r;
  r.sig = {0, 1};
  r.dim = basis.cols();
  r.grading = restrict_op(M.grading);
  // Left Cl(0,1) generator: x -> (grading x) . eps_0.
  r.gen.push_back(restrict_op(M.right_gen[0] * M.grading));
  r.ip = basis.transpose() * M.ip * basis;
  out.cl_minus1 = r;
  return out;
}

// The explicit 32-dimensional comparison module S' (+) S' carried by a pair
// (A_0, A_1) of quaternion matrices.
struct SPrimePair {
  ExactMat grading;              // (A0,A1) -> (A1,A0)
  std::vector<ExactMat> c_tz;    // eps_0..eps_4 action
  ExactMat right_eps0;           // (A0,A1) -> (A0,-A1)
  ExactMat left_e0;              // (A0,A1) -> (A1,-A0)
};

inline SPrimePair s_prime_pair() {
  SPrimePair s;
  s.grading = bpair_swap_mat();
  QMat2 g = alpha_gamma();
  for (int j = 0; j <= 4; ++j) {
    QMat2 x = (j == 0) ? g : g * alpha_gen(j);
    // (A0, A1) -> (X A0 G, -X A1 G)
    ExactMat op0 = qmat2_left_mult(x) * qmat2_right_mult(g);
    s.c_tz.push_back(ExactMat::direct_sum(op0, -op0));
  }
  ExactMat id16 = ExactMat::identity(16);
  s.right_eps0 = ExactMat::direct_sum(id16, -id16);
  // left e_0 = right eps_0 after the grading swap
  s.left_e0 = s.right_eps0 * s.grading;
  return s;
}

// The intertwiner (A0,A1) (x) B -> (A0 B^*, A1 G B^* G^{-1}) as a 32 x 512
// real matrix.
inline ExactMat phi_reduction_map() {
  QMat2 g = alpha_gamma();
  ExactMat out(32, 512);
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        for (int u = 0; u < 4; ++u) {
          int xi = s * 16 + qmat2_flat_index(r, c, u);
          QMat2 a = qmat2_basis(r, c, u);
          for (int r2 = 0; r2 < 2; ++r2)
            for (int c2 = 0; c2 < 2; ++c2)
              for (int u2 = 0; u2 < 4; ++u2) {
                int yi = qmat2_flat_index(r2, c2, u2);
                QMat2 bstar = qmat2_basis(r2, c2, u2).star();
                QMat2 img = (s == 0) ? a * bstar : a * (g * bstar * g);
                RatVec f = qmat2_flatten(img);
                int col = xi * 16 + yi;
                for (int i = 0; i < 16; ++i)
                  if (!is_zero(f[i])) out.set(s * 16 + i, col, f[i]);
              }
        }
  return out;
}

}  // namespace koloc
