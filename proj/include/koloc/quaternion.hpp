#pragma once

#include <array>
#include <sstream>
#include <string>

#include "koloc/exact_matrix.hpp"
#include "koloc/rational.hpp"

namespace koloc {

// Quaternion over the rationals with the convention i j k = 1, so
// ij = -k, jk = -i, ki = -j.
struct Quat {
  Rat a = 0, b = 0, c = 0, d = 0;  // a + b i + c j + d k

  static Quat unit(int u) {
    Quat q;
    (u == 0 ? q.a : u == 1 ? q.b : u == 2 ? q.c : q.d) = 1;
    return q;
  }

  Rat comp(int u) const { return u == 0 ? a : u == 1 ? b : u == 2 ? c : d; }

  bool operator==(const Quat& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool is_zero() const { return koloc::is_zero(a) && koloc::is_zero(b) && koloc::is_zero(c) && koloc::is_zero(d); }

  Quat operator+(const Quat& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Quat operator-(const Quat& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Quat operator-() const { return {-a, -b, -c, -d}; }
  Quat operator*(const Rat& s) const { return {a * s, b * s, c * s, d * s}; }

  Quat operator*(const Quat& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a - c * o.d + d * o.c,
            a * o.c + c * o.a - d * o.b + b * o.d,
            a * o.d + d * o.a - b * o.c + c * o.b};
  }

  Quat conj() const { return {a, -b, -c, -d}; }

  Rat norm_sq() const { return a * a + b * b + c * c + d * d; }

  std::string str() const {
    return "(" + rat_str(a) + "," + rat_str(b) + "," + rat_str(c) + "," + rat_str(d) + ")";
  }
};

// 2x2 quaternion matrix.
struct QMat2 {
  std::array<std::array<Quat, 2>, 2> e{};

  static QMat2 zero() { return {}; }
  static QMat2 identity() {
    QMat2 m;
    m.e[0][0] = Quat::unit(0);
    m.e[1][1] = Quat::unit(0);
    return m;
  }

  bool operator==(const QMat2& o) const { return e == o.e; }

  QMat2 operator+(const QMat2& o) const {
    QMat2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m.e[r][c] = e[r][c] + o.e[r][c];
    return m;
  }

  QMat2 operator-() const {
    QMat2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m.e[r][c] = -e[r][c];
    return m;
  }

  QMat2 operator*(const QMat2& o) const {
    QMat2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m.e[r][c] = e[r][0] * o.e[0][c] + e[r][1] * o.e[1][c];
    return m;
  }

  // Conjugate transpose.
  QMat2 star() const {
    QMat2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m.e[r][c] = e[c][r].conj();
    return m;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[[" << e[0][0].str() << "," << e[0][1].str() << "],[" << e[1][0].str() << ","
       << e[1][1].str() << "]]";
    return os.str();
  }
};

// H(2) as a 16-dimensional rational vector space: index (row, col, unit).
inline int qmat2_flat_index(int r, int c, int u) { return (r * 2 + c) * 4 + u; }

inline RatVec qmat2_flatten(const QMat2& m) {
  RatVec v(16, Rat(0));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int u = 0; u < 4; ++u) v[qmat2_flat_index(r, c, u)] = m.e[r][c].comp(u);
  return v;
}

inline QMat2 qmat2_basis(int r, int c, int u) {
  QMat2 m;
  m.e[r][c] = Quat::unit(u);
  return m;
}

// Real 16x16 matrix of X -> M X on H(2).
inline ExactMat qmat2_left_mult(const QMat2& m) {
  ExactMat out(16, 16);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int u = 0; u < 4; ++u) {
        QMat2 img = m * qmat2_basis(r, c, u);
        RatVec col = qmat2_flatten(img);
        int j = qmat2_flat_index(r, c, u);
        for (int i = 0; i < 16; ++i)
          if (!is_zero(col[i])) out.set(i, j, col[i]);
      }
  return out;
}

// Real 16x16 matrix of X -> X M on H(2).
inline ExactMat qmat2_right_mult(const QMat2& m) {
  ExactMat out(16, 16);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int u = 0; u < 4; ++u) {
        QMat2 img = qmat2_basis(r, c, u) * m;
        RatVec col = qmat2_flatten(img);
        int j = qmat2_flat_index(r, c, u);
        for (int i = 0; i < 16; ++i)
          if (!is_zero(col[i])) out.set(i, j, col[i]);
      }
  return out;
}

}  // namespace koloc
