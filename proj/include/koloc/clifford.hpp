#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "koloc/rational.hpp"

namespace koloc {

// Signature (l, m): l generators squaring to +1 (eps_1..eps_l) followed by
// m generators squaring to -1 (e_1..e_m), in one fixed global order.
struct Signature {
  int l = 0;
  int m = 0;

  int total() const { return l + m; }
  bool operator==(const Signature& o) const { return l == o.l && m == o.m; }
  bool operator!=(const Signature& o) const { return !(*this == o); }

  void validate() const {
    if (l < 0 || m < 0) throw std::invalid_argument("negative signature");
    if (total() > 24) throw std::invalid_argument("signature too large for blade masks");
  }

  // +1 for eps-type generator index, -1 for e-type.
  int square_sign(int idx) const { return idx < l ? +1 : -1; }

  std::string str() const { return "(" + std::to_string(l) + "," + std::to_string(m) + ")"; }
};

using Blade = std::uint32_t;  // bit i set  <=>  generator i present, ascending order

// Sign and resulting index set of the product of two basis blades.
inline std::pair<int, Blade> blade_mul(Blade a, Blade b, const Signature& sig) {
  int swaps = 0;
  for (Blade t = b; t != 0; t &= t - 1) {
    int j = std::countr_zero(t);
    swaps += std::popcount(a >> (j + 1));
  }
  int sign = (swaps & 1) ? -1 : +1;
  for (Blade c = a & b; c != 0; c &= c - 1) {
    if (sig.square_sign(std::countr_zero(c)) < 0) sign = -sign;
  }
  return {sign, a ^ b};
}

inline int blade_degree(Blade b) { return std::popcount(b); }

// Exact sparse element of Cl_(l,m) over the rationals.
class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(Signature sig) : sig_(sig) { sig_.validate(); }

  static Multivector scalar(Signature sig, const Rat& c) {
    Multivector v(sig);
    v.add_term(0, c);
    return v;
  }

  static Multivector basis_blade(Signature sig, Blade b, const Rat& c = 1) {
    Multivector v(sig);
    if (b >> sig.total()) throw std::invalid_argument("blade outside signature");
    v.add_term(b, c);
    return v;
  }

  static Multivector generator(Signature sig, int idx) {
    if (idx < 0 || idx >= sig.total()) throw std::invalid_argument("generator index out of range");
    return basis_blade(sig, Blade(1) << idx);
  }

  const Signature& sig() const { return sig_; }
  const std::map<Blade, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  Rat scalar_part() const { return coeff(0); }

  void add_term(Blade b, const Rat& c) {
    if (koloc::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (koloc::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool operator==(const Multivector& o) const { return sig_ == o.sig_ && terms_ == o.terms_; }
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  Multivector operator+(const Multivector& o) const {
    check_sig(o);
    Multivector r = *this;
    for (auto& [b, c] : o.terms_) r.add_term(b, c);
    return r;
  }

  Multivector operator-(const Multivector& o) const {
    check_sig(o);
    Multivector r = *this;
    for (auto& [b, c] : o.terms_) r.add_term(b, -c);
    return r;
  }

  Multivector operator-() const {
    Multivector r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }

  Multivector operator*(const Rat& s) const {
    Multivector r(sig_);
    if (koloc::is_zero(s)) return r;
    r.terms_ = terms_;
    for (auto& [b, c] : r.terms_) c *= s;
    return r;
  }

  // Clifford product; generator relations eps^2=+1, e^2=-1, anticommutation.
  Multivector operator*(const Multivector& o) const {
    check_sig(o);
    Multivector r(sig_);
    for (auto& [ba, ca] : terms_)
      for (auto& [bb, cb] : o.terms_) {
        auto [sg, b] = blade_mul(ba, bb, sig_);
        Rat prod = ca * cb;
        r.add_term(b, sg > 0 ? prod : Rat(-prod));
      }
    return r;
  }

  bool is_homogeneous(int parity) const {
    for (auto& [b, c] : terms_)
      if ((blade_degree(b) & 1) != parity) return false;
    return true;
  }

 private:
  void check_sig(const Multivector& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
  }

  Signature sig_;
  std::map<Blade, Rat> terms_;
};

inline Multivector operator*(const Rat& s, const Multivector& v) { return v * s; }

// Degree-1 element with the given coordinates; v^2 = Q(v) with Q = Q_l - Q_m.
inline Multivector embed_vector(Signature sig, const std::vector<Rat>& coords) {
  sig.validate();
  if (static_cast<int>(coords.size()) != sig.total())
    throw std::invalid_argument("coordinate count does not match signature");
  Multivector v(sig);
  for (int i = 0; i < sig.total(); ++i) v.add_term(Blade(1) << i, coords[i]);
  return v;
}

inline Multivector grading_involution(const Multivector& a) {
  Multivector r(a.sig());
  for (auto& [b, c] : a.terms()) r.add_term(b, (blade_degree(b) & 1) ? -c : c);
  return r;
}

inline Multivector even_part(const Multivector& a) {
  Multivector r(a.sig());
  for (auto& [b, c] : a.terms())
    if (!(blade_degree(b) & 1)) r.add_term(b, c);
  return r;
}

inline Multivector odd_part(const Multivector& a) {
  Multivector r(a.sig());
  for (auto& [b, c] : a.terms())
    if (blade_degree(b) & 1) r.add_term(b, c);
  return r;
}

// Ordered product of all generators.
inline Multivector volume_element(Signature sig) {
  sig.validate();
  return Multivector::basis_blade(sig, (Blade(1) << sig.total()) - 1);
}

// Algebra map Cl_(l1,m1) x Cl_(l2,m2) -> Cl_(l1+l2, m1+m2) realizing the
// graded tensor product: first-factor generators keep their slots, second
// factor shifts behind them; the Koszul sign comes out of the target product.
inline Blade tensor_shift_blade(Blade b, const Signature& from, const Signature& into, bool second) {
  Blade out = 0;
  for (Blade t = b; t != 0; t &= t - 1) {
    int i = std::countr_zero(t);
    int target;
    if (i < from.l)
      target = (second ? into.l - from.l : 0) + i;  // eps block
    else
      target = into.l + (second ? into.m - from.m : 0) + (i - from.l);  // e block
    out |= Blade(1) << target;
  }
  return out;
}

inline Multivector graded_tensor(const Multivector& a, const Multivector& b) {
  Signature sa = a.sig(), sb = b.sig();
  Signature st{sa.l + sb.l, sa.m + sb.m};
  st.validate();
  Multivector r(st);
  for (auto& [ba, ca] : a.terms())
    for (auto& [bb, cb] : b.terms()) {
      Blade ia = tensor_shift_blade(ba, sa, st, false);
      Blade ib = tensor_shift_blade(bb, sb, st, true);
      auto [sg, blade] = blade_mul(ia, ib, st);
      Rat prod = ca * cb;
      r.add_term(blade, sg > 0 ? prod : Rat(-prod));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Serialization: text form "coeff * eps1 eps2 e1 + ..." and a JSON form.

inline std::string to_text(const Multivector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [b, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << " *";
    if (b == 0) {
      os << " 1";
    } else {
      for (Blade t = b; t != 0; t &= t - 1) {
        int i = std::countr_zero(t);
        if (i < v.sig().l)
          os << " eps" << (i + 1);
        else
          os << " e" << (i - v.sig().l + 1);
      }
    }
  }
  return os.str();
}

inline Multivector from_text(Signature sig, const std::string& text) {
  Multivector v(sig);
  std::string s = text;
  if (s == "0") return v;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() : next + 3;
    std::istringstream is(term);
    std::string coeff_tok, star;
    if (!(is >> coeff_tok >> star) || star != "*") throw std::invalid_argument("bad multivector term: " + term);
    Rat c = rat_parse(coeff_tok);
    Blade b = 0;
    std::string g;
    while (is >> g) {
      if (g == "1") continue;
      int idx;
      if (g.rfind("eps", 0) == 0)
        idx = std::stoi(g.substr(3)) - 1;
      else if (g.rfind("e", 0) == 0)
        idx = sig.l + std::stoi(g.substr(1)) - 1;
      else
        throw std::invalid_argument("bad generator token: " + g);
      if (idx < 0 || idx >= sig.total()) throw std::invalid_argument("generator outside signature: " + g);
      b |= Blade(1) << idx;
    }
    v.add_term(b, c);
  }
  return v;
}

inline nlohmann::json to_json(const Multivector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [b, c] : v.terms()) {
    nlohmann::json eps = nlohmann::json::array(), e = nlohmann::json::array();
    for (Blade t = b; t != 0; t &= t - 1) {
      int i = std::countr_zero(t);
      if (i < v.sig().l)
        eps.push_back(i + 1);
      else
        e.push_back(i - v.sig().l + 1);
    }
    terms.push_back({{"eps", eps}, {"e", e}, {"num", rat_num_i64(c)}, {"den", rat_den_i64(c)}});
  }
  return {{"sig", {v.sig().l, v.sig().m}}, {"terms", terms}};
}

inline Multivector from_json(const nlohmann::json& j) {
  Signature sig{j.at("sig").at(0).get<int>(), j.at("sig").at(1).get<int>()};
  Multivector v(sig);
  for (auto& t : j.at("terms")) {
    Blade b = 0;
    for (auto& i : t.at("eps")) b |= Blade(1) << (i.get<int>() - 1);
    for (auto& i : t.at("e")) b |= Blade(1) << (sig.l + i.get<int>() - 1);
    v.add_term(b, Rat(t.at("num").get<long>(), t.at("den").get<long>()));
  }
  return v;
}

}  // namespace koloc
