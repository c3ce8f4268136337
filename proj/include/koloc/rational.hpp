#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace koloc {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "a" or "a/b" with optional sign.
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::int64_t rat_num_i64(const Rat& r) {
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("numerator exceeds 64 bits");
  return static_cast<std::int64_t>(r.get_num().get_si());
}

inline std::int64_t rat_den_i64(const Rat& r) {
  if (!r.get_den().fits_slong_p()) throw std::overflow_error("denominator exceeds 64 bits");
  return static_cast<std::int64_t>(r.get_den().get_si());
}

}  // namespace koloc
