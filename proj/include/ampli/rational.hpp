#pragma once

// Exact rationals. GMP's mpq_class keeps every value in lowest terms with a
// positive denominator as long as values are produced by arithmetic or by
// parse_rat below.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "ampli/error.hpp"

namespace ampli {

using Rat = mpq_class;
using Int = mpz_class;
using QVector = std::vector<Rat>;

inline int sign(const Rat& r) { return sgn(r); }

/// n/d in lowest terms. mpq_class(n, d) alone does not canonicalize, and
/// GMP arithmetic on non-canonical values is undefined.
inline Rat make_rat(long n, long d) {
  if (d == 0) throw ValidationError("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rat& r) { return r.get_str(10); }

/// Accepts "p", "-p", "p/q". Whitespace is not tolerated.
inline Rat parse_rat(std::string_view text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  std::string s(text);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw ValidationError("malformed rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw ValidationError("malformed rational literal: " + s);
  if (r.get_den() == 0) throw ValidationError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

/// Least common multiple of the denominators.
inline Int common_denominator(const QVector& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

/// Rescales a nonzero vector by a positive rational so that it becomes a
/// primitive integer vector. Projective direction and sign are unchanged.
inline QVector primitive(const QVector& v) {
  const Int l = common_denominator(v);
  Int g = 0;
  std::vector<Int> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
  return out;
}

}  // namespace ampli
