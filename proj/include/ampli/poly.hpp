#pragma once

// Polynomials over Q.
//
//   PolyQ   sparse multivariate polynomial in at most six variables, with
//           dense exponent vectors.
//   UPoly   dense univariate polynomial, used for curve restrictions and
//           one-variable rational functions.
//   RatFun1 reduced quotient of two UPoly with monic denominator.
//
// substitute() evaluates a PolyQ at a tuple of values from any commutative
// ring (Rat, UPoly, PolyQ), which is how chart pullbacks and restrictions to
// parametrized curves are built.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ampli/error.hpp"
#include "ampli/rational.hpp"

namespace ampli {

inline constexpr std::size_t kMaxVars = 6;
using Exponent = std::array<std::uint16_t, kMaxVars>;

inline unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

class PolyQ {
 public:
  using Terms = std::map<Exponent, Rat, std::greater<>>;

  PolyQ() = default;
  explicit PolyQ(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVars) throw ValidationError("PolyQ supports at most 6 variables");
  }
  PolyQ(std::size_t nvars, const Rat& c) : PolyQ(nvars) {
    if (c != 0) terms_[Exponent{}] = c;
  }

  static PolyQ variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw ValidationError("variable index out of range");
    PolyQ p(nvars);
    Exponent e{};
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }

  static PolyQ monomial(std::size_t nvars, const Exponent& e, const Rat& c = 1) {
    PolyQ p(nvars);
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Rat& c) {
    for (std::size_t i = nvars_; i < kMaxVars; ++i)
      if (e[i] != 0) throw ValidationError("exponent uses a variable beyond nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
  }

  bool is_homogeneous(unsigned d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  Rat evaluate(std::span<const Rat> x) const;

  PolyQ derivative(std::size_t var) const {
    PolyQ out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      out.add_term(f, c * static_cast<unsigned long>(e[var]));
    }
    return out;
  }

  PolyQ& operator+=(const PolyQ& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyQ& operator-=(const PolyQ& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  PolyQ& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator-(PolyQ a) { return a *= Rat(-1); }
  friend PolyQ operator*(PolyQ a, const Rat& s) { return a *= s; }
  friend PolyQ operator*(const Rat& s, PolyQ a) { return a *= s; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    a.check_compatible(b);
    PolyQ out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    return out;
  }
  PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const PolyQ& o) {
    // Constants built with nvars = 0 combine with anything.
    if (nvars_ == 0) {
      nvars_ = o.nvars_;
    } else if (o.nvars_ != 0 && o.nvars_ != nvars_) {
      throw ValidationError("PolyQ variable count mismatch");
    }
  }
  void check_compatible(const PolyQ& o) const {
    if (nvars_ != 0 && o.nvars_ != 0 && o.nvars_ != nvars_)
      throw ValidationError("PolyQ variable count mismatch");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Evaluates p at values drawn from a commutative ring T. `one` is the
/// multiplicative identity of T (needed for rings without a literal 1,
/// e.g. PolyQ in a fixed number of variables).
template <class T>
T substitute(const PolyQ& p, std::span<const T> values, const T& one) {
  if (values.size() < p.nvars()) throw ValidationError("too few substitution values");
  std::array<std::vector<T>, kMaxVars> powers;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(one);
      while (pw.size() <= e[i]) pw.push_back(pw.back() * values[i]);
    }
  T acc = one * Rat(0);
  for (const auto& [e, c] : p.terms()) {
    T term = one * c;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (e[i] != 0) term = term * powers[i][e[i]];
    acc = acc + term;
  }
  return acc;
}

inline Rat PolyQ::evaluate(std::span<const Rat> x) const {
  if (x.size() < nvars_) throw ValidationError("too few evaluation values");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

inline std::string PolyQ::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool neg = c < 0;
    const Rat a = neg ? Rat(-c) : c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (mono.empty()) out += ampli::to_string(a);
    else if (a == 1) out += mono;
    else out += ampli::to_string(a) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------

class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rat& c) {  // NOLINT: implicit lift of constants is intended
    if (c != 0) coeffs_.push_back(c);
  }
  UPoly(int c) : UPoly(Rat(c)) {}  // NOLINT
  explicit UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly x() { return UPoly(std::vector<Rat>{0, 1}); }

  /// Degree; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat operator()(const Rat& t) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rat> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<Rat> c(a.coeffs_);
    for (auto& x : c) x = -x;
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const UPoly& a, const Rat& s) { return a * UPoly(s); }
  friend UPoly operator*(const Rat& s, const UPoly& a) { return a * UPoly(s); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw ValidationError("polynomial division by zero");
    std::vector<Rat> r = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {UPoly{}, a};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
      const Rat f = r[static_cast<std::size_t>(k)] / b.leading();
      q[static_cast<std::size_t>(k - db)] = f;
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  UPoly monic() const {
    if (is_zero()) return {};
    const Rat l = leading();
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x /= l;
    return UPoly(std::move(c));
  }

  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rat& c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rat a = neg ? Rat(-c) : c;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      if (mono.empty()) out += ampli::to_string(a);
      else if (a == 1) out += mono;
      else out += ampli::to_string(a) + "*" + mono;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

/// Converts a PolyQ in one variable into dense form.
inline UPoly to_upoly(const PolyQ& p) {
  if (p.nvars() > 1) throw ValidationError("to_upoly expects a univariate polynomial");
  std::vector<Rat> c(static_cast<std::size_t>(std::max(p.degree(), -1) + 1));
  for (const auto& [e, v] : p.terms()) c[e[0]] += v;
  return UPoly(std::move(c));
}

inline PolyQ to_polyq(const UPoly& u) {
  PolyQ p(1);
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    Exponent e{};
    e[0] = static_cast<std::uint16_t>(k);
    p.add_term(e, u.coeffs()[k]);
  }
  return p;
}

// ---------------------------------------------------------------------------

/// num/den with gcd(num, den) = 1 and den monic.
class RatFun1 {
 public:
  RatFun1(UPoly num, UPoly den) {
    if (den.is_zero()) throw ValidationError("rational function with zero denominator");
    const UPoly g = gcd(num, den);
    if (!g.is_zero() && g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
    const Rat l = den.leading();
    num_ = num * (Rat(1) / l);
    den_ = den.monic();
  }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  friend bool operator==(const RatFun1& a, const RatFun1& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  UPoly num_;
  UPoly den_;
};

/// Residue of f(t) dt at a simple pole t0: num(t0) / den'(t0).
inline Rat residue_at(const RatFun1& f, const Rat& t0) {
  if (f.den()(t0) != 0) throw ValidationError("residue_at: " + to_string(t0) + " is not a pole");
  const Rat d1 = f.den().derivative()(t0);
  if (d1 == 0) throw ValidationError("residue_at: pole of order > 1 at " + to_string(t0));
  return f.num()(t0) / d1;
}

}  // namespace ampli
