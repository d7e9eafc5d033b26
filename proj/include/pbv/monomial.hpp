#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace pbv {

/// Exponent vector of a power product in r generators.
struct Monomial {
  std::vector<unsigned> exp;

  Monomial() = default;
  explicit Monomial(std::vector<unsigned> e) : exp(std::move(e)) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }

  static Monomial generator(std::size_t nvars, std::size_t i) {
    Monomial m = one(nvars);
    m.exp[i] = 1;
    return m;
  }

  std::size_t nvars() const { return exp.size(); }

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exp) d += e;
    return d;
  }

  bool is_one() const {
    for (unsigned e : exp)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > m.exp[i]) return false;
    return true;
  }

  Monomial times(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
    return r;
  }

  // Requires divides(m) for the argument's divisor role: *this = m / d.
  Monomial quotient_by(const Monomial& d) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= d.exp[i];
    return r;
  }

  bool coprime(const Monomial& m) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > 0 && m.exp[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

/// Graded lexicographic order, largest term first. Map iteration in this
/// order starts at the leading term, which is also the printing order.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
  }
};

} // namespace pbv
