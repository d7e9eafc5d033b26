#pragma once

#include "pbv/monomial.hpp"
#include "pbv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace pbv {

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// graded-lex order, leading term first, and never carry a zero coefficient.
/// The zero polynomial is the empty term map.
class Poly {
public:
  using TermMap = std::map<Monomial, Rational, GrlexDesc>;

  Poly() = default;

  static Poly constant(const Rational& c, std::size_t nvars);
  static Poly generator(std::size_t nvars, std::size_t i);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  /// True when all terms share one total degree (vacuously for zero, with
  /// degree reported as -1).
  bool is_homogeneous(int& deg) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);

  /// Formal partial derivative with respect to generator i (0-based).
  Poly derivative(std::size_t i) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Canonical rendering: graded-lex descending, e.g. "x^2*y - 2*x + 1/2".
  std::string to_string(const std::vector<std::string>& gen_names) const;

private:
  TermMap terms_;
};

} // namespace pbv
