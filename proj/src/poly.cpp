#include "pbv/poly.hpp"

#include "pbv/errors.hpp"

#include <sstream>

namespace pbv {

Poly Poly::constant(const Rational& c, std::size_t nvars) {
  Poly p;
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Poly Poly::generator(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw IndexOutOfRange("generator index out of range");
  Poly p;
  p.add_term(Monomial::generator(nvars, i), 1);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  // Leading term has maximal total degree under grlex.
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous(int& deg) const {
  if (terms_.empty()) {
    deg = -1;
    return true;
  }
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  deg = static_cast<int>(d);
  return true;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
  return r;
}

Poly Poly::derivative(std::size_t i) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.exp[i] == 0) continue;
    Monomial d = m;
    d.exp[i] -= 1;
    r.add_term(d, c * m.exp[i]);
  }
  return r;
}

namespace {

void render_monomial(std::ostream& os, const Monomial& m, const std::vector<std::string>& names,
                     bool leading_factor) {
  bool first = leading_factor;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << names[i];
    if (m.exp[i] > 1) os << "^" << m.exp[i];
  }
}

} // namespace

std::string Poly::to_string(const std::vector<std::string>& gen_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.is_one()) {
      os << pbv::to_string(a);
    } else {
      if (a != 1) os << pbv::to_string(a) << "*";
      render_monomial(os, m, gen_names, true);
    }
  }
  return os.str();
}

} // namespace pbv
