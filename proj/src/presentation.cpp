#include "pbv/presentation.hpp"

#include "pbv/errors.hpp"

namespace pbv {

Presentation::Presentation(std::vector<std::string> generators, std::vector<RewriteRule> rules,
                           unsigned n, std::vector<std::vector<Poly>> E,
                           std::map<Subset, Poly> volume_a, std::map<Subset, Poly> volume_b,
                           bool assert_confluent)
    : gens_(std::move(generators)),
      rules_(std::move(rules)),
      n_(n),
      E_(std::move(E)),
      vol_a_(std::move(volume_a)),
      vol_b_(std::move(volume_b)) {
  if (!assert_confluent) {
    for (std::size_t i = 0; i < rules_.size(); ++i)
      for (std::size_t j = i + 1; j < rules_.size(); ++j)
        if (!rules_[i].lead.coprime(rules_[j].lead))
          throw NonConfluentRules("leading monomials of rules " + std::to_string(i) + " and " +
                                  std::to_string(j) + " overlap");
  }
}

Poly Presentation::normal_form(Poly p) const {
  if (rules_.empty()) return p;
  for (;;) {
    const Monomial* red = nullptr;
    const RewriteRule* rule = nullptr;
    Rational coeff;
    for (const auto& [m, c] : p.terms()) {
      for (const auto& r : rules_) {
        if (r.lead.divides(m)) {
          red = &m;
          rule = &r;
          coeff = c;
          break;
        }
      }
      if (red) break;
    }
    if (!red) return p;
    Monomial q = red->quotient_by(rule->lead);
    Poly qp;
    qp.add_term(q, coeff);
    Poly lead_term;
    lead_term.add_term(*red, coeff);
    p -= lead_term;
    p += qp * rule->rhs;
  }
}

Poly Presentation::dual_derivation(std::size_t i, const Poly& a) const {
  if (i >= gens_.size()) throw IndexOutOfRange("dual_derivation: generator index out of range");
  Poly acc;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    Poly d = a.derivative(j);
    if (d.is_zero()) continue;
    acc += d * E_[i][j];
  }
  return normal_form(acc);
}

Poly poly_det(const Presentation& pres, const std::vector<std::vector<Poly>>& m) {
  std::size_t k = m.size();
  if (k == 0) return pres.constant(1);
  if (k == 1) return pres.normal_form(m[0][0]);
  // Laplace expansion along the first row; matrices here are tiny.
  Poly acc;
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(k - 1);
    for (std::size_t a = 1; a < k; ++a) {
      std::vector<Poly> row;
      row.reserve(k - 1);
      for (std::size_t b = 0; b < k; ++b)
        if (b != j) row.push_back(m[a][b]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(pres, minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return pres.normal_form(acc);
}

Poly Presentation::pairing_det(const Subset& rows, const Subset& cols) const {
  std::size_t k = rows.size();
  if (k != cols.size()) throw DegreeMismatch("pairing_det: subset sizes differ");
  std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m[a][b] = E_[rows[a]][cols[b]];
  return poly_det(*this, m);
}

ValidationReport Presentation::validate() const {
  ValidationReport report;
  const std::size_t r = gens_.size();

  if (r < n_) report.fail("generator_count", "r < n");

  // trace(E) = n
  Poly trace;
  for (std::size_t i = 0; i < r; ++i) trace += E_[i][i];
  Poly trace_res = normal_form(trace - constant(Rational(n_)));
  if (!trace_res.is_zero()) report.fail("trace", trace_res.to_string(gens_));

  // sum_I a_I b_I = 1
  Poly ab;
  for (const auto& [I, a] : vol_a_) {
    auto it = vol_b_.find(I);
    if (it != vol_b_.end()) ab += a * it->second;
  }
  Poly ab_res = normal_form(ab - constant(1));
  if (!ab_res.is_zero()) report.fail("volume_pairing", ab_res.to_string(gens_));

  // E annihilates relation gradients
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    Poly rel;
    rel.add_term(rules_[k].lead, 1);
    rel -= rules_[k].rhs;
    for (std::size_t i = 0; i < r; ++i) {
      Poly res = dual_derivation(i, rel);
      if (!res.is_zero())
        report.fail("relation_gradient[" + std::to_string(k) + "][" + gens_[i] + "]",
                    res.to_string(gens_));
    }
  }

  // E idempotent: (E*E)[i][j] = E[i][j] in the quotient
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Poly acc;
      for (std::size_t k = 0; k < r; ++k) acc += E_[i][k] * E_[k][j];
      Poly res = normal_form(acc - E_[i][j]);
      if (!res.is_zero())
        report.fail("idempotency[" + gens_[i] + "][" + gens_[j] + "]", res.to_string(gens_));
    }

  // volume consistency: pairing (dx_I)* against vol reproduces a_I
  for (const auto& I : subsets_of(r, n_)) {
    Poly acc;
    for (const auto& [K, aK] : vol_a_) acc += aK * pairing_det(I, K);
    auto it = vol_a_.find(I);
    Poly expected = (it != vol_a_.end()) ? it->second : Poly();
    Poly res = normal_form(acc - expected);
    if (!res.is_zero()) {
      std::string key;
      for (unsigned idx : I) key += (key.empty() ? "" : ",") + gens_[idx];
      report.fail("volume_consistency[" + key + "]", res.to_string(gens_));
    }
  }

  return report;
}

std::shared_ptr<const Presentation> Presentation::free_polynomial(std::vector<std::string> names) {
  const std::size_t r = names.size();
  std::vector<std::vector<Poly>> E(r, std::vector<Poly>(r));
  for (std::size_t i = 0; i < r; ++i) E[i][i] = Poly::constant(1, r);
  Subset full(r);
  for (std::size_t i = 0; i < r; ++i) full[i] = static_cast<unsigned>(i);
  std::map<Subset, Poly> a{{full, Poly::constant(1, r)}};
  return std::make_shared<Presentation>(std::move(names), std::vector<RewriteRule>{},
                                        static_cast<unsigned>(r), std::move(E), a, a);
}

} // namespace pbv
