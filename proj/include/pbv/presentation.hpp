#pragma once

#include "pbv/poly.hpp"
#include "pbv/subset.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pbv {

/// One rewrite rule lead -> rhs with a monic leading monomial; the
/// associated relation is lead - rhs.
struct RewriteRule {
  Monomial lead;
  Poly rhs;
};

struct ValidationReport {
  bool passed = true;
  // (check name, witness rendering)
  std::vector<std::pair<std::string, std::string>> failures;

  void fail(std::string check, std::string witness) {
    passed = false;
    failures.emplace_back(std::move(check), std::move(witness));
  }
};

/// Smooth-algebra presentation: generators, confluent rewrite rules for the
/// relations, smooth dimension n, the dual-basis derivation matrix E with
/// E[i][j] = (dx_i)*(x_j), and volume data a_I / b_I indexed by sorted
/// n-subsets of the generators.
class Presentation {
public:
  Presentation(std::vector<std::string> generators, std::vector<RewriteRule> rules, unsigned n,
               std::vector<std::vector<Poly>> E, std::map<Subset, Poly> volume_a,
               std::map<Subset, Poly> volume_b, bool assert_confluent = false);

  std::size_t gen_count() const { return gens_.size(); }
  unsigned smooth_dim() const { return n_; }
  const std::vector<std::string>& gen_names() const { return gens_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::map<Subset, Poly>& volume_a() const { return vol_a_; }
  const std::map<Subset, Poly>& volume_b() const { return vol_b_; }
  const Poly& E(std::size_t i, std::size_t j) const { return E_[i][j]; }

  Poly gen_poly(std::size_t i) const { return Poly::generator(gens_.size(), i); }
  Poly constant(const Rational& c) const { return Poly::constant(c, gens_.size()); }

  /// Unique normal form of a representative under the rewrite rules.
  Poly normal_form(Poly p) const;

  /// normal_form(a*b): the product in the quotient ring.
  Poly mul(const Poly& a, const Poly& b) const { return normal_form(a * b); }

  /// (dx_i)*(a) = normal_form(sum_j da/dx_j * E[i][j]); 0-based index.
  Poly dual_derivation(std::size_t i, const Poly& a) const;

  /// det E[rows x cols] reduced to normal form. Both index lists are sorted
  /// subsets of equal size; the 0x0 determinant is 1.
  Poly pairing_det(const Subset& rows, const Subset& cols) const;

  /// Runs every structural invariant; failures are reported, not thrown.
  ValidationReport validate() const;

  /// Free polynomial ring QQ[names...]: identity E, n = r, volume data
  /// a = b = {(1..n) -> 1}.
  static std::shared_ptr<const Presentation> free_polynomial(std::vector<std::string> names);

private:
  std::vector<std::string> gens_;
  std::vector<RewriteRule> rules_;
  unsigned n_;
  std::vector<std::vector<Poly>> E_;
  std::map<Subset, Poly> vol_a_;
  std::map<Subset, Poly> vol_b_;
};

using PresPtr = std::shared_ptr<const Presentation>;

/// Determinant of a square Poly matrix, reduced to normal form.
Poly poly_det(const Presentation& pres, const std::vector<std::vector<Poly>>& m);

} // namespace pbv
