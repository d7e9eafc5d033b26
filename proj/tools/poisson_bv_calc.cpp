#include "CLI11.hpp"

#include "pbv/bv.hpp"
#include "pbv/checks.hpp"
#include "pbv/errors.hpp"
#include "pbv/homology.hpp"
#include "pbv/io.hpp"
#include "pbv/modular.hpp"

#include <iostream>
#include <random>
#include <string>

using namespace pbv;

namespace {

// exit codes: 0 = success / all checks passed, 1 = a check failed,
// 2 = usage or parse error
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      unsigned v = static_cast<unsigned>(std::stoul(text));
      return {v, v};
    }
    Range r{static_cast<unsigned>(std::stoul(text.substr(0, dots))),
            static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range " + text);
    return r;
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("range", "expected A..B, got " + text);
  }
}

int report_outcome(const ValidationReport& rep, const std::string& what) {
  if (rep.passed) {
    std::cout << what << ": ok\n";
    return kPass;
  }
  for (const auto& [check, witness] : rep.failures)
    std::cout << "FAIL " << check << ": " << witness << "\n";
  return kFail;
}

std::optional<PoissonDerivation> optional_twist(const PoissonStructure& ps,
                                                const std::string& text) {
  if (text.empty()) return std::nullopt;
  return poisson_derivation(ps, parse_multivector(ps.pres, text));
}

Multivector random_mv(std::mt19937_64& eng, const PresPtr& pres, unsigned p, int max_deg) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); };
  const std::size_t r = pres->gen_count();
  Multivector out(pres, p);
  for (const auto& J : subsets_of(r, p)) {
    Poly c;
    int terms = pick(1, 3);
    for (int t = 0; t < terms; ++t) {
      Monomial m = Monomial::one(r);
      int deg = pick(0, max_deg);
      for (int d = 0; d < deg; ++d)
        m = m.times(Monomial::generator(r, static_cast<std::size_t>(pick(0, int(r) - 1))));
      c.add_term(m, Rational(pick(-3, 3)));
    }
    out.add(J, c);
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Poisson calculus on smooth algebras with dual-basis data"};
  app.require_subcommand(1);

  std::string path, expr_a, expr_b, omega_text, twist_text, suite = "all";
  std::string p_range = "0..0", d_range = "0..0";
  unsigned samples = 100, max_degree = 6;
  std::uint64_t seed = 271828;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "structure description (.pois)")->required();
    return cmd;
  };

  auto* c_validate = add_input(app.add_subcommand("validate", "check all structural invariants"));
  auto* c_modular = add_input(app.add_subcommand("modular", "print the modular derivation"));
  auto* c_delta = add_input(app.add_subcommand("delta", "apply the cochain differential"));
  c_delta->add_option("expr", expr_a, "multivector expression")->required();
  c_delta->add_option("--twist", twist_text, "twisting derivation (multivector expression)");
  auto* c_partial = add_input(app.add_subcommand("partial", "apply the chain differential"));
  c_partial->add_option("expr", expr_a, "form expression")->required();
  c_partial->add_option("--twist", twist_text, "twisting derivation (multivector expression)");
  auto* c_schouten = add_input(app.add_subcommand("schouten", "Schouten bracket of two multivectors"));
  c_schouten->add_option("P", expr_a)->required();
  c_schouten->add_option("Q", expr_b)->required();
  auto* c_bv = add_input(app.add_subcommand("bv", "apply the BV operator along both routes"));
  c_bv->add_option("P", expr_a)->required();
  auto* c_bvt = add_input(app.add_subcommand("bv-twisted", "BV operator twisted by a closed 1-form"));
  c_bvt->add_option("P", expr_a)->required();
  c_bvt->add_option("--omega", omega_text, "closed 1-form expression")->required();
  auto* c_dcheck = add_input(
      app.add_subcommand("duality-check", "verify the twisted duality square on random inputs"));
  c_dcheck->add_option("--samples", samples);
  c_dcheck->add_option("--max-degree", max_degree, "coefficient degree bound for random inputs");
  c_dcheck->add_option("--seed", seed);
  auto* c_coh = add_input(app.add_subcommand("cohomology", "graded cohomology dimensions"));
  c_coh->add_option("--p", p_range, "complex degrees A..B")->required();
  c_coh->add_option("--deg", d_range, "coefficient degrees C..D")->required();
  c_coh->add_option("--twist", twist_text);
  auto* c_hom = add_input(app.add_subcommand("homology", "graded homology dimensions"));
  c_hom->add_option("--p", p_range, "complex degrees A..B")->required();
  c_hom->add_option("--deg", d_range, "coefficient degrees C..D")->required();
  c_hom->add_option("--twist", twist_text);
  auto* c_dims = add_input(
      app.add_subcommand("duality-dims", "compare cohomology with twisted homology dimensions"));
  c_dims->add_option("--p", p_range, "complex degrees A..B")->required();
  c_dims->add_option("--deg", d_range, "coefficient degrees C..D")->required();
  auto* c_pseudo = add_input(
      app.add_subcommand("pseudo-unimodular", "search for a closed 1-form matching the modular class"));
  c_pseudo->add_option("--max-degree", max_degree);
  auto* c_ident = add_input(app.add_subcommand("identities", "run the randomized identity suites"));
  c_ident->add_option("--suite", suite, "one suite name, or `all`");
  c_ident->add_option("--samples", samples);
  c_ident->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    InputDocument doc = load_document(path);
    const PoissonStructure& ps = doc.structure;
    const PresPtr& R = ps.pres;

    if (c_validate->parsed()) {
      ValidationReport rep = R->validate();
      for (auto& f : validate_poisson(ps).failures) rep.fail(f.first, f.second);
      return report_outcome(rep, "validate " + path);
    }
    if (c_modular->parsed()) {
      ModularData m = modular_derivation(ps);
      std::cout << "phi_vol = " << m.phi.to_string() << "\n";
      std::cout << "phi_1 = " << m.phi1.to_string() << "\n";
      std::cout << "phi_2 = " << m.phi2.to_string() << "\n";
      return kPass;
    }
    if (c_delta->parsed()) {
      auto F = parse_multivector(R, expr_a);
      std::cout << cochain_delta(ps, F, optional_twist(ps, twist_text)).to_string() << "\n";
      return kPass;
    }
    if (c_partial->parsed()) {
      auto w = parse_kform(R, expr_a);
      std::cout << chain_partial(ps, w, optional_twist(ps, twist_text)).to_string() << "\n";
      return kPass;
    }
    if (c_schouten->parsed()) {
      std::cout << schouten(parse_multivector(R, expr_a), parse_multivector(R, expr_b)).to_string()
                << "\n";
      return kPass;
    }
    if (c_bv->parsed()) {
      auto P = parse_multivector(R, expr_a);
      auto op = make_bv(make_duality(R));
      auto via_volume = bv_delta(op, P);
      auto via_formula = bv_delta_explicit(R, P);
      std::cout << "volume route:  " << via_volume.to_string() << "\n";
      std::cout << "formula route: " << via_formula.to_string() << "\n";
      if (!(via_volume == via_formula)) {
        std::cout << "routes disagree\n";
        return kFail;
      }
      std::cout << "routes agree\n";
      return kPass;
    }
    if (c_bvt->parsed()) {
      auto P = parse_multivector(R, expr_a);
      auto op = make_bv(make_duality(R), parse_kform(R, omega_text));
      std::cout << bv_twisted(op, P).to_string() << "\n";
      return kPass;
    }
    if (c_dcheck->parsed()) {
      auto ctx = make_duality(R);
      std::mt19937_64 eng(seed);
      ValidationReport rep;
      for (unsigned i = 0; i < samples; ++i)
        for (unsigned d = 0; d < R->smooth_dim(); ++d) {
          auto F = random_mv(eng, R, d, static_cast<int>(max_degree));
          auto sq = verify_duality_square(ctx, ps, F);
          if (!sq.passed)
            rep.fail("duality_square[sample " + std::to_string(i) + "]",
                     "F = " + F.to_string() + ": " + sq.failures.front().second);
        }
      return report_outcome(rep, "duality-check " + path + " (" + std::to_string(samples) +
                                     " samples, seed " + std::to_string(seed) + ")");
    }
    if (c_coh->parsed() || c_hom->parsed()) {
      Range pr = parse_range(p_range), dr = parse_range(d_range);
      auto twist = optional_twist(ps, twist_text);
      StrandTable t = c_coh->parsed()
                          ? cohomology_dims(ps, twist, pr.lo, pr.hi, dr.lo, dr.hi)
                          : homology_dims(ps, twist, pr.lo, pr.hi, dr.lo, dr.hi);
      std::cout << t.to_text();
      return kPass;
    }
    if (c_dims->parsed()) {
      Range pr = parse_range(p_range), dr = parse_range(d_range);
      return report_outcome(duality_dim_check(ps, pr.lo, pr.hi, dr.lo, dr.hi),
                            "duality-dims " + path);
    }
    if (c_pseudo->parsed()) {
      auto w = pseudo_unimodular_witness(ps, max_degree);
      if (w)
        std::cout << "varpi = " << w->to_string() << "\n";
      else
        std::cout << "none up to degree " << max_degree << "\n";
      return kPass;
    }
    if (c_ident->parsed()) {
      CheckOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      ValidationReport rep = run_identity_suite(ps, suite, opts);
      return report_outcome(rep, "identities " + path + " (suite " + suite + ", " +
                                     std::to_string(samples) + " samples, seed " +
                                     std::to_string(seed) + ")");
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
