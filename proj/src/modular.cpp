#include "pbv/modular.hpp"

#include "pbv/errors.hpp"
#include "pbv/linalg.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace pbv {

ModularData modular_derivation(const PoissonStructure& ps) {
  const auto& pres = ps.pres;
  const std::size_t r = pres->gen_count();
  Multivector phi1 = mv_assemble(pres, 1, [&](const Subset& J) {
    Poly acc;
    for (unsigned s = 0; s < r; ++s)
      acc += pres->dual_derivation(s, bracket(ps, pres->gen_poly(J[0]), pres->gen_poly(s)));
    return acc;
  });
  Multivector phi2 = mv_assemble(pres, 1, [&](const Subset& J) {
    Poly acc;
    for (const auto& [I, aI] : pres->volume_a()) {
      auto it = pres->volume_b().find(I);
      if (it == pres->volume_b().end()) continue;
      acc += bracket(ps, pres->gen_poly(J[0]), aI) * it->second;
    }
    return acc;
  });
  return ModularData{phi1 + phi2, phi1, phi2};
}

Poly modular_oracle(const PoissonStructure& ps, const Poly& a) {
  const auto& pres = ps.pres;
  KForm vol = volume_form(pres);
  KForm lie = de_rham(contract_form(hamiltonian(ps, a), vol));
  Poly c = pairing(volume_mv(pres), lie);
  if (!(c * vol == lie))
    throw DivisionInconsistent("Lie derivative of the volume form is not a multiple of it");
  return c;
}

std::vector<Monomial> reduced_monomials(const Presentation& pres, unsigned max_degree) {
  const std::size_t r = pres.gen_count();
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(r);
  auto reduced = [&](const Monomial& m) {
    for (const auto& rule : pres.rules())
      if (rule.lead.divides(m)) return false;
    return true;
  };
  // enumerate all exponent vectors of total degree <= max_degree
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == r) {
      if (reduced(cur)) out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.exp[i] = e;
      rec(i + 1, left - e);
    }
    cur.exp[i] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return GrlexDesc{}(b, a); // ascending graded lex
  });
  return out;
}

namespace {

// Accumulates an exact linear system whose rows are indexed by structured
// keys discovered on the fly; columns are the unknowns in insertion order.
struct SystemBuilder {
  using Key = std::tuple<int, Subset, std::vector<unsigned>>;
  std::map<Key, std::size_t> row_of;
  std::vector<std::map<std::size_t, Rational>> columns;
  std::map<std::size_t, Rational> rhs;

  std::size_t row(int tag, const Subset& s, const Monomial& m) {
    auto [it, fresh] = row_of.try_emplace(Key{tag, s, m.exp}, row_of.size());
    (void)fresh;
    return it->second;
  }

  std::size_t new_column() {
    columns.emplace_back();
    return columns.size() - 1;
  }

  void add_to_column(std::size_t j, int tag, const std::map<Subset, Poly>& comps) {
    for (const auto& [s, poly] : comps)
      for (const auto& [m, c] : poly.terms()) columns[j][row(tag, s, m)] = c;
  }

  void set_rhs(int tag, const std::map<Subset, Poly>& comps) {
    for (const auto& [s, poly] : comps)
      for (const auto& [m, c] : poly.terms()) rhs[row(tag, s, m)] = c;
  }

  std::optional<RatVec> solve_system() const {
    if (row_of.empty()) return RatVec(columns.size(), Rational(0));
    RatMat a(row_of.size(), RatVec(columns.size(), Rational(0)));
    RatVec b(row_of.size(), Rational(0));
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [i, c] : columns[j]) a[i][j] = c;
    for (const auto& [i, c] : rhs) b[i] = c;
    return solve(std::move(a), std::move(b));
  }
};

} // namespace

std::optional<Poly> hamiltonian_witness(const PoissonStructure& ps, const Multivector& target,
                                        unsigned max_degree) {
  const auto& pres = ps.pres;
  Multivector goal = target.canonical();
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto basis = reduced_monomials(*pres, d);
    SystemBuilder sys;
    std::vector<Multivector> images;
    images.reserve(basis.size());
    for (const auto& m : basis) {
      Poly pm;
      pm.add_term(m, 1);
      images.push_back(hamiltonian(ps, pm));
      sys.add_to_column(sys.new_column(), 0, images.back().comps);
    }
    sys.set_rhs(0, goal.comps);
    auto sol = sys.solve_system();
    if (!sol) continue;
    Poly u;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((*sol)[k] != 0) u.add_term(basis[k], (*sol)[k]);
    u = pres->normal_form(u);
    if (hamiltonian(ps, u) == target) return u;
  }
  return std::nullopt;
}

std::optional<KForm> pseudo_unimodular_witness(const PoissonStructure& ps, unsigned max_degree) {
  const auto& pres = ps.pres;
  const std::size_t r = pres->gen_count();
  Multivector goal = modular_derivation(ps).phi.canonical();
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto basis = reduced_monomials(*pres, d);
    SystemBuilder sys;
    std::vector<std::pair<unsigned, Monomial>> unknowns;
    for (unsigned i = 0; i < r; ++i) {
      for (const auto& m : basis) {
        Poly pm;
        pm.add_term(m, 1);
        KForm w = pm * form_unit(pres, Subset{i});
        std::size_t col = sys.new_column();
        sys.add_to_column(col, 0, contract_mv(w, ps.pi).comps);
        sys.add_to_column(col, 1, de_rham(w).comps);
        unknowns.emplace_back(i, m);
      }
    }
    sys.set_rhs(0, goal.comps);
    auto sol = sys.solve_system();
    if (!sol) continue;
    KForm w(pres, 1);
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      if ((*sol)[k] != 0) {
        Poly pm;
        pm.add_term(unknowns[k].second, (*sol)[k]);
        w.add(Subset{unknowns[k].first}, pm);
      }
    if (contract_mv(w, ps.pi) == goal && de_rham(w).is_zero()) return w;
  }
  return std::nullopt;
}

} // namespace pbv
