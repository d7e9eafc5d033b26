#include "pbv/exterior.hpp"

#include "pbv/errors.hpp"

#include <algorithm>

namespace pbv {

namespace {

void check_same(const PresPtr& a, const PresPtr& b) {
  if (a != b) throw PresentationMismatch("operands belong to different presentations");
}

void check_deg(unsigned a, unsigned b, const char* what) {
  if (a != b) throw DegreeMismatch(std::string(what) + ": degrees differ");
}

// complement of sorted positions `chosen` within {0..m-1}
Subset complement_positions(const Subset& chosen, std::size_t m) {
  Subset rest;
  rest.reserve(m - chosen.size());
  std::size_t c = 0;
  for (unsigned i = 0; i < m; ++i) {
    if (c < chosen.size() && chosen[c] == i)
      ++c;
    else
      rest.push_back(i);
  }
  return rest;
}

Subset pick(const Subset& base, const Subset& positions) {
  Subset out;
  out.reserve(positions.size());
  for (unsigned p : positions) out.push_back(base[p]);
  return out;
}

std::string render(const std::map<Subset, Poly>& comps, const PresPtr& pres, bool dual) {
  if (comps.empty()) return "0";
  const auto& names = pres->gen_names();
  std::string out;
  for (const auto& [K, c] : comps) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(names) + ")";
    bool first = true;
    for (unsigned i : K) {
      out += first ? " " : " ^ ";
      first = false;
      out += dual ? "(d " + names[i] + ")*" : "d " + names[i];
    }
  }
  return out;
}

} // namespace

void Multivector::add(const Subset& J, const Poly& coeff) {
  if (J.size() != deg) throw DegreeMismatch("component index size does not match degree");
  Poly c = pres->normal_form(at(J) + coeff);
  if (c.is_zero())
    comps.erase(J);
  else
    comps[J] = std::move(c);
}

Poly Multivector::at(const Subset& J) const {
  auto it = comps.find(J);
  return it == comps.end() ? Poly::constant(0, pres->gen_count()) : it->second;
}

Multivector Multivector::canonical() const {
  Multivector out(pres, deg);
  for (const auto& K : subsets_of(pres->gen_count(), deg)) {
    Poly c;
    for (const auto& [J, fj] : comps) c += fj * pres->pairing_det(J, K);
    c = pres->normal_form(c);
    if (!c.is_zero()) out.comps[K] = std::move(c);
  }
  return out;
}

bool Multivector::is_zero() const { return canonical().comps.empty(); }

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same(pres, o.pres);
  check_deg(deg, o.deg, "multivector sum");
  for (const auto& [J, c] : o.comps) add(J, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same(pres, o.pres);
  check_deg(deg, o.deg, "multivector difference");
  for (const auto& [J, c] : o.comps) add(J, -c);
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out(pres, deg);
  for (const auto& [J, c] : comps) out.comps[J] = -c;
  return out;
}

Multivector operator*(const Poly& a, Multivector f) {
  for (auto it = f.comps.begin(); it != f.comps.end();) {
    it->second = f.pres->normal_form(a * it->second);
    it = it->second.is_zero() ? f.comps.erase(it) : std::next(it);
  }
  return f;
}

Multivector operator*(const Rational& c, Multivector f) {
  Poly cp = f.pres->constant(c);
  return cp * std::move(f);
}

bool operator==(const Multivector& a, const Multivector& b) {
  check_same(a.pres, b.pres);
  return a.deg == b.deg && a.canonical().comps == b.canonical().comps;
}

std::string Multivector::to_string() const { return render(canonical().comps, pres, true); }

void KForm::add(const Subset& K, const Poly& coeff) {
  if (K.size() != deg) throw DegreeMismatch("component index size does not match degree");
  Poly c = pres->normal_form(at(K) + coeff);
  if (c.is_zero())
    comps.erase(K);
  else
    comps[K] = std::move(c);
}

Poly KForm::at(const Subset& K) const {
  auto it = comps.find(K);
  return it == comps.end() ? Poly::constant(0, pres->gen_count()) : it->second;
}

KForm KForm::canonical() const {
  KForm out(pres, deg);
  for (const auto& K : subsets_of(pres->gen_count(), deg)) {
    Poly c;
    for (const auto& [J, wj] : comps) c += wj * pres->pairing_det(K, J);
    c = pres->normal_form(c);
    if (!c.is_zero()) out.comps[K] = std::move(c);
  }
  return out;
}

bool KForm::is_zero() const { return canonical().comps.empty(); }

KForm& KForm::operator+=(const KForm& o) {
  check_same(pres, o.pres);
  check_deg(deg, o.deg, "form sum");
  for (const auto& [K, c] : o.comps) add(K, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  check_same(pres, o.pres);
  check_deg(deg, o.deg, "form difference");
  for (const auto& [K, c] : o.comps) add(K, -c);
  return *this;
}

KForm KForm::operator-() const {
  KForm out(pres, deg);
  for (const auto& [K, c] : comps) out.comps[K] = -c;
  return out;
}

KForm operator*(const Poly& a, KForm f) {
  for (auto it = f.comps.begin(); it != f.comps.end();) {
    it->second = f.pres->normal_form(a * it->second);
    it = it->second.is_zero() ? f.comps.erase(it) : std::next(it);
  }
  return f;
}

KForm operator*(const Rational& c, KForm f) {
  Poly cp = f.pres->constant(c);
  return cp * std::move(f);
}

bool operator==(const KForm& a, const KForm& b) {
  check_same(a.pres, b.pres);
  return a.deg == b.deg && a.canonical().comps == b.canonical().comps;
}

std::string KForm::to_string() const { return render(canonical().comps, pres, false); }

Multivector mv_scalar(const PresPtr& pres, const Poly& a) {
  Multivector out(pres, 0);
  out.add(Subset{}, a);
  return out;
}

KForm form_scalar(const PresPtr& pres, const Poly& a) {
  KForm out(pres, 0);
  out.add(Subset{}, a);
  return out;
}

Multivector mv_unit(const PresPtr& pres, const Subset& J) {
  Multivector out(pres, static_cast<unsigned>(J.size()));
  out.add(J, pres->constant(1));
  return out;
}

KForm form_unit(const PresPtr& pres, const Subset& K) {
  KForm out(pres, static_cast<unsigned>(K.size()));
  out.add(K, pres->constant(1));
  return out;
}

Poly mv_apply(const Multivector& F, const std::vector<Poly>& args) {
  if (args.size() != F.deg) throw ArityMismatch("multivector applied to wrong number of arguments");
  const auto& pres = *F.pres;
  Poly acc;
  for (const auto& [J, fj] : F.comps) {
    std::vector<std::vector<Poly>> m(F.deg, std::vector<Poly>(F.deg));
    for (std::size_t s = 0; s < F.deg; ++s)
      for (std::size_t t = 0; t < F.deg; ++t) m[s][t] = pres.dual_derivation(J[s], args[t]);
    acc += fj * poly_det(pres, m);
  }
  return pres.normal_form(acc);
}

Poly mv_eval_on_gens(const Multivector& F, const Subset& K) {
  const auto& pres = *F.pres;
  Poly acc;
  for (const auto& [J, fj] : F.comps) acc += fj * pres.pairing_det(J, K);
  return pres.normal_form(acc);
}

Poly pairing(const Multivector& F, const KForm& omega) {
  check_same(F.pres, omega.pres);
  check_deg(F.deg, omega.deg, "pairing");
  const auto& pres = *F.pres;
  Poly acc;
  for (const auto& [J, fj] : F.comps)
    for (const auto& [K, wk] : omega.comps) acc += fj * wk * pres.pairing_det(J, K);
  return pres.normal_form(acc);
}

Multivector mv_assemble(const PresPtr& pres, unsigned p,
                        const std::function<Poly(const Subset&)>& eval) {
  Multivector out(pres, p);
  for (const auto& K : subsets_of(pres->gen_count(), p)) {
    Poly c = pres->normal_form(eval(K));
    if (!c.is_zero()) out.comps[K] = std::move(c);
  }
  return out;
}

Multivector mv_wedge(const Multivector& F, const Multivector& G) {
  check_same(F.pres, G.pres);
  const unsigned p = F.deg, q = G.deg;
  return mv_assemble(F.pres, p + q, [&](const Subset& L) {
    Poly acc;
    for (const auto& S : subsets_of(L.size(), p)) {
      Poly f = mv_eval_on_gens(F, pick(L, S));
      if (f.is_zero()) continue;
      Poly g = mv_eval_on_gens(G, pick(L, complement_positions(S, L.size())));
      if (g.is_zero()) continue;
      acc += Rational(shuffle_sign(S)) * f * g;
    }
    return acc;
  });
}

KForm form_wedge(const KForm& a, const KForm& b) {
  check_same(a.pres, b.pres);
  KForm out(a.pres, a.deg + b.deg);
  Subset merged;
  for (const auto& [I, ci] : a.comps)
    for (const auto& [J, cj] : b.comps) {
      int sign = merge_wedge(I, J, merged);
      if (sign == 0) continue;
      out.add(merged, Rational(sign) * ci * cj);
    }
  return out.canonical();
}

KForm contract_form(const Multivector& F, const KForm& omega) {
  check_same(F.pres, omega.pres);
  const unsigned p = F.deg, q = omega.deg;
  if (p > q) return KForm(F.pres, 0);
  KForm out(F.pres, q - p);
  for (const auto& [K, wk] : omega.comps) {
    for (const auto& S : subsets_of(q, p)) {
      Poly val = mv_eval_on_gens(F, pick(K, S));
      if (val.is_zero()) continue;
      out.add(pick(K, complement_positions(S, q)), Rational(shuffle_sign(S)) * val * wk);
    }
  }
  return out.canonical();
}

Multivector contract_mv(const KForm& omega, const Multivector& F) {
  check_same(F.pres, omega.pres);
  const unsigned q = F.deg, p = omega.deg;
  if (p > q) return Multivector(F.pres, 0);
  return mv_assemble(F.pres, q - p, [&](const Subset& L) {
    return pairing(F, form_wedge(form_unit(F.pres, L), omega));
  });
}

KForm de_rham(const KForm& omega) {
  const auto& pres = omega.pres;
  KForm out(pres, omega.deg + 1);
  Subset merged;
  for (const auto& [K, c] : omega.comps) {
    for (unsigned j = 0; j < pres->gen_count(); ++j) {
      Poly d = c.derivative(j);
      if (d.is_zero()) continue;
      int sign = merge_wedge(Subset{j}, K, merged);
      if (sign == 0) continue;
      out.add(merged, Rational(sign) * d);
    }
  }
  return out.canonical();
}

KForm volume_form(const PresPtr& pres) {
  KForm out(pres, pres->smooth_dim());
  for (const auto& [I, a] : pres->volume_a()) out.add(I, a);
  return out;
}

Multivector volume_mv(const PresPtr& pres) {
  Multivector out(pres, pres->smooth_dim());
  for (const auto& [I, b] : pres->volume_b()) out.add(I, b);
  return out;
}

Multivector schouten(const Multivector& P, const Multivector& Q) {
  check_same(P.pres, Q.pres);
  const unsigned p = P.deg, q = Q.deg;
  if (p == 0 && q == 0) return Multivector(P.pres, 0);
  const unsigned m = p + q - 1;
  const auto& pres = P.pres;
  const int pre_sign = ((p + 1) * (q + 1)) % 2 == 0 ? 1 : -1; // (-1)^{(p-1)(q-1)}
  return mv_assemble(pres, m, [&](const Subset& L) {
    Poly acc;
    if (p >= 1) {
      // sum over (q, p-1)-shuffles: P(Q(first block), rest)
      for (const auto& S : subsets_of(m, q)) {
        Poly inner = mv_eval_on_gens(Q, pick(L, S));
        std::vector<Poly> args{inner};
        for (unsigned pos : complement_positions(S, m)) args.push_back(pres->gen_poly(L[pos]));
        acc += Rational(pre_sign * shuffle_sign(S)) * mv_apply(P, args);
      }
    }
    if (q >= 1) {
      for (const auto& S : subsets_of(m, p)) {
        Poly inner = mv_eval_on_gens(P, pick(L, S));
        std::vector<Poly> args{inner};
        for (unsigned pos : complement_positions(S, m)) args.push_back(pres->gen_poly(L[pos]));
        acc -= Rational(shuffle_sign(S)) * mv_apply(Q, args);
      }
    }
    return acc;
  });
}

} // namespace pbv
