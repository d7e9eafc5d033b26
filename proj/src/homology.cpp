#include "pbv/homology.hpp"

#include "pbv/errors.hpp"
#include "pbv/linalg.hpp"
#include "pbv/modular.hpp"

#include <functional>
#include <sstream>

namespace pbv {

namespace {

void require_free(const Presentation& pres) {
  if (!pres.rules().empty() || pres.smooth_dim() != pres.gen_count())
    throw NotFreePresentation("graded dimension counts require a free polynomial ring");
}

// common homogeneous degree of the bracket entries; 1 for the zero structure
int bracket_degree(const PoissonStructure& ps) {
  int w = -1;
  for (const auto& [ij, t] : ps.table) {
    if (t.is_zero()) continue;
    int deg = 0;
    if (!t.is_homogeneous(deg))
      throw NotGraded("bracket entry {" + std::to_string(ij.first) + "," +
                      std::to_string(ij.second) + "} is not homogeneous");
    if (w >= 0 && deg != w) throw NotGraded("bracket entries have mixed degrees");
    w = deg;
  }
  return w < 0 ? 1 : w;
}

void check_twist_degree(const Multivector& phi, int w) {
  for (const auto& [J, c] : phi.comps) {
    if (c.is_zero()) continue;
    int deg = 0;
    if (!c.is_homogeneous(deg) || deg != w - 1)
      throw NotGraded("twist coefficients must be homogeneous of the bracket degree minus one");
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t r, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(r);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == r) {
      cur.exp[i] = left;
      out.push_back(cur);
      cur.exp[i] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.exp[i] = e;
      rec(i + 1, left - e);
    }
    cur.exp[i] = 0;
  };
  if (r == 0) return out;
  rec(0, d);
  return out;
}

// rank of a linear map given by images over (subset, monomial) coordinates
std::size_t map_rank(const std::vector<std::map<Subset, Poly>>& images) {
  std::map<std::pair<Subset, std::vector<unsigned>>, std::size_t> row_of;
  std::vector<std::map<std::size_t, Rational>> cols;
  for (const auto& comps : images) {
    auto& col = cols.emplace_back();
    for (const auto& [s, poly] : comps)
      for (const auto& [m, c] : poly.terms()) {
        auto [it, _] = row_of.try_emplace({s, m.exp}, row_of.size());
        col[it->second] = c;
      }
  }
  RatMat a(row_of.size(), RatVec(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) a[i][j] = c;
  return rank(std::move(a));
}

struct StrandOp {
  // dimension of the (p, d) strand
  std::function<std::size_t(unsigned p, unsigned d)> dim;
  // images of the strand basis under the differential
  std::function<std::vector<std::map<Subset, Poly>>(unsigned p, unsigned d)> apply;
  // (p, d) of the strand mapping into (p, d), or nothing
  std::function<std::optional<std::pair<unsigned, unsigned>>(unsigned p, unsigned d)> source;
};

StrandTable tabulate(const StrandOp& op, unsigned p_lo, unsigned p_hi, unsigned d_lo,
                     unsigned d_hi) {
  StrandTable table;
  for (unsigned p = p_lo; p <= p_hi; ++p)
    for (unsigned d = d_lo; d <= d_hi; ++d) {
      StrandEntry e;
      std::size_t dim = op.dim(p, d);
      e.dim_kernel = dim - map_rank(op.apply(p, d));
      if (auto src = op.source(p, d)) e.dim_image_in = map_rank(op.apply(src->first, src->second));
      e.dim_homology = e.dim_kernel - e.dim_image_in;
      table.entries[{p, d}] = e;
    }
  return table;
}

} // namespace

StrandTable cohomology_dims(const PoissonStructure& ps,
                            const std::optional<PoissonDerivation>& phi, unsigned p_lo,
                            unsigned p_hi, unsigned d_lo, unsigned d_hi) {
  const auto& pres = ps.pres;
  require_free(*pres);
  const int w = bracket_degree(ps);
  if (phi) check_twist_degree(phi->phi, w);
  const std::size_t r = pres->gen_count();

  StrandOp op;
  op.dim = [=](unsigned p, unsigned d) {
    return subsets_of(r, p).size() * monomials_of_degree(r, d).size();
  };
  op.apply = [=, &ps, &phi](unsigned p, unsigned d) {
    std::vector<std::map<Subset, Poly>> images;
    for (const auto& J : subsets_of(r, p))
      for (const auto& m : monomials_of_degree(r, d)) {
        Poly c;
        c.add_term(m, 1);
        Multivector F(ps.pres, p);
        F.add(J, c);
        images.push_back(cochain_delta(ps, F, phi).comps);
      }
    return images;
  };
  op.source = [=](unsigned p, unsigned d) -> std::optional<std::pair<unsigned, unsigned>> {
    // delta raises coefficient degree by w - 1
    if (p == 0) return std::nullopt;
    int src_d = static_cast<int>(d) - (w - 1);
    if (src_d < 0) return std::nullopt;
    return std::pair<unsigned, unsigned>{p - 1, static_cast<unsigned>(src_d)};
  };
  return tabulate(op, p_lo, p_hi, d_lo, d_hi);
}

StrandTable homology_dims(const PoissonStructure& ps, const std::optional<PoissonDerivation>& phi,
                          unsigned q_lo, unsigned q_hi, unsigned d_lo, unsigned d_hi) {
  const auto& pres = ps.pres;
  require_free(*pres);
  const int w = bracket_degree(ps);
  if (phi) check_twist_degree(phi->phi, w);
  const std::size_t r = pres->gen_count();

  StrandOp op;
  op.dim = [=](unsigned q, unsigned d) {
    return subsets_of(r, q).size() * monomials_of_degree(r, d).size();
  };
  op.apply = [=, &ps, &phi](unsigned q, unsigned d) {
    std::vector<std::map<Subset, Poly>> images;
    for (const auto& K : subsets_of(r, q))
      for (const auto& m : monomials_of_degree(r, d)) {
        Poly c;
        c.add_term(m, 1);
        KForm f(ps.pres, q);
        f.add(K, c);
        images.push_back(chain_partial(ps, f, phi).comps);
      }
    return images;
  };
  op.source = [=](unsigned q, unsigned d) -> std::optional<std::pair<unsigned, unsigned>> {
    // partial comes from one form degree up, coefficient degree w - 1 down
    if (q >= r) return std::nullopt;
    int src_d = static_cast<int>(d) - (w - 1);
    if (src_d < 0) return std::nullopt;
    return std::pair<unsigned, unsigned>{q + 1, static_cast<unsigned>(src_d)};
  };
  return tabulate(op, q_lo, q_hi, d_lo, d_hi);
}

ValidationReport duality_dim_check(const PoissonStructure& ps, unsigned p_lo, unsigned p_hi,
                                   unsigned d_lo, unsigned d_hi) {
  ValidationReport report;
  const unsigned n = ps.pres->smooth_dim();
  auto twist = poisson_derivation(ps, modular_derivation(ps).phi);
  StrandTable co = cohomology_dims(ps, std::nullopt, p_lo, p_hi, d_lo, d_hi);
  for (unsigned p = p_lo; p <= p_hi && p <= n; ++p) {
    StrandTable ho = homology_dims(ps, twist, n - p, n - p, d_lo, d_hi);
    for (unsigned d = d_lo; d <= d_hi; ++d) {
      std::size_t lhs = co.entries.at({p, d}).dim_homology;
      std::size_t rhs = ho.entries.at({n - p, d}).dim_homology;
      if (lhs != rhs)
        report.fail("duality_dims[p=" + std::to_string(p) + ",d=" + std::to_string(d) + "]",
                    "PH^" + std::to_string(p) + " has dim " + std::to_string(lhs) +
                        " but twisted PH_" + std::to_string(n - p) + " has dim " +
                        std::to_string(rhs));
    }
  }
  return report;
}

std::string StrandTable::to_text() const {
  std::ostringstream os;
  os << "  p    d  dim_ker   dim_im    dim_H\n";
  for (const auto& [key, e] : entries) {
    os.width(3);
    os << key.first;
    os.width(5);
    os << key.second;
    os.width(9);
    os << e.dim_kernel;
    os.width(9);
    os << e.dim_image_in;
    os.width(9);
    os << e.dim_homology;
    os << "\n";
  }
  return os.str();
}

std::string StrandTable::to_lines() const {
  std::ostringstream os;
  for (const auto& [key, e] : entries)
    os << key.first << " " << key.second << " " << e.dim_kernel << " " << e.dim_image_in << " "
       << e.dim_homology << "\n";
  return os.str();
}

} // namespace pbv
