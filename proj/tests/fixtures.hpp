#pragma once

#include "pbv/expr.hpp"
#include "pbv/poisson.hpp"
#include "pbv/presentation.hpp"

#include <string>
#include <vector>

namespace pbv::fixtures {

inline Poly p(const PresPtr& pres, const std::string& text) {
  return parse_poly(text, pres->gen_names());
}

/// The unit sphere in QQ[x,y,z] with z^2 rewritten to 1 - x^2 - y^2.
/// E[i][j] = delta_ij - x_i x_j, volume a_I = b_I = (x, -y, z) against
/// the complementary 2-subsets.
inline PresPtr sphere() {
  std::vector<std::string> names{"x", "y", "z"};
  auto P = [&](const std::string& s) { return parse_poly(s, names); };
  Monomial z2 = Monomial::generator(3, 2).times(Monomial::generator(3, 2));
  std::vector<RewriteRule> rules{{z2, P("1 - x^2 - y^2")}};
  std::vector<std::vector<Poly>> E{
      {P("1 - x^2"), P("-x*y"), P("-x*z")},
      {P("-x*y"), P("1 - y^2"), P("-y*z")},
      {P("-x*z"), P("-y*z"), P("1 - z^2")},
  };
  std::map<Subset, Poly> a{
      {Subset{1, 2}, P("x")},
      {Subset{0, 2}, P("-y")},
      {Subset{0, 1}, P("z")},
  };
  return std::make_shared<Presentation>(names, rules, 2, E, a, a);
}

inline PresPtr plane() { return Presentation::free_polynomial({"x", "y"}); }

inline PresPtr space() { return Presentation::free_polynomial({"x", "y", "z"}); }

/// {x,y} = z, {y,z} = x, {z,x} = y on the given three-generator presentation.
inline PoissonStructure so3(const PresPtr& R) {
  return make_poisson(R, {{{0, 1}, p(R, "z")}, {{0, 2}, p(R, "-y")}, {{1, 2}, p(R, "x")}});
}

/// {x,y} = 1 on QQ[x,y].
inline PoissonStructure symplectic_plane() {
  auto R = plane();
  return make_poisson(R, {{{0, 1}, p(R, "1")}});
}

/// {x,y} = xy on QQ[x,y].
inline PoissonStructure quadratic_plane() {
  auto R = plane();
  return make_poisson(R, {{{0, 1}, p(R, "x*y")}});
}

} // namespace pbv::fixtures
