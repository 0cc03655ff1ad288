#pragma once
// Curves shared by the unit and acceptance tests.

#include "curvemass/curves.hpp"

namespace fixtures {

using curvemass::CurveModel;
using curvemass::standard_field_spec;

inline CurveModel p1_f2() { return CurveModel::projective_line(standard_field_spec(2, 1)); }
inline CurveModel p1_f3() { return CurveModel::projective_line(standard_field_spec(3, 1)); }
// y^2 + y = x^3, genus 1, N_1 = 3.
inline CurveModel elliptic_f2() { return CurveModel::hyperelliptic(standard_field_spec(2, 1), {1}, {0, 0, 0, 1}); }
// y^2 = x^3 + x, genus 1, N_1 = 4.
inline CurveModel elliptic_f3() { return CurveModel::hyperelliptic(standard_field_spec(3, 1), {}, {0, 1, 0, 1}); }
// y^2 + y = x^5 + x^3, genus 2.
inline CurveModel genus2_f2() { return CurveModel::hyperelliptic(standard_field_spec(2, 1), {1}, {0, 0, 0, 1, 0, 1}); }
// x^3 y + y^3 z + z^3 x, genus 3.
inline CurveModel klein_f2() {
  return CurveModel::plane(standard_field_spec(2, 1), 4, {{1, 3, 1, 0}, {1, 0, 3, 1}, {1, 1, 0, 3}});
}
// y^2 + y = x^{2g+1}.
inline CurveModel artin_schreier_f2(unsigned g) {
  std::vector<std::uint32_t> f(2 * g + 2, 0);
  f.back() = 1;
  return CurveModel::hyperelliptic(standard_field_spec(2, 1), {1}, f);
}

}  // namespace fixtures
