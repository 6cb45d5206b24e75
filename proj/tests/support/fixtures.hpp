#pragma once

// Named fans and curves shared by the unit and acceptance suites.

#include <vector>

#include "toricbn/fan.hpp"
#include "toricbn/newton.hpp"

namespace fixtures {

using toricbn::LatticeVector;

/// P^2 blown up at the fixed point of the cone ((1,0),(0,1)).
inline toricbn::Fan blown_up_p2() { return toricbn::build_fan({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}); }

/// Index-3 fake plane with rays (2,-1), (-1,2), (-1,-1) plus the six
/// resolving rays; this orientation makes the cubic below a unit triangle.
inline toricbn::Fan nine_ray_fixed() {
    return toricbn::build_fan({{2, -1}, {-1, 2}, {-1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
}

/// The same construction on the negated fake-plane rays (-2,1), (1,-2), (1,1).
inline toricbn::Fan nine_ray_printed() {
    return toricbn::build_fan({{-2, 1}, {1, -2}, {1, 1}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
}

/// x^2 y + x y^2 + c x y + 1.
inline toricbn::LaurentCurve cubic(int c) {
    return toricbn::LaurentCurve({{LatticeVector(2, 1), toricbn::Rational(1)},
                                  {LatticeVector(1, 2), toricbn::Rational(1)},
                                  {LatticeVector(1, 1), toricbn::Rational(c)},
                                  {LatticeVector(0, 0), toricbn::Rational(1)}});
}

/// 1 + x + y + xy.
inline toricbn::LaurentCurve square() { return toricbn::LaurentCurve::from_support({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

/// x + y + xy: the conic through the three fixed points of P^2.
inline toricbn::LaurentCurve cremona_conic() { return toricbn::LaurentCurve::from_support({{1, 0}, {0, 1}, {1, 1}}); }

/// 1 + x.
inline toricbn::LaurentCurve ruling() { return toricbn::LaurentCurve::from_support({{0, 0}, {1, 0}}); }

inline std::size_t ray_index(const toricbn::Fan& fan, LatticeVector r) { return fan.index_of(r); }

} // namespace fixtures
