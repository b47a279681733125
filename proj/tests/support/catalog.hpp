#pragma once

// Shared test inputs: small ideals and hypersurfaces with independently known
// geometry, used across the unit suites and the acceptance runner.

#include <string>
#include <vector>

#include "segrecalc/idealcalc.hpp"
#include "segrecalc/parse.hpp"
#include "segrecalc/theorems.hpp"

namespace catalog {

using namespace segrecalc;

inline RingPtr P1() { return PolyRing::make(32003, {"x", "y"}); }
inline RingPtr P2() { return PolyRing::make(32003, {"x", "y", "z"}); }
inline RingPtr P3() { return PolyRing::make(32003, {"x", "y", "z", "w"}); }
inline RingPtr P4() { return PolyRing::make(32003, {"x", "y", "z", "w", "v"}); }

inline Ideal make_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Poly> polys;
    polys.reserve(gens.size());
    for (const std::string& g : gens) polys.push_back(parse_poly(g, ring));
    return Ideal(ring, std::move(polys));
}

// Flat limit of a family of twisted cubics; the running example.
inline Ideal paper_ideal() {
    return make_ideal(P3(), {"z^2", "y*z", "x*z", "y^2*w - x^2*(x+w)"});
}

inline Ideal twisted_cubic() {
    return make_ideal(P3(), {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
}

inline Ideal plane_union_line() { return make_ideal(P3(), {"x*y", "x*z"}); }

inline Ideal line_in_P3() { return make_ideal(P3(), {"x", "y"}); }

inline Ideal fat_point_P2() { return make_ideal(P2(), {"x^2", "x*y", "y^2"}); }

inline Ideal point_P2() { return make_ideal(P2(), {"x", "y"}); }

inline Ideal nonreduced_divisor_P3() { return make_ideal(P3(), {"x^2*y"}); }

// Hypersurfaces of P^3 with positive-dimensional singular loci.
inline HypersurfaceInput surface_sing_line() {
    return make_hypersurface(parse_poly("x^2*z - y^2*w", P3()));
}
inline HypersurfaceInput surface_three_planes() {
    return make_hypersurface(parse_poly("x*y*z", P3()));
}
inline HypersurfaceInput surface_double_plane() {
    return make_hypersurface(parse_poly("x^2*y", P3()));
}
inline HypersurfaceInput surface_cuspidal_line() {
    return make_hypersurface(parse_poly("x^2*z - y^3", P3()));
}
inline HypersurfaceInput surface_nodal_cone() {
    return make_hypersurface(parse_poly("y^2*z - x^2*(x+z)", P3()));
}

// Plane curves for the CSM / Euler spot checks.
inline HypersurfaceInput smooth_cubic() {
    return make_hypersurface(parse_poly("x^3 + y^3 + z^3", P2()));
}
inline HypersurfaceInput nodal_cubic() {
    return make_hypersurface(parse_poly("y^2*z - x^2*(x+z)", P2()));
}
inline HypersurfaceInput cuspidal_cubic() {
    return make_hypersurface(parse_poly("y^2*z - x^3", P2()));
}
inline HypersurfaceInput smooth_conic() {
    return make_hypersurface(parse_poly("x^2 + y^2 + z^2", P2()));
}
inline HypersurfaceInput triangle_of_lines() {
    return make_hypersurface(parse_poly("x*y*z", P2()));
}

// Catalog for the n+1 / n / n-c cut checks: the running example, a smooth
// curve, mixed dimensions, fat structure, a non-reduced divisor, singularity
// subschemes, and linear subschemes.
inline std::vector<Ideal> verify_catalog() {
    return {
        paper_ideal(),
        twisted_cubic(),
        plane_union_line(),
        fat_point_P2(),
        nonreduced_divisor_P3(),
        line_in_P3(),
        singular_scheme(surface_sing_line()),
        singular_scheme(surface_cuspidal_line()),
        singular_scheme(cuspidal_cubic()),
    };
}

}  // namespace catalog
