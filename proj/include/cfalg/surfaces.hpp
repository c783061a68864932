#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfalg/frobenius.hpp"

namespace cfalg {

/// Compact surface: a handles, c crosscaps (0, 1, or 2), s boundary
/// contours.  Twice the geometric genus is 2a + c; surfaces with more
/// crosscaps are normalized by trading three crosscaps for a handle plus
/// a crosscap before reaching this type.
struct SurfaceSpec {
    int handles = 0;
    int crosscaps = 0;
    int contours = 0;

    bool orientable() const { return crosscaps == 0; }
    int twice_genus() const { return 2 * handles + crosscaps; }
};

/// pre: a, s >= 0 and c in {0, 1, 2}.
SurfaceSpec make_surface(int a, int c, int s);

/// One marked point: an element plus a flag marking a reversed local
/// orientation (resolved by the star maps).
struct Insertion {
    AlgebraElement element;
    bool reversed = false;
};

/// Interior marked points carry elements of A; each boundary contour is a
/// cyclically ordered list of elements of B.
struct CorrelatorInput {
    std::vector<Insertion> interior;
    std::vector<std::vector<Insertion>> boundary;
};

/// Applies star to every flagged insertion and clears the flags.  Raises
/// BuildError when a flag is set but the theory has no equipment.
CorrelatorInput normalize_orientations(const EquippedCF& cf, CorrelatorInput input);

/// Evaluates the correlator of the marked surface:
///   closed orientable       l_A(prod a_i * K_A^a)
///   with boundary           l_B(phi(prod a_i * K_A^a) * prod b^1 * prod_t V(prod b^t))
///   non-orientable          the same with U^{2a+c} in place of K_A^a.
/// Empty products are units.  Non-orientable surfaces and orientation
/// flags require equipment.
Rational correlator(const EquippedCF& cf, const SurfaceSpec& surface,
                    const CorrelatorInput& input);

/// Inputs for one cut identity; which fields are read depends on the case.
struct CutData {
    std::vector<AlgebraElement> interior;   // elements of A (C1, C2, C6)
    std::vector<AlgebraElement> boundary;   // elements of B (C3, C4)
    std::optional<SurfaceSpec> base;        // C6: the lower-crosscap surface (default sphere)
};

/// Checks one enumerated cut identity by evaluating both sides through
/// correlator() and the gram inverses.
///   C1  sphere 4-point factorization, both channels      (4 interior)
///   C2  nonseparating torus cut against the sphere       (1 interior)
///   C3  disk 4-point factorization, both channels        (4 boundary)
///   C4  annulus glued from a disk along a segment        (2 boundary)
///   C5  Klein bottle as two projective planes            (no data)
///   C6  crosscap insertion trades for a factor of u      (interior + base, c <= 1, s = 0)
/// Unknown case ids raise ParseError.
Report check_cut_identity(const EquippedCF& cf, const std::string& case_id, const CutData& data);

}  // namespace cfalg
