#pragma once

#include <string>
#include <vector>

#include "cfalg/frobenius.hpp"
#include "cfalg/group.hpp"
#include "cfalg/surfaces.hpp"

namespace cfalg {

/// Contents of a group spec file: the group plus an optional subgroup
/// (already closed under product and inverse).
struct GroupFile {
    GroupPtr group;
    std::vector<int> subgroup;
    bool has_subgroup = false;
};

/// Reads a JSON group spec: one of
///   {"builtin": "cyclic"|"dihedral"|"symmetric", "n": N}
///   {"builtin": "quaternion8"}
///   {"generators": [[image vector], ...]}
///   {"product": [<group spec>, <group spec>]}
/// plus optional "subgroup" (list of image vectors that must name group
/// elements) or "subgroup_indices" (element indices); either is closed
/// into a subgroup.  Structural problems raise ParseError, semantic ones
/// (non-bijections, caps, bad indices) raise BuildError.
GroupFile load_group_file(const std::string& path, int order_cap = kDefaultOrderCap);

/// A surface spec file pairs the topology with the marked points.
struct SurfaceFile {
    SurfaceSpec surface;
    CorrelatorInput input;
};

/// Reads a JSON surface spec:
///   {"surface": {"handles": a, "crosscaps": c, "contours": s},
///    "interior": [<insertion>, ...],
///    "boundary": [[<insertion>, ...], ...]}
/// An insertion is either a basis label string or
/// {"coeffs": {label: scalar, ...}, "reversed": bool}; scalars are
/// integers or "p/q" strings.  Interior labels come from A, boundary
/// labels from B.  Crosscap counts above 2 are normalized here, trading
/// three crosscaps for a handle and a crosscap.  A missing "boundary"
/// means every contour is empty.
SurfaceFile load_surface_file(const std::string& path, const EquippedCF& cf);

/// Parses "label=scalar;label=scalar;..." over the given basis labels.
AlgebraElement parse_element_spec(const std::string& text,
                                  const std::vector<std::string>& labels);

}  // namespace cfalg
