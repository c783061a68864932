#pragma once

#include <string>
#include <vector>

#include "cfalg/frobenius.hpp"
#include "cfalg/group.hpp"

namespace cfalg {

enum class DivisionRing { R, C, H };

/// Dimension over the rationals: 1, 2, or 4.
int division_dim(DivisionRing ring);
/// Accepts "R", "C", or "H"; raises ParseError otherwise.
DivisionRing parse_division_ring(const std::string& text);

/// The center of the group algebra on its class-sum basis, together with
/// the pieces of equipment every group-derived theory shares: the
/// class-inversion involution and the element u = sum of all squares.
struct CenterData {
    FiniteAlgebra algebra;  // basis E_c indexed by conjugacy classes, labels "[rep]"
    Matrix star;            // E_c -> E_{c^{-1}}, a permutation matrix
    AlgebraElement u;       // sum over g of g^2, expanded in class sums
};
CenterData group_center(const FiniteGroup& g);

/// The group-algebra theory: B the group algebra with counit "coefficient
/// of the identity", A its center with the same counit divided by |G|,
/// phi the inclusion, star the linear extension of g -> g^{-1}, u the sum
/// of squares.
EquippedCF regular_algebra(const GroupPtr& g);

/// Matrix algebra over a division ring, with counit mu * Re Tr on B and
/// mu^2 * Re / d on the center.  The ring is realized by rational
/// structure constants (bases {1}, {1,i}, {1,i,j,k} per matrix entry), so
/// "Re" is a coefficient projection and conjugation a sign flip.
EquippedCF division_model(DivisionRing ring, int n, const Rational& mu, int dim_cap = 200);

/// Basis of the orbit algebra: orbits of the diagonal action on pairs,
/// with the involution induced by (x, y) -> (y, x).
struct OrbitBasis {
    std::vector<TupleOrbit> orbits;
    std::vector<int> star_perm;       // involutive
    std::vector<std::string> labels;  // "(x,y)" from the representative

    int size() const { return static_cast<int>(orbits.size()); }
};
OrbitBasis orbit_basis(const GroupAction& a, long tuple_cap = kDefaultTupleCap);

/// The three-linear form on the orbit basis, flattened as t[(i*n + j)*n + k]:
/// the number of G-orbits of compatible triples counted with weight
/// 1/|Aut|, equivalently the plain number of triples (x1,x2,x3) with
/// (x1,x2) in b_i, (x2,x3) in b_j, (x3,x1) in b_k, divided by |G|.
std::vector<Rational> orbit_trilinear_form(const GroupAction& a, const OrbitBasis& basis);

/// The orbit-basis theory of a permutation action: B spanned by pair
/// orbits with multiplication recovered from the three-linear form, A the
/// center of the group algebra.  mu is a central twist given over the
/// class-sum basis; it must be star-invariant and act invertibly on the
/// permutation representation.  The one-argument form uses mu = unit.
EquippedCF action_algebra(const GroupAction& a);
EquippedCF action_algebra(const GroupAction& a, const AlgebraElement& mu);

/// The same algebra built the literal way: orbit indicator matrices
/// multiplied as matrices and re-expanded over the orbit basis.  Serves
/// as the independent cross-check for action_algebra.
FiniteAlgebra intertwiner_model(const GroupAction& a, long tuple_cap = kDefaultTupleCap);

/// Double-coset algebra: the orbit-basis theory of the coset action.
EquippedCF hecke_algebra(const GroupPtr& g, const std::vector<int>& subgroup_elements);

/// Trace of u = sum of squares on the permutation representation:
/// sum over g of the number of fixed points of g^2.
Rational frobenius_schur_trace(const GroupAction& a);

}  // namespace cfalg
