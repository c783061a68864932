#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cfalg/matrix.hpp"
#include "cfalg/rational.hpp"

namespace cfalg {

/// Element of a finite-dimensional algebra, as coefficients over the
/// algebra's distinguished basis.
struct AlgebraElement {
    std::vector<Rational> coeffs;

    static AlgebraElement zero(int dim) { return {std::vector<Rational>(dim)}; }

    int size() const { return static_cast<int>(coeffs.size()); }
    Rational& operator[](int i) { return coeffs[i]; }
    const Rational& operator[](int i) const { return coeffs[i]; }
    bool is_zero() const;

    bool operator==(const AlgebraElement& o) const { return coeffs == o.coeffs; }
    bool operator!=(const AlgebraElement& o) const { return coeffs != o.coeffs; }

    /// "3*label0 + 1/2*label2", or "0"; terms in basis order.
    std::string str(const std::vector<std::string>& labels) const;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scaled(const AlgebraElement& x, const Rational& c);

/// Associative unital algebra over the rationals with a fixed basis.
/// Products are stored as a sparse structure tensor: basis_product(i, j)
/// lists the (basis index, coefficient) terms of b_i * b_j.
class FiniteAlgebra {
  public:
    using SparseRow = std::vector<std::pair<int, Rational>>;

    FiniteAlgebra(std::vector<std::string> basis_labels, std::vector<SparseRow> structure,
                  AlgebraElement unit);

    /// Builds the structure tensor by evaluating every basis product.
    static FiniteAlgebra from_products(
        std::vector<std::string> basis_labels,
        const std::function<AlgebraElement(int, int)>& product_of_basis, AlgebraElement unit);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const SparseRow& basis_product(int i, int j) const {
        return structure_[static_cast<std::size_t>(i) * dim() + j];
    }

    AlgebraElement basis_element(int i) const;
    const AlgebraElement& unit() const { return unit_; }

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    /// x^e for e >= 0; x^0 is the unit.
    AlgebraElement power(const AlgebraElement& x, int e) const;
    /// Product over a list, left to right; empty product is the unit.
    AlgebraElement product(const std::vector<AlgebraElement>& xs) const;

    /// Matrix of left multiplication by x on the basis.
    Matrix left_multiplication(const AlgebraElement& x) const;

    /// First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k).
    std::optional<std::tuple<int, int, int>> associativity_witness() const;
    /// First basis pair (i, j) with b_i b_j != b_j b_i.
    std::optional<std::pair<int, int>> commutativity_witness() const;
    bool is_associative() const;
    bool is_commutative() const;

  private:
    std::vector<std::string> labels_;
    std::vector<SparseRow> structure_;
    AlgebraElement unit_;
};

/// Algebra with a counit whose induced bilinear form counit(x*y) is
/// symmetric.  The gram inverse is kept only when the form is
/// non-degenerate; operations that need it say which ones they are.
struct FrobeniusPair {
    FiniteAlgebra algebra;
    std::vector<Rational> counit;  // counit of each basis element
    bool commutative = false;      // declared, checked by the verifier
    GramData form;                 // gram(i, j) = counit(b_i * b_j)

    int dim() const { return algebra.dim(); }
    Rational counit_of(const AlgebraElement& x) const;
    /// The induced form counit(x*y).
    Rational bilinear(const AlgebraElement& x, const AlgebraElement& y) const;
    bool nondegenerate() const { return form.nondegenerate(); }
};

/// pre: counit has one entry per basis element.
FrobeniusPair make_frobenius_pair(FiniteAlgebra algebra, std::vector<Rational> counit,
                                  bool commutative);

/// The extra structure of the equipped theory: a basis matrix for the
/// involution on each side and the distinguished element of A.
struct Equipment {
    Matrix star_a;
    Matrix star_b;
    AlgebraElement u;
};

/// A pair of Frobenius pairs (A commutative) joined by an algebra map
/// phi : A -> B whose image is central, subject to the trace identity
/// checked by verify_cardy; optionally equipped.
struct EquippedCF {
    FrobeniusPair A;
    FrobeniusPair B;
    Matrix phi;  // dim(B) x dim(A), columns are phi of A's basis
    std::optional<Equipment> equipment;

    AlgebraElement apply_phi(const AlgebraElement& a) const;
    AlgebraElement star_a(const AlgebraElement& a) const;
    AlgebraElement star_b(const AlgebraElement& b) const;
    /// Raises BuildError when no equipment is attached.
    const Equipment& equip() const;
};

/// Sum F^ij b_i b_j over the form's inverse; requires non-degeneracy.
AlgebraElement casimir(const FrobeniusPair& p);
/// Sum F^ij b_i (b_j)^star; requires non-degeneracy.
AlgebraElement twisted_casimir(const FrobeniusPair& p, const Matrix& star);
/// Adjoint of phi with respect to the two forms: (phi_dual(b), a)_A = (b, phi(a))_B.
AlgebraElement phi_dual(const EquippedCF& cf, const AlgebraElement& b);
/// Trace on B of y |-> x1 * y * x2.
Rational w_trace(const EquippedCF& cf, const AlgebraElement& x1, const AlgebraElement& x2);
/// Sum F^ij b_i x b_j over B's form; lands in the center of B.
AlgebraElement handle_twist(const FrobeniusPair& b, const AlgebraElement& x);

/// One named verification check with a witness line for failures.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass; first failing instance otherwise
};

/// Deterministic verification report: checks sorted by name.
struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string witness = "");
    bool all_pass() const;
    void sort_by_name();
};

/// Checks unit laws, associativity, gram symmetry, non-degeneracy, and
/// commutativity when declared.
Report verify_frobenius_pair(const FrobeniusPair& p);
/// Checks that phi is a unital homomorphism with central image and that
/// the trace identity holds on all basis pairs.
/// pre: both pairs pass verify_frobenius_pair.
Report verify_cardy(const EquippedCF& cf);
/// Checks the involution axioms, counit invariance, compatibility with
/// phi, and the two conditions on the distinguished element.
/// pre: equipment is present and verify_cardy passes.
Report verify_equipment(const EquippedCF& cf);

}  // namespace cfalg
