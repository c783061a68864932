#pragma once

#include <memory>
#include <string>
#include <vector>

namespace cfalg {

/// Bijection of {0, ..., n-1}, stored as the image vector.
class Permutation {
  public:
    /// pre: images is a bijection of {0, ..., n-1}; raises BuildError otherwise.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator[](int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    /// (a.compose(b))(x) = a(b(x)); b acts first.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    bool is_identity() const;
    /// Disjoint cycle notation on 0-based points; "e" for the identity.
    std::string cycle_string() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

  private:
    std::vector<int> images_;
};

/// Groups above this order are rejected by the element-listing constructors.
inline constexpr int kDefaultOrderCap = 200;

/// Finite group given by a full multiplication table over element indices
/// 0..order-1, with index 0 always the identity.  Every element carries a
/// faithful permutation realization and a printable label.  Conjugacy
/// classes are listed with the identity's class first, then by minimal
/// member index; class_of inverts the listing.
struct FiniteGroup {
    int order = 0;
    std::vector<int> mul_table;                // order x order, row-major
    std::vector<int> inv;                      // inverse element indices
    std::vector<Permutation> elements;         // shared degree
    std::vector<std::string> labels;
    std::vector<int> generators;               // element indices
    std::vector<std::vector<int>> classes;     // each sorted ascending
    std::vector<int> class_of;

    int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a) * order + b]; }
    int degree() const { return elements.empty() ? 0 : elements.front().size(); }
    int num_classes() const { return static_cast<int>(classes.size()); }
    int class_rep(int c) const { return classes[c].front(); }
    /// Index of the class holding the inverses of class c.
    int inverse_class(int c) const { return class_of[inv[class_rep(c)]]; }
    bool is_abelian() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closes a generating set of same-degree permutations under composition.
/// Raises BuildError when the closure passes order_cap or the degrees differ.
GroupPtr group_from_generators(const std::vector<Permutation>& gens,
                               int order_cap = kDefaultOrderCap);

GroupPtr cyclic_group(int n, int order_cap = kDefaultOrderCap);
/// pre: n >= 3 (the degenerate cases collide with cyclic groups).
GroupPtr dihedral_group(int n, int order_cap = kDefaultOrderCap);
GroupPtr symmetric_group(int n, int order_cap = kDefaultOrderCap);
/// The quaternion group {1, -1, i, -i, j, -j, k, -k}.
GroupPtr quaternion_group();

/// Product group on the disjoint union of the factors' points, elements
/// labeled "(a,b)"; factor order: g index varies slower.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, int order_cap = kDefaultOrderCap);

/// Left action of a group on a finite set {0, ..., set_size-1}.
struct GroupAction {
    GroupPtr group;
    int set_size = 0;
    std::vector<int> table;  // order x set_size, row-major

    int act(int g, int x) const { return table[static_cast<std::size_t>(g) * set_size + x]; }
    /// Number of points fixed by element g.
    int fixed_points(int g) const;
};

/// The defining action on the points the elements permute.
GroupAction natural_action(const GroupPtr& g);
/// Left translation on the group itself (a point per element).
GroupAction regular_action(const GroupPtr& g);
/// Left translation on left cosets of the given subgroup.  Cosets are
/// numbered by their minimal member, ascending, so the subgroup itself is
/// point 0.  pre: subgroup_elements is closed (see subgroup_closure).
GroupAction coset_action(const GroupPtr& g, const std::vector<int>& subgroup_elements);

/// Closure of the given element indices (plus identity) under product.
/// Returns the subgroup sorted ascending.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& elements);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

/// Diagonal-action orbit enumerations above this many tuples are rejected.
inline constexpr long kDefaultTupleCap = 1000000;

/// One orbit of the diagonal action on arity-tuples of points.
struct TupleOrbit {
    std::vector<int> representative;        // lexicographically minimal member
    std::vector<std::vector<int>> members;  // sorted lexicographically
    long stabilizer_order = 0;

    long size() const { return static_cast<long>(members.size()); }
};

/// All orbits of the diagonal action on set_size^arity tuples, sorted by
/// representative.  Raises BuildError past tuple_cap.
std::vector<TupleOrbit> orbits_on_tuples(const GroupAction& action, int arity,
                                         long tuple_cap = kDefaultTupleCap);

}  // namespace cfalg
