#include "cfalg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "cfalg/errors.hpp"

namespace cfalg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw BuildError("permutation images are not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw BuildError("composing permutations of different degree");
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[i] = images_[other.images_[i]];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    std::vector<char> seen(images_.size(), 0);
    std::ostringstream os;
    bool any = false;
    for (int start = 0; start < size(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        os << "(";
        int x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            os << (first ? "" : " ") << x;
            first = false;
            x = images_[x];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "e";
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

namespace {

void compute_classes(FiniteGroup& g) {
    // Conjugating by a generating set reaches the whole class; with no
    // generators recorded, conjugate by everything.
    std::vector<int> conjugators = g.generators;
    if (conjugators.empty()) {
        conjugators.resize(g.order);
        std::iota(conjugators.begin(), conjugators.end(), 0);
    }
    g.class_of.assign(g.order, -1);
    g.classes.clear();
    for (int x = 0; x < g.order; ++x) {
        if (g.class_of[x] >= 0) continue;
        int c = static_cast<int>(g.classes.size());
        std::vector<int> members;
        std::queue<int> todo;
        g.class_of[x] = c;
        todo.push(x);
        members.push_back(x);
        while (!todo.empty()) {
            int y = todo.front();
            todo.pop();
            for (int s : conjugators) {
                int z = g.mul(g.mul(s, y), g.inv[s]);
                if (g.class_of[z] < 0) {
                    g.class_of[z] = c;
                    todo.push(z);
                    members.push_back(z);
                }
            }
        }
        std::sort(members.begin(), members.end());
        g.classes.push_back(std::move(members));
    }
}

/// Shared tail for the table-based constructors: validates the table
/// against the permutation realization and fills the derived fields.
GroupPtr finish_group(std::vector<int> mul_table, std::vector<Permutation> elements,
                      std::vector<std::string> labels, std::vector<int> generators) {
    auto g = std::make_shared<FiniteGroup>();
    g->order = static_cast<int>(elements.size());
    g->mul_table = std::move(mul_table);
    g->elements = std::move(elements);
    g->labels = std::move(labels);
    g->generators = std::move(generators);

    const int n = g->order;
    if (n <= 0) throw BuildError("empty group");
    if (static_cast<int>(g->mul_table.size()) != n * n ||
        static_cast<int>(g->labels.size()) != n)
        throw BuildError("inconsistent group table sizes");
    for (int v : g->mul_table)
        if (v < 0 || v >= n) throw BuildError("group table entry out of range");
    for (int x = 0; x < n; ++x)
        if (g->mul(0, x) != x || g->mul(x, 0) != x)
            throw BuildError("group table identity must sit at index 0");

    // The permutation realization certifies associativity: composition is
    // associative, and the table must match it element by element.
    std::set<std::vector<int>> distinct;
    for (const auto& p : g->elements) {
        if (p.size() != g->elements.front().size())
            throw BuildError("group elements have mixed permutation degree");
        if (!distinct.insert(p.images()).second)
            throw BuildError("group permutation realization is not faithful");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(g->elements[a].compose(g->elements[b]) == g->elements[g->mul(a, b)]))
                throw BuildError("group table disagrees with its permutation realization");

    g->inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g->mul(a, b) == 0 && g->mul(b, a) == 0) {
                g->inv[a] = b;
                break;
            }
        if (g->inv[a] < 0) throw BuildError("group table has an element without inverse");
    }

    for (int s : g->generators)
        if (s < 0 || s >= n) throw BuildError("generator index out of range");

    compute_classes(*g);
    return g;
}

}  // namespace

GroupPtr group_from_generators(const std::vector<Permutation>& gens, int order_cap) {
    if (gens.empty()) throw BuildError("a generating set must contain at least one permutation");
    const int degree = gens.front().size();
    for (const auto& p : gens)
        if (p.size() != degree) throw BuildError("generators have mixed permutation degree");
    if (degree <= 0) throw BuildError("generators must act on at least one point");

    std::vector<Permutation> elements;
    std::map<std::vector<int>, int> index;
    elements.push_back(Permutation::identity(degree));
    index.emplace(elements[0].images(), 0);
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& s : gens) {
            Permutation next = elements[head].compose(s);
            if (index.emplace(next.images(), static_cast<int>(elements.size())).second) {
                elements.push_back(next);
                if (static_cast<int>(elements.size()) > order_cap)
                    throw BuildError("group order exceeds the cap of " +
                                     std::to_string(order_cap));
            }
        }
    }

    const int n = static_cast<int>(elements.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] =
                index.at(elements[a].compose(elements[b]).images());

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elements) labels.push_back(p.cycle_string());

    std::vector<int> gen_indices;
    for (const auto& s : gens) {
        int i = index.at(s.images());
        if (i != 0 && std::find(gen_indices.begin(), gen_indices.end(), i) == gen_indices.end())
            gen_indices.push_back(i);
    }

    return finish_group(std::move(table), std::move(elements), std::move(labels),
                        std::move(gen_indices));
}

GroupPtr cyclic_group(int n, int order_cap) {
    if (n < 1) throw BuildError("cyclic_group requires n >= 1");
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return group_from_generators({Permutation(std::move(im))}, order_cap);
}

GroupPtr dihedral_group(int n, int order_cap) {
    if (n < 3) throw BuildError("dihedral_group requires n >= 3");
    std::vector<int> rot(n), flip(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        flip[i] = (n - i) % n;
    }
    return group_from_generators({Permutation(std::move(rot)), Permutation(std::move(flip))},
                                 order_cap);
}

GroupPtr symmetric_group(int n, int order_cap) {
    if (n < 1) throw BuildError("symmetric_group requires n >= 1");
    if (n == 1) return cyclic_group(1, order_cap);
    std::vector<int> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    swap01[0] = 1;
    swap01[1] = 0;
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::vector<Permutation> gens{Permutation(std::move(swap01))};
    if (n > 2) gens.emplace_back(std::move(cycle));
    return group_from_generators(gens, order_cap);
}

GroupPtr quaternion_group() {
    // Elements as (sign, axis) pairs with axes 1, i, j, k; index = 2*axis + (sign < 0).
    static const int axis_mul[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},  // i*i = -1, i*j = k,  i*k = -j
        {2, 3, 0, 1},  // j*i = -k, j*j = -1, j*k = i
        {3, 2, 1, 0},  // k*i = j,  k*j = -i, k*k = -1
    };
    static const int sign_mul[4][4] = {
        {+1, +1, +1, +1},
        {+1, -1, +1, -1},
        {+1, -1, -1, +1},
        {+1, +1, -1, -1},
    };
    const int n = 8;
    auto idx = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ax_a = a / 2, sg_a = (a % 2) ? -1 : +1;
            int ax_b = b / 2, sg_b = (b % 2) ? -1 : +1;
            table[a * n + b] = idx(axis_mul[ax_a][ax_b], sg_a * sg_b * sign_mul[ax_a][ax_b]);
        }
    std::vector<Permutation> elements;
    for (int a = 0; a < n; ++a) {
        std::vector<int> im(n);
        for (int x = 0; x < n; ++x) im[x] = table[a * n + x];
        elements.emplace_back(std::move(im));
    }
    std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return finish_group(std::move(table), std::move(elements), std::move(labels),
                        {idx(1, +1), idx(2, +1)});
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, int order_cap) {
    if (!g || !h) throw BuildError("direct_product requires two groups");
    long order = static_cast<long>(g->order) * h->order;
    if (order > order_cap)
        throw BuildError("group order exceeds the cap of " + std::to_string(order_cap));
    const int n = static_cast<int>(order);
    const int dg = g->degree(), dh = h->degree();
    auto idx = [&](int a, int b) { return a * h->order + b; };

    std::vector<int> table(static_cast<std::size_t>(n) * n);
    std::vector<Permutation> elements;
    std::vector<std::string> labels;
    elements.reserve(n);
    labels.reserve(n);
    for (int a = 0; a < g->order; ++a)
        for (int b = 0; b < h->order; ++b) {
            std::vector<int> im(dg + dh);
            for (int x = 0; x < dg; ++x) im[x] = g->elements[a][x];
            for (int x = 0; x < dh; ++x) im[dg + x] = dg + h->elements[b][x];
            elements.emplace_back(std::move(im));
            labels.push_back("(" + g->labels[a] + "," + h->labels[b] + ")");
        }
    for (int a = 0; a < g->order; ++a)
        for (int b = 0; b < h->order; ++b)
            for (int c = 0; c < g->order; ++c)
                for (int d = 0; d < h->order; ++d)
                    table[static_cast<std::size_t>(idx(a, b)) * n + idx(c, d)] =
                        idx(g->mul(a, c), h->mul(b, d));

    std::vector<int> gens;
    for (int s : g->generators) gens.push_back(idx(s, 0));
    for (int s : h->generators) gens.push_back(idx(0, s));
    return finish_group(std::move(table), std::move(elements), std::move(labels),
                        std::move(gens));
}

int GroupAction::fixed_points(int g) const {
    int count = 0;
    for (int x = 0; x < set_size; ++x)
        if (act(g, x) == x) ++count;
    return count;
}

GroupAction natural_action(const GroupPtr& g) {
    if (!g) throw BuildError("natural_action requires a group");
    GroupAction a;
    a.group = g;
    a.set_size = g->degree();
    a.table.resize(static_cast<std::size_t>(g->order) * a.set_size);
    for (int e = 0; e < g->order; ++e)
        for (int x = 0; x < a.set_size; ++x)
            a.table[static_cast<std::size_t>(e) * a.set_size + x] = g->elements[e][x];
    return a;
}

GroupAction regular_action(const GroupPtr& g) {
    if (!g) throw BuildError("regular_action requires a group");
    GroupAction a;
    a.group = g;
    a.set_size = g->order;
    a.table.resize(static_cast<std::size_t>(g->order) * g->order);
    for (int e = 0; e < g->order; ++e)
        for (int x = 0; x < g->order; ++x)
            a.table[static_cast<std::size_t>(e) * g->order + x] = g->mul(e, x);
    return a;
}

GroupAction coset_action(const GroupPtr& g, const std::vector<int>& subgroup_elements) {
    if (!g) throw BuildError("coset_action requires a group");
    if (!is_subgroup(*g, subgroup_elements))
        throw BuildError("coset_action requires a subgroup closed under product and inverse");

    std::vector<int> coset_of(g->order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g->order; ++x) {
        if (coset_of[x] >= 0) continue;
        int p = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : subgroup_elements) coset_of[g->mul(x, h)] = p;
    }

    GroupAction a;
    a.group = g;
    a.set_size = static_cast<int>(reps.size());
    a.table.resize(static_cast<std::size_t>(g->order) * a.set_size);
    for (int e = 0; e < g->order; ++e)
        for (int p = 0; p < a.set_size; ++p)
            a.table[static_cast<std::size_t>(e) * a.set_size + p] = coset_of[g->mul(e, reps[p])];
    return a;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& elements) {
    std::vector<char> in(g.order, 0);
    in[0] = 1;
    std::vector<int> members{0};
    for (int x : elements) {
        if (x < 0 || x >= g.order) throw BuildError("subgroup element index out of range");
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    }
    // A finite subset closed under product is a subgroup.
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (int z : {g.mul(members[i], members[j]), g.mul(members[j], members[i])})
                if (!in[z]) {
                    in[z] = 1;
                    members.push_back(z);
                }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
    std::vector<char> in(g.order, 0);
    for (int x : elements) {
        if (x < 0 || x >= g.order) return false;
        in[x] = 1;
    }
    if (!in[0]) return false;
    for (int a : elements) {
        if (!in[g.inv[a]]) return false;
        for (int b : elements)
            if (!in[g.mul(a, b)]) return false;
    }
    return true;
}

std::vector<TupleOrbit> orbits_on_tuples(const GroupAction& action, int arity, long tuple_cap) {
    if (!action.group) throw BuildError("orbits_on_tuples requires an action");
    if (arity < 1) throw BuildError("orbits_on_tuples requires arity >= 1");
    const int m = action.set_size;
    const int order = action.group->order;
    long total = 1;
    for (int i = 0; i < arity; ++i) {
        total *= m;
        if (total > tuple_cap)
            throw BuildError("tuple enumeration exceeds the cap of " + std::to_string(tuple_cap));
    }

    auto decode = [&](long code) {
        std::vector<int> t(arity);
        for (int i = arity - 1; i >= 0; --i) {
            t[i] = static_cast<int>(code % m);
            code /= m;
        }
        return t;
    };

    std::vector<char> seen(total, 0);
    std::vector<TupleOrbit> orbits;
    for (long code = 0; code < total; ++code) {
        if (seen[code]) continue;
        std::vector<int> rep = decode(code);
        std::vector<long> images;
        images.reserve(order);
        long stab = 0;
        for (int e = 0; e < order; ++e) {
            long c = 0;
            for (int i = 0; i < arity; ++i) c = c * m + action.act(e, rep[i]);
            images.push_back(c);
            if (c == code) ++stab;
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());

        TupleOrbit orbit;
        orbit.representative = std::move(rep);
        orbit.stabilizer_order = stab;
        orbit.members.reserve(images.size());
        for (long c : images) {
            seen[c] = 1;
            orbit.members.push_back(decode(c));
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace cfalg
