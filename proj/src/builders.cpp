#include "cfalg/builders.hpp"

#include <cstdint>

#include "cfalg/errors.hpp"

namespace cfalg {

int division_dim(DivisionRing ring) {
    switch (ring) {
        case DivisionRing::R: return 1;
        case DivisionRing::C: return 2;
        case DivisionRing::H: return 4;
    }
    throw BuildError("unknown division ring tag");
}

DivisionRing parse_division_ring(const std::string& text) {
    if (text == "R") return DivisionRing::R;
    if (text == "C") return DivisionRing::C;
    if (text == "H") return DivisionRing::H;
    throw ParseError("unknown division ring '" + text + "' (expected R, C, or H)");
}

namespace {

std::string class_label(const FiniteGroup& g, int c) {
    return "[" + g.labels[g.class_rep(c)] + "]";
}

/// Unit-component multiplication shared by the quaternion realizations:
/// axes 0..3 stand for 1, i, j, k.
const int kAxisMul[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
const int kSignMul[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
};

}  // namespace

CenterData group_center(const FiniteGroup& g) {
    const int nc = g.num_classes();
    std::vector<std::string> labels;
    labels.reserve(nc);
    for (int c = 0; c < nc; ++c) labels.push_back(class_label(g, c));

    // E_a * E_b expanded by convolving the class indicator functions; the
    // result is a class function, read off at class representatives.
    std::vector<FiniteAlgebra::SparseRow> rows(static_cast<std::size_t>(nc) * nc);
    std::vector<long> conv(g.order);
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) {
            std::fill(conv.begin(), conv.end(), 0L);
            for (int x : g.classes[a])
                for (int y : g.classes[b]) ++conv[g.mul(x, y)];
            FiniteAlgebra::SparseRow& row = rows[static_cast<std::size_t>(a) * nc + b];
            for (int c = 0; c < nc; ++c)
                if (long v = conv[g.class_rep(c)]; v != 0) row.emplace_back(c, Rational(v));
        }

    AlgebraElement unit = AlgebraElement::zero(nc);
    unit[0] = 1;
    FiniteAlgebra algebra(std::move(labels), std::move(rows), std::move(unit));

    Matrix star(nc, nc);
    for (int c = 0; c < nc; ++c) star.at(g.inverse_class(c), c) = 1;

    std::vector<long> squares(g.order, 0);
    for (int x = 0; x < g.order; ++x) ++squares[g.mul(x, x)];
    AlgebraElement u = AlgebraElement::zero(nc);
    for (int c = 0; c < nc; ++c) u[c] = Rational(squares[g.class_rep(c)]);

    return CenterData{std::move(algebra), std::move(star), std::move(u)};
}

EquippedCF regular_algebra(const GroupPtr& gp) {
    if (!gp) throw BuildError("regular_algebra requires a group");
    const FiniteGroup& g = *gp;
    CenterData cd = group_center(g);
    const int nc = g.num_classes();

    std::vector<Rational> la(nc);
    la[0] = Rational(1, g.order);
    FrobeniusPair a = make_frobenius_pair(cd.algebra, std::move(la), true);

    std::vector<FiniteAlgebra::SparseRow> rows(static_cast<std::size_t>(g.order) * g.order);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            rows[static_cast<std::size_t>(x) * g.order + y].emplace_back(g.mul(x, y), 1);
    AlgebraElement unit_b = AlgebraElement::zero(g.order);
    unit_b[0] = 1;
    FiniteAlgebra balg(g.labels, std::move(rows), std::move(unit_b));
    std::vector<Rational> lb(g.order);
    lb[0] = 1;
    FrobeniusPair b = make_frobenius_pair(std::move(balg), std::move(lb), g.is_abelian());

    Matrix phi(g.order, nc);
    for (int c = 0; c < nc; ++c)
        for (int x : g.classes[c]) phi.at(x, c) = 1;

    Matrix star_b(g.order, g.order);
    for (int x = 0; x < g.order; ++x) star_b.at(g.inv[x], x) = 1;

    return EquippedCF{std::move(a), std::move(b), std::move(phi),
                      Equipment{std::move(cd.star), std::move(star_b), std::move(cd.u)}};
}

EquippedCF division_model(DivisionRing ring, int n, const Rational& mu, int dim_cap) {
    const int d = division_dim(ring);
    if (mu.is_zero()) throw BuildError("division model requires a nonzero mu");
    if (n < 1) throw BuildError("division model requires n >= 1");
    if (static_cast<long>(n) * d > dim_cap)
        throw BuildError("division model size exceeds the cap of " + std::to_string(dim_cap));

    const int dim_b = n * n * d;
    auto index = [&](int p, int q, int x) { return (p * n + q) * d + x; };
    static const char* kComp[4] = {"", "i", "j", "k"};

    std::vector<std::string> labels_b;
    labels_b.reserve(dim_b);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int x = 0; x < d; ++x)
                labels_b.push_back("E[" + std::to_string(p) + "," + std::to_string(q) + "]" +
                                   kComp[x]);

    std::vector<FiniteAlgebra::SparseRow> rows(static_cast<std::size_t>(dim_b) * dim_b);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int x = 0; x < d; ++x)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s)
                        for (int y = 0; y < d; ++y) {
                            if (q != r) continue;
                            int i = index(p, q, x), j = index(r, s, y);
                            rows[static_cast<std::size_t>(i) * dim_b + j].emplace_back(
                                index(p, s, kAxisMul[x][y]), kSignMul[x][y]);
                        }

    AlgebraElement unit_b = AlgebraElement::zero(dim_b);
    for (int p = 0; p < n; ++p) unit_b[index(p, p, 0)] = 1;
    std::vector<Rational> lb(dim_b);
    for (int p = 0; p < n; ++p) lb[index(p, p, 0)] = mu;
    FiniteAlgebra balg(std::move(labels_b), std::move(rows), unit_b);
    FrobeniusPair b = make_frobenius_pair(std::move(balg), std::move(lb), n == 1 && d <= 2);

    const int dim_a = (ring == DivisionRing::C) ? 2 : 1;
    std::vector<std::string> labels_a{"1"};
    std::vector<FiniteAlgebra::SparseRow> rows_a(static_cast<std::size_t>(dim_a) * dim_a);
    rows_a[0].emplace_back(0, 1);
    if (dim_a == 2) {
        labels_a.push_back("i");
        rows_a[1].emplace_back(1, 1);  // 1*i
        rows_a[2].emplace_back(1, 1);  // i*1
        rows_a[3].emplace_back(0, -1);  // i*i
    }
    AlgebraElement unit_a = AlgebraElement::zero(dim_a);
    unit_a[0] = 1;
    std::vector<Rational> la(dim_a);
    la[0] = mu * mu / d;
    FrobeniusPair a =
        make_frobenius_pair(FiniteAlgebra(std::move(labels_a), std::move(rows_a), unit_a),
                            std::move(la), true);

    Matrix phi(dim_b, dim_a);
    for (int p = 0; p < n; ++p) {
        phi.at(index(p, p, 0), 0) = 1;
        if (dim_a == 2) phi.at(index(p, p, 1), 1) = 1;
    }

    Matrix star_b(dim_b, dim_b);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int x = 0; x < d; ++x)
                star_b.at(index(q, p, x), index(p, q, x)) = (x == 0) ? 1 : -1;

    Matrix star_a = Matrix::identity(dim_a);
    if (dim_a == 2) star_a.at(1, 1) = -1;

    AlgebraElement u = AlgebraElement::zero(dim_a);
    u[0] = Rational(2 - d) / mu;

    return EquippedCF{std::move(a), std::move(b), std::move(phi),
                      Equipment{std::move(star_a), std::move(star_b), std::move(u)}};
}

OrbitBasis orbit_basis(const GroupAction& act, long tuple_cap) {
    OrbitBasis basis;
    basis.orbits = orbits_on_tuples(act, 2, tuple_cap);
    const int nb = basis.size();
    const int m = act.set_size;

    std::vector<int> orbit_of(static_cast<std::size_t>(m) * m, -1);
    for (int i = 0; i < nb; ++i)
        for (const auto& t : basis.orbits[i].members)
            orbit_of[static_cast<std::size_t>(t[0]) * m + t[1]] = i;

    basis.star_perm.resize(nb);
    basis.labels.reserve(nb);
    for (int i = 0; i < nb; ++i) {
        const auto& rep = basis.orbits[i].representative;
        basis.star_perm[i] = orbit_of[static_cast<std::size_t>(rep[1]) * m + rep[0]];
        basis.labels.push_back("(" + std::to_string(rep[0]) + "," + std::to_string(rep[1]) + ")");
    }
    return basis;
}

std::vector<Rational> orbit_trilinear_form(const GroupAction& act, const OrbitBasis& basis) {
    const int m = act.set_size;
    const int nb = basis.size();
    const long order = act.group->order;

    std::vector<int> orbit_of(static_cast<std::size_t>(m) * m, -1);
    for (int i = 0; i < nb; ++i)
        for (const auto& t : basis.orbits[i].members)
            orbit_of[static_cast<std::size_t>(t[0]) * m + t[1]] = i;

    std::vector<std::int64_t> count(static_cast<std::size_t>(nb) * nb * nb, 0);
    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2) {
            int o12 = orbit_of[static_cast<std::size_t>(x1) * m + x2];
            for (int x3 = 0; x3 < m; ++x3) {
                int o23 = orbit_of[static_cast<std::size_t>(x2) * m + x3];
                int o31 = orbit_of[static_cast<std::size_t>(x3) * m + x1];
                ++count[(static_cast<std::size_t>(o12) * nb + o23) * nb + o31];
            }
        }

    std::vector<Rational> t(count.size());
    for (std::size_t i = 0; i < count.size(); ++i)
        if (count[i] != 0) t[i] = Rational(Integer(static_cast<long>(count[i])), Integer(order));
    return t;
}

EquippedCF action_algebra(const GroupAction& act) {
    if (!act.group) throw BuildError("action_algebra requires an action");
    AlgebraElement mu = AlgebraElement::zero(act.group->num_classes());
    mu[0] = 1;
    return action_algebra(act, mu);
}

EquippedCF action_algebra(const GroupAction& act, const AlgebraElement& mu) {
    if (!act.group) throw BuildError("action_algebra requires an action");
    const FiniteGroup& g = *act.group;
    const int nc = g.num_classes();
    const int m = act.set_size;
    if (mu.size() != nc)
        throw BuildError("mu must be given over the class-sum basis (" + std::to_string(nc) +
                         " coefficients)");
    for (int c = 0; c < nc; ++c)
        if (mu[c] != mu[g.inverse_class(c)]) throw BuildError("mu is not star-invariant");

    Matrix mu_hat(m, m);
    for (int e = 0; e < g.order; ++e) {
        const Rational& w = mu[g.class_of[e]];
        if (w.is_zero()) continue;
        for (int x = 0; x < m; ++x) mu_hat.at(act.act(e, x), x) += w;
    }
    try {
        invert_matrix(mu_hat);
    } catch (const SingularMatrixError&) {
        throw BuildError("mu is not invertible on the permutation representation");
    }

    CenterData cd = group_center(g);
    AlgebraElement mu2 = cd.algebra.multiply(mu, mu);
    std::vector<Rational> la(nc);
    for (int c = 0; c < nc; ++c) {
        // coefficient of the identity in mu^2 * E_c, over |G|
        la[c] = cd.algebra.multiply(mu2, cd.algebra.basis_element(c))[0] / g.order;
    }
    FrobeniusPair a = make_frobenius_pair(cd.algebra, std::move(la), true);

    OrbitBasis ob = orbit_basis(act);
    const int nb = ob.size();
    std::vector<Rational> tri = orbit_trilinear_form(act, ob);

    // (b_i b_j, b_k) = (b_i, b_j, b_k) and (b_k, b_l) = delta_{l, star(k)} / aut_k
    // recover the product: coefficient of b_k in b_i b_j is
    // (b_i, b_j, star(k)) * aut_k.
    std::vector<FiniteAlgebra::SparseRow> rows(static_cast<std::size_t>(nb) * nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            FiniteAlgebra::SparseRow& row = rows[static_cast<std::size_t>(i) * nb + j];
            for (int k = 0; k < nb; ++k) {
                const Rational& t =
                    tri[(static_cast<std::size_t>(i) * nb + j) * nb + ob.star_perm[k]];
                if (!t.is_zero())
                    row.emplace_back(k, t * Rational(ob.orbits[k].stabilizer_order));
            }
        }

    AlgebraElement unit_b = AlgebraElement::zero(nb);
    for (int k = 0; k < nb; ++k) {
        const auto& rep = ob.orbits[k].representative;
        if (rep[0] == rep[1]) unit_b[k] = 1;
    }
    FiniteAlgebra balg(ob.labels, std::move(rows), std::move(unit_b));

    std::vector<Rational> lb(nb);
    for (int k = 0; k < nb; ++k) {
        Rational tr;
        for (const auto& t : ob.orbits[k].members) tr += mu_hat.at(t[1], t[0]);
        lb[k] = tr / g.order;
    }
    bool b_comm = balg.is_commutative();
    FrobeniusPair b = make_frobenius_pair(std::move(balg), std::move(lb), b_comm);

    Matrix phi(nb, nc);
    for (int k = 0; k < nb; ++k) {
        const auto& rep = ob.orbits[k].representative;
        for (int c = 0; c < nc; ++c) {
            long hits = 0;
            for (int e : g.classes[c])
                if (act.act(e, rep[1]) == rep[0]) ++hits;
            if (hits != 0) phi.at(k, c) = Rational(hits);
        }
    }

    Matrix star_b(nb, nb);
    for (int k = 0; k < nb; ++k) star_b.at(ob.star_perm[k], k) = 1;

    // Weighting the forms by mu scales the twisted Casimirs: K_A^star picks
    // up mu^-2 and K_B^star picks up mu^-1 relative to the unit weight.  So
    // the element with U^2 = K_A^star and phi(U) = K_B^star is the square
    // sum divided by mu.  When mu has no central inverse the A form is
    // already degenerate and the equipment axioms are unverifiable; the
    // unscaled element is kept so the failure is reported by the verifier
    // rather than masked by a build error.
    AlgebraElement u = cd.u;
    try {
        const Matrix mu_inv = invert_matrix(cd.algebra.left_multiplication(mu));
        u.coeffs = mu_inv.apply(cd.u.coeffs);
    } catch (const SingularMatrixError&) {
    }

    return EquippedCF{std::move(a), std::move(b), std::move(phi),
                      Equipment{std::move(cd.star), std::move(star_b), std::move(u)}};
}

FiniteAlgebra intertwiner_model(const GroupAction& act, long tuple_cap) {
    if (!act.group) throw BuildError("intertwiner_model requires an action");
    OrbitBasis ob = orbit_basis(act, tuple_cap);
    const int nb = ob.size();
    const int m = act.set_size;

    std::vector<int> orbit_of(static_cast<std::size_t>(m) * m, -1);
    for (int i = 0; i < nb; ++i)
        for (const auto& t : ob.orbits[i].members)
            orbit_of[static_cast<std::size_t>(t[0]) * m + t[1]] = i;

    // Indicator matrices, multiplied literally.
    auto mat = [&](int i) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(m) * m, 0);
        for (const auto& t : ob.orbits[i].members) v[static_cast<std::size_t>(t[0]) * m + t[1]] = 1;
        return v;
    };

    std::vector<FiniteAlgebra::SparseRow> rows(static_cast<std::size_t>(nb) * nb);
    for (int i = 0; i < nb; ++i) {
        std::vector<std::int64_t> mi = mat(i);
        for (int j = 0; j < nb; ++j) {
            std::vector<std::int64_t> mj = mat(j);
            std::vector<std::int64_t> prod(static_cast<std::size_t>(m) * m, 0);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    if (mi[static_cast<std::size_t>(x) * m + y] == 0) continue;
                    for (int z = 0; z < m; ++z)
                        prod[static_cast<std::size_t>(x) * m + z] +=
                            mj[static_cast<std::size_t>(y) * m + z];
                }
            // Read coefficients at representatives, then insist the product
            // really is constant on every orbit.
            std::vector<std::int64_t> coeff(nb);
            for (int k = 0; k < nb; ++k) {
                const auto& rep = ob.orbits[k].representative;
                coeff[k] = prod[static_cast<std::size_t>(rep[0]) * m + rep[1]];
            }
            for (int x = 0; x < m; ++x)
                for (int z = 0; z < m; ++z)
                    if (prod[static_cast<std::size_t>(x) * m + z] !=
                        coeff[orbit_of[static_cast<std::size_t>(x) * m + z]])
                        throw BuildError("re-expansion failure: product not orbit-constant");
            FiniteAlgebra::SparseRow& row = rows[static_cast<std::size_t>(i) * nb + j];
            for (int k = 0; k < nb; ++k)
                if (coeff[k] != 0) row.emplace_back(k, Rational(static_cast<long>(coeff[k])));
        }
    }

    AlgebraElement unit = AlgebraElement::zero(nb);
    for (int k = 0; k < nb; ++k) {
        const auto& rep = ob.orbits[k].representative;
        if (rep[0] == rep[1]) unit[k] = 1;
    }
    return FiniteAlgebra(ob.labels, std::move(rows), std::move(unit));
}

EquippedCF hecke_algebra(const GroupPtr& g, const std::vector<int>& subgroup_elements) {
    return action_algebra(coset_action(g, subgroup_elements));
}

Rational frobenius_schur_trace(const GroupAction& act) {
    if (!act.group) throw BuildError("frobenius_schur_trace requires an action");
    const FiniteGroup& g = *act.group;
    long total = 0;
    for (int e = 0; e < g.order; ++e) total += act.fixed_points(g.mul(e, e));
    return Rational(total);
}

}  // namespace cfalg
