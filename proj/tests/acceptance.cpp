// Acceptance gate: one line per numbered criterion, nonzero exit when any
// fails.  Every comparison is exact; no tolerance anywhere.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfalg/builders.hpp"
#include "cfalg/errors.hpp"
#include "cfalg/frobenius.hpp"
#include "cfalg/group.hpp"
#include "cfalg/surfaces.hpp"

namespace {

using namespace cfalg;

int g_failures = 0;

void criterion(int number, const std::string& text, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        pass = false;
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << text
              << note << "\n";
    if (!pass) ++g_failures;
}

bool fully_verified(const EquippedCF& cf) {
    return verify_frobenius_pair(cf.A).all_pass() && verify_frobenius_pair(cf.B).all_pass() &&
           verify_cardy(cf).all_pass() && verify_equipment(cf).all_pass();
}

Rational closed(const EquippedCF& cf, const SurfaceSpec& s,
                const std::vector<AlgebraElement>& interior) {
    CorrelatorInput input;
    for (const auto& e : interior) input.interior.push_back(Insertion{e, false});
    return correlator(cf, s, input);
}

Rational disk(const EquippedCF& cf, const std::vector<AlgebraElement>& boundary) {
    CorrelatorInput input;
    input.boundary.emplace_back();
    for (const auto& e : boundary) input.boundary[0].push_back(Insertion{e, false});
    return correlator(cf, make_surface(0, 0, 1), input);
}

AlgebraElement random_element(int dim) {
    AlgebraElement x = AlgebraElement::zero(dim);
    for (int i = 0; i < dim; ++i) x[i] = Rational(std::rand() % 7 - 3);
    return x;
}

bool regular_sweep(double* seconds) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<GroupPtr> groups;
    for (int n = 1; n <= 12; ++n) groups.push_back(cyclic_group(n));
    groups.push_back(symmetric_group(3));
    groups.push_back(symmetric_group(4));
    groups.push_back(dihedral_group(4));
    groups.push_back(quaternion_group());
    groups.push_back(direct_product(quaternion_group(), cyclic_group(3)));
    bool ok = true;
    for (const auto& g : groups) ok = ok && fully_verified(regular_algebra(g));
    *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && *seconds < 60.0;
}

bool torus_counts() {
    struct Row {
        GroupPtr group;
        int classes;
    };
    const std::vector<Row> rows{{symmetric_group(3), 3},
                                {dihedral_group(4), 5},
                                {quaternion_group(), 5},
                                {symmetric_group(4), 5},
                                {cyclic_group(6), 6}};
    bool ok = true;
    for (const auto& row : rows) {
        const FiniteGroup& g = *row.group;
        long commuting = 0;
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                if (g.mul(a, b) == g.mul(b, a)) ++commuting;
        const Rational brute = Rational(commuting) / Rational(g.order);
        const Rational z = closed(regular_algebra(row.group), make_surface(1, 0, 0), {});
        ok = ok && z == Rational(row.classes) && z == brute;
    }
    return ok;
}

bool frobenius_schur() {
    struct Summand {
        DivisionRing ring;
        int mult;
    };
    struct Case {
        GroupAction action;
        Rational trace;
        std::vector<Summand> decomposition;
    };
    const std::vector<Case> cases{
        {regular_action(symmetric_group(3)),
         Rational(24),
         {{DivisionRing::R, 1}, {DivisionRing::R, 1}, {DivisionRing::R, 2}}},
        {regular_action(quaternion_group()),
         Rational(16),
         {{DivisionRing::R, 4}, {DivisionRing::H, 1}}},
        {regular_action(cyclic_group(4)),
         Rational(8),
         {{DivisionRing::R, 2}, {DivisionRing::C, 1}}},
        {natural_action(symmetric_group(3)),
         Rational(12),
         {{DivisionRing::R, 1}, {DivisionRing::R, 1}}},
    };
    bool ok = true;
    for (const auto& c : cases) {
        Rational predicted;
        for (const auto& s : c.decomposition)
            predicted += Rational(s.mult * (2 - division_dim(s.ring)) * c.action.group->order);
        const Rational trace = frobenius_schur_trace(c.action);
        ok = ok && trace == c.trace && trace == predicted;
    }
    return ok;
}

bool division_sweep() {
    const std::vector<Rational> weights{Rational(1), Rational(2), Rational(-1, 2)};
    bool ok = true;
    for (DivisionRing ring : {DivisionRing::R, DivisionRing::C, DivisionRing::H}) {
        const int d = division_dim(ring);
        for (int n = 1; n <= 3; ++n) {
            for (const Rational& mu : weights) {
                auto cf = division_model(ring, n, mu);
                ok = ok && fully_verified(cf);
                ok = ok && cf.equip().u == scaled(cf.A.algebra.unit(), Rational(2 - d) / mu);
                if (ring == DivisionRing::C) {
                    ok = ok && cf.equip().u.is_zero() &&
                         twisted_casimir(cf.A, cf.equip().star_a).is_zero();
                }
            }
        }
    }
    return ok;
}

std::vector<GroupAction> oracle_actions() {
    std::vector<GroupAction> actions;
    actions.push_back(natural_action(symmetric_group(3)));
    actions.push_back(natural_action(symmetric_group(4)));
    actions.push_back(natural_action(dihedral_group(4)));
    actions.push_back(natural_action(cyclic_group(4)));
    auto s3 = symmetric_group(3);
    actions.push_back(coset_action(s3, subgroup_closure(*s3, {1})));
    return actions;
}

// The independent oracle for one action: multiply orbit indicator matrices
// (structure), read the weighted trace (counit), transpose the member set
// (star), and compare against the built theory.
bool orbit_oracle_agrees(const GroupAction& act) {
    const EquippedCF cf = action_algebra(act);
    const FiniteAlgebra literal = intertwiner_model(act);
    const OrbitBasis ob = orbit_basis(act);
    if (literal.dim() != cf.B.dim()) return false;
    if (literal.basis_labels() != cf.B.algebra.basis_labels()) return false;

    bool ok = literal.unit() == cf.B.algebra.unit();
    for (int i = 0; i < literal.dim(); ++i)
        for (int j = 0; j < literal.dim(); ++j)
            ok = ok && literal.multiply(literal.basis_element(i), literal.basis_element(j)) ==
                           cf.B.algebra.multiply(cf.B.algebra.basis_element(i),
                                                 cf.B.algebra.basis_element(j));

    const int order = act.group->order;
    for (int k = 0; k < ob.size(); ++k) {
        long diagonal = 0;
        for (const auto& member : ob.orbits[k].members)
            if (member[0] == member[1]) ++diagonal;
        ok = ok && cf.B.counit[k] == Rational(diagonal) / Rational(order);
    }

    for (int k = 0; k < ob.size(); ++k) {
        std::set<std::vector<int>> transposed;
        for (const auto& member : ob.orbits[k].members)
            transposed.insert({member[1], member[0]});
        int image = -1;
        for (int m = 0; m < ob.size(); ++m) {
            std::set<std::vector<int>> candidate(ob.orbits[m].members.begin(),
                                                 ob.orbits[m].members.end());
            if (candidate == transposed) image = m;
        }
        ok = ok && image >= 0 &&
             cf.star_b(cf.B.algebra.basis_element(k)) == cf.B.algebra.basis_element(image);
    }
    return ok;
}

bool orbit_oracle() {
    bool ok = true;
    for (const GroupAction& act : oracle_actions()) ok = ok && orbit_oracle_agrees(act);

    auto nat = action_algebra(natural_action(symmetric_group(3)));
    AlgebraElement b0 = nat.B.algebra.basis_element(0);
    AlgebraElement b1 = nat.B.algebra.basis_element(1);
    ok = ok && nat.B.algebra.multiply(b1, b1) == add(scaled(b0, Rational(2)), b1);
    return ok;
}

bool action_cardy() {
    bool ok = true;
    for (const GroupAction& act : oracle_actions())
        ok = ok && verify_cardy(action_algebra(act)).all_pass();
    return ok;
}

bool correlator_sanity() {
    bool ok = true;
    for (const auto& g : {cyclic_group(2), symmetric_group(3), quaternion_group()}) {
        const EquippedCF cf = regular_algebra(g);
        const FiniteAlgebra& b = cf.B.algebra;
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j) {
                const Rational expected(g->mul(i, j) == 0 ? 1 : 0);
                ok = ok && disk(cf, {b.basis_element(i), b.basis_element(j)}) == expected;
            }

        CorrelatorInput annulus;
        annulus.boundary.resize(2);
        ok = ok && correlator(cf, make_surface(0, 0, 2), annulus) == Rational(b.dim());

        const AlgebraElement& u = cf.equip().u;
        for (int i = 0; i < cf.A.dim(); ++i) {
            AlgebraElement x = cf.A.algebra.basis_element(i);
            ok = ok && closed(cf, make_surface(0, 1, 0), {x}) ==
                           cf.A.counit_of(cf.A.algebra.multiply(u, x));
        }
        ok = ok && closed(cf, make_surface(0, 2, 0), {}) ==
                       cf.A.counit_of(cf.A.algebra.multiply(u, u));
    }
    return ok;
}

bool cut_identities() {
    bool ok = true;
    for (const auto& g : {cyclic_group(2), symmetric_group(3)}) {
        const EquippedCF cf = regular_algebra(g);
        const int da = cf.A.dim();
        const int db = cf.B.dim();

        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j)
                for (int k = 0; k < da; ++k)
                    for (int l = 0; l < da; ++l) {
                        CutData data;
                        data.interior = {
                            cf.A.algebra.basis_element(i), cf.A.algebra.basis_element(j),
                            cf.A.algebra.basis_element(k), cf.A.algebra.basis_element(l)};
                        ok = ok && check_cut_identity(cf, "C1", data).all_pass();
                    }

        for (int i = 0; i < da; ++i) {
            CutData data;
            data.interior = {cf.A.algebra.basis_element(i)};
            ok = ok && check_cut_identity(cf, "C2", data).all_pass();
        }

        for (int i = 0; i < db; ++i)
            for (int j = 0; j < db; ++j)
                for (int k = 0; k < db; ++k)
                    for (int l = 0; l < db; ++l) {
                        CutData data;
                        data.boundary = {
                            cf.B.algebra.basis_element(i), cf.B.algebra.basis_element(j),
                            cf.B.algebra.basis_element(k), cf.B.algebra.basis_element(l)};
                        ok = ok && check_cut_identity(cf, "C3", data).all_pass();
                    }

        for (int i = 0; i < db; ++i)
            for (int j = 0; j < db; ++j) {
                CutData data;
                data.boundary = {cf.B.algebra.basis_element(i), cf.B.algebra.basis_element(j)};
                ok = ok && check_cut_identity(cf, "C4", data).all_pass();
            }

        ok = ok && check_cut_identity(cf, "C5", {}).all_pass();

        for (const SurfaceSpec& base :
             {make_surface(0, 0, 0), make_surface(1, 0, 0), make_surface(0, 1, 0)}) {
            CutData empty;
            empty.base = base;
            ok = ok && check_cut_identity(cf, "C6", empty).all_pass();
            for (int i = 0; i < da; ++i) {
                CutData data;
                data.base = base;
                data.interior = {cf.A.algebra.basis_element(i)};
                ok = ok && check_cut_identity(cf, "C6", data).all_pass();
            }
        }
    }
    return ok;
}

bool property_suites() {
    std::srand(909001);
    bool ok = true;

    // interior insertions commute on closed surfaces
    auto q8 = regular_algebra(quaternion_group());
    for (int round = 0; round < 10; ++round) {
        AlgebraElement x = random_element(q8.A.dim());
        AlgebraElement y = random_element(q8.A.dim());
        AlgebraElement z = random_element(q8.A.dim());
        for (const SurfaceSpec& s :
             {make_surface(0, 0, 0), make_surface(1, 0, 0), make_surface(0, 1, 0)}) {
            const Rational base = closed(q8, s, {x, y, z});
            ok = ok && base == closed(q8, s, {z, x, y}) && base == closed(q8, s, {y, x, z});
        }
    }

    // boundary contours are cyclic and mutually unordered
    auto s3 = regular_algebra(symmetric_group(3));
    for (int round = 0; round < 10; ++round) {
        AlgebraElement x = random_element(s3.B.dim());
        AlgebraElement y = random_element(s3.B.dim());
        AlgebraElement z = random_element(s3.B.dim());
        ok = ok && disk(s3, {x, y, z}) == disk(s3, {y, z, x});

        CorrelatorInput input;
        input.boundary.resize(2);
        input.boundary[0].push_back(Insertion{x, false});
        input.boundary[1].push_back(Insertion{y, false});
        input.boundary[1].push_back(Insertion{z, false});
        CorrelatorInput rotated;
        rotated.boundary.resize(2);
        rotated.boundary[0].push_back(Insertion{x, false});
        rotated.boundary[1].push_back(Insertion{z, false});
        rotated.boundary[1].push_back(Insertion{y, false});
        CorrelatorInput swapped;
        swapped.boundary.resize(2);
        swapped.boundary[0].push_back(Insertion{y, false});
        swapped.boundary[0].push_back(Insertion{z, false});
        swapped.boundary[1].push_back(Insertion{x, false});
        const SurfaceSpec s = make_surface(1, 0, 2);
        const Rational base = correlator(s3, s, input);
        ok = ok && base == correlator(s3, s, rotated) && base == correlator(s3, s, swapped);
    }

    // multilinearity in one slot
    for (int round = 0; round < 10; ++round) {
        const Rational alpha(3, 2);
        AlgebraElement x = random_element(s3.A.dim());
        AlgebraElement y = random_element(s3.A.dim());
        AlgebraElement w = random_element(s3.A.dim());
        const SurfaceSpec rp2 = make_surface(0, 1, 0);
        ok = ok && closed(s3, rp2, {add(scaled(x, alpha), y), w}) ==
                       alpha * closed(s3, rp2, {x, w}) + closed(s3, rp2, {y, w});
        AlgebraElement p = random_element(s3.B.dim());
        AlgebraElement q = random_element(s3.B.dim());
        AlgebraElement r = random_element(s3.B.dim());
        ok = ok && disk(s3, {add(scaled(p, alpha), q), r}) ==
                       alpha * disk(s3, {p, r}) + disk(s3, {q, r});
    }

    // cyclic symmetry of the three-linear form
    for (const auto& g : {symmetric_group(3), dihedral_group(4), cyclic_group(4)}) {
        const GroupAction act = natural_action(g);
        const OrbitBasis basis = orbit_basis(act);
        const std::vector<Rational> form = orbit_trilinear_form(act, basis);
        const int n = basis.size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    ok = ok && form[(i * n + j) * n + k] == form[(j * n + k) * n + i];
    }

    // orbit-stabilizer identity on random tuple orbits
    const std::vector<GroupPtr> groups{symmetric_group(3), symmetric_group(4),
                                       dihedral_group(4), quaternion_group()};
    for (int round = 0; round < 30; ++round) {
        const GroupPtr& g = groups[static_cast<std::size_t>(std::rand()) % groups.size()];
        const GroupAction act =
            (std::rand() % 2 == 0) ? natural_action(g) : regular_action(g);
        const int arity = 1 + std::rand() % 2;
        const auto orbits = orbits_on_tuples(act, arity);
        const auto& orbit = orbits[static_cast<std::size_t>(std::rand()) % orbits.size()];
        ok = ok && orbit.size() * orbit.stabilizer_order == g->order;
    }

    return ok;
}

}  // namespace

int main() {
    double sweep_seconds = 0.0;
    criterion(1,
              "regular algebras verify for cyclic(1..12), S3, S4, D4, Q8, Q8xZ3 within 60 s",
              [&] { return regular_sweep(&sweep_seconds); });
    criterion(2, "empty torus correlator counts conjugacy classes", torus_counts);
    criterion(3, "frobenius-schur traces match the decomposition predictions",
              frobenius_schur);
    criterion(4, "division models verify with U = (2-d)/mu", division_sweep);
    criterion(5, "orbit algebras agree with the matrix centralizer oracle", orbit_oracle);
    criterion(6, "cardy condition holds for every oracle action algebra", action_cardy);
    criterion(7, "disk, annulus, projective-plane, and klein correlators", correlator_sanity);
    criterion(8, "cut identities C1-C6 on regular Z/2 and S3", cut_identities);
    criterion(9, "randomized property suites run with zero failures", property_suites);

    return g_failures == 0 ? 0 : 1;
}
