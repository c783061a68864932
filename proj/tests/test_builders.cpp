#include "doctest.h"

#include <string>
#include <vector>

#include "cfalg/builders.hpp"
#include "cfalg/errors.hpp"
#include "cfalg/frobenius.hpp"
#include "cfalg/group.hpp"

using namespace cfalg;

namespace {

int label_index(const std::vector<std::string>& labels, const std::string& want) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == want) return static_cast<int>(i);
    FAIL("missing label " << want);
    return -1;
}

void check_full_verification(const EquippedCF& cf) {
    CHECK(verify_frobenius_pair(cf.A).all_pass());
    CHECK(verify_frobenius_pair(cf.B).all_pass());
    CHECK(verify_cardy(cf).all_pass());
    CHECK(verify_equipment(cf).all_pass());
}

}  // namespace

TEST_CASE("group center data") {
    auto s3 = symmetric_group(3);
    CenterData cd = group_center(*s3);
    CHECK(cd.algebra.dim() == 3);
    CHECK(cd.algebra.is_commutative());
    CHECK(cd.star.is_identity());  // every class of S3 is self-inverse
    const int e1 = label_index(cd.algebra.basis_labels(), "[e]");
    const int ec = label_index(cd.algebra.basis_labels(), "[(0 1 2)]");
    CHECK(cd.u[e1] == Rational(4));
    CHECK(cd.u[ec] == Rational(1));

    auto z3 = cyclic_group(3);
    CenterData cd3 = group_center(*z3);
    CHECK_FALSE(cd3.star.is_identity());  // the two nontrivial classes swap
    CHECK(cd3.star.at(0, 0) == Rational(1));
    CHECK(cd3.star.at(1, 2) == Rational(1));
    CHECK(cd3.star.at(2, 1) == Rational(1));
}

TEST_CASE("regular algebra shapes and counits") {
    auto cf = regular_algebra(cyclic_group(2));
    CHECK(cf.A.dim() == 2);
    CHECK(cf.B.dim() == 2);
    CHECK(cf.B.counit[0] == Rational(1));
    CHECK(cf.B.counit[1] == Rational(0));
    CHECK(cf.A.counit[0] == Rational(1, 2));
    CHECK(cf.A.counit[1] == Rational(0));
    CHECK(cf.equip().u[0] == Rational(2));
    CHECK(cf.equip().u[1] == Rational(0));

    auto s3 = regular_algebra(symmetric_group(3));
    CHECK(s3.A.dim() == 3);
    CHECK(s3.B.dim() == 6);
    CHECK(s3.A.counit[0] == Rational(1, 6));
    // phi sends a class sum to the sum of its members
    const int et = label_index(s3.A.algebra.basis_labels(), "[(0 1)]");
    AlgebraElement image = s3.apply_phi(s3.A.algebra.basis_element(et));
    Rational total;
    for (int i = 0; i < s3.B.dim(); ++i) {
        CHECK((image[i] == Rational(0) || image[i] == Rational(1)));
        total += image[i];
    }
    CHECK(total == Rational(3));
}

TEST_CASE("regular algebra passes every axiom") {
    for (int n = 1; n <= 6; ++n) check_full_verification(regular_algebra(cyclic_group(n)));
    check_full_verification(regular_algebra(symmetric_group(3)));
    check_full_verification(regular_algebra(dihedral_group(4)));
    check_full_verification(regular_algebra(quaternion_group()));
}

TEST_CASE("division ring parsing") {
    CHECK(parse_division_ring("R") == DivisionRing::R);
    CHECK(parse_division_ring("C") == DivisionRing::C);
    CHECK(parse_division_ring("H") == DivisionRing::H);
    CHECK(division_dim(DivisionRing::R) == 1);
    CHECK(division_dim(DivisionRing::C) == 2);
    CHECK(division_dim(DivisionRing::H) == 4);
    CHECK_THROWS_AS(parse_division_ring("Q"), ParseError);
}

TEST_CASE("division model over the reals") {
    auto cf = division_model(DivisionRing::R, 1, Rational(1));
    CHECK(cf.B.dim() == 1);
    CHECK(cf.A.dim() == 1);
    CHECK(cf.B.counit[0] == Rational(1));
    CHECK(cf.equip().u[0] == Rational(1));
    check_full_verification(cf);

    auto m2 = division_model(DivisionRing::R, 2, Rational(3));
    CHECK(m2.B.dim() == 4);
    const int e00 = label_index(m2.B.algebra.basis_labels(), "E[0,0]");
    const int e01 = label_index(m2.B.algebra.basis_labels(), "E[0,1]");
    const int e10 = label_index(m2.B.algebra.basis_labels(), "E[1,0]");
    // matrix units compose: E[0,1] E[1,0] = E[0,0], E[1,0] E[0,1] = E[1,1]
    AlgebraElement prod = m2.B.algebra.multiply(m2.B.algebra.basis_element(e01),
                                                m2.B.algebra.basis_element(e10));
    CHECK(prod == m2.B.algebra.basis_element(e00));
    CHECK(m2.B.algebra.multiply(m2.B.algebra.basis_element(e01),
                                m2.B.algebra.basis_element(e01))
              .is_zero());
    CHECK(m2.B.counit[e00] == Rational(3));
    CHECK(m2.B.counit[e01] == Rational(0));
}

TEST_CASE("division model over the complexes has a vanishing twist") {
    auto cf = division_model(DivisionRing::C, 1, Rational(1));
    CHECK(cf.B.dim() == 2);
    CHECK(cf.A.dim() == 2);
    CHECK(cf.equip().u.is_zero());
    CHECK(twisted_casimir(cf.A, cf.equip().star_a).is_zero());
    check_full_verification(cf);
    // i * i = -1 in the scalar block
    const int i0 = label_index(cf.B.algebra.basis_labels(), "E[0,0]i");
    AlgebraElement sq = cf.B.algebra.multiply(cf.B.algebra.basis_element(i0),
                                              cf.B.algebra.basis_element(i0));
    CHECK(sq == scaled(cf.B.algebra.unit(), Rational(-1)));
}

TEST_CASE("division model over the quaternions") {
    auto cf = division_model(DivisionRing::H, 1, Rational(1));
    CHECK(cf.B.dim() == 4);
    CHECK(cf.A.dim() == 1);
    CHECK(cf.equip().u[0] == Rational(-2));
    AlgebraElement k_star = twisted_casimir(cf.A, cf.equip().star_a);
    CHECK(k_star[0] == Rational(4));
    check_full_verification(cf);

    const int i = label_index(cf.B.algebra.basis_labels(), "E[0,0]i");
    const int j = label_index(cf.B.algebra.basis_labels(), "E[0,0]j");
    const int k = label_index(cf.B.algebra.basis_labels(), "E[0,0]k");
    auto bi = cf.B.algebra.basis_element(i);
    auto bj = cf.B.algebra.basis_element(j);
    auto bk = cf.B.algebra.basis_element(k);
    CHECK(cf.B.algebra.multiply(bi, bj) == bk);
    CHECK(cf.B.algebra.multiply(bj, bi) == scaled(bk, Rational(-1)));
    CHECK(cf.B.algebra.multiply(bi, bi) == scaled(cf.B.algebra.unit(), Rational(-1)));
}

TEST_CASE("division model sweep") {
    const std::vector<Rational> weights{Rational(1), Rational(2), Rational(-1, 2)};
    for (DivisionRing ring : {DivisionRing::R, DivisionRing::C, DivisionRing::H}) {
        const int d = division_dim(ring);
        for (int n = 1; n <= 3; ++n) {
            for (const Rational& mu : weights) {
                auto cf = division_model(ring, n, mu);
                CHECK(cf.B.dim() == n * n * d);
                AlgebraElement expected =
                    scaled(cf.A.algebra.unit(), Rational(2 - d) / mu);
                CHECK(cf.equip().u == expected);
                check_full_verification(cf);
            }
        }
    }
}

TEST_CASE("division model input validation") {
    CHECK_THROWS_AS(division_model(DivisionRing::R, 0, Rational(1)), BuildError);
    CHECK_THROWS_AS(division_model(DivisionRing::R, 1, Rational(0)), BuildError);
    CHECK_THROWS_AS(division_model(DivisionRing::H, 3, Rational(1), 10), BuildError);
    CHECK_NOTHROW(division_model(DivisionRing::H, 3, Rational(1), 12));
}

TEST_CASE("orbit basis of the natural symmetric action") {
    OrbitBasis ob = orbit_basis(natural_action(symmetric_group(3)));
    REQUIRE(ob.size() == 2);
    CHECK(ob.labels[0] == "(0,0)");
    CHECK(ob.labels[1] == "(0,1)");
    CHECK(ob.orbits[0].size() == 3);
    CHECK(ob.orbits[1].size() == 6);
    CHECK(ob.orbits[0].stabilizer_order == 2);
    CHECK(ob.orbits[1].stabilizer_order == 1);
    CHECK(ob.star_perm == std::vector<int>{0, 1});
}

TEST_CASE("orbit basis star can move orbits") {
    OrbitBasis ob = orbit_basis(natural_action(cyclic_group(4)));
    REQUIRE(ob.size() == 4);
    CHECK(ob.labels == std::vector<std::string>{"(0,0)", "(0,1)", "(0,2)", "(0,3)"});
    // reversing (0,1) lands in the orbit of (0,3)
    CHECK(ob.star_perm == std::vector<int>{0, 3, 2, 1});
}

TEST_CASE("orbit basis honors the tuple cap") {
    CHECK_THROWS_AS(orbit_basis(regular_action(symmetric_group(4)), 100), BuildError);
}

TEST_CASE("trilinear form values and cyclic symmetry") {
    GroupAction act = natural_action(symmetric_group(3));
    OrbitBasis ob = orbit_basis(act);
    std::vector<Rational> t = orbit_trilinear_form(act, ob);
    REQUIRE(t.size() == 8);
    auto at = [&](int i, int j, int k) { return t[(i * 2 + j) * 2 + k]; };
    CHECK(at(0, 0, 0) == Rational(1, 2));
    CHECK(at(1, 1, 1) == Rational(1));
    CHECK(at(0, 1, 1) == Rational(1));
    CHECK(at(1, 1, 0) == Rational(1));
    CHECK(at(0, 0, 1) == Rational(0));

    for (const auto& g : {symmetric_group(3), dihedral_group(4), cyclic_group(4)}) {
        GroupAction a = natural_action(g);
        OrbitBasis basis = orbit_basis(a);
        std::vector<Rational> form = orbit_trilinear_form(a, basis);
        const int n = basis.size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    CHECK(form[(i * n + j) * n + k] == form[(j * n + k) * n + i]);
                }
    }
}

TEST_CASE("action algebra of the natural symmetric action") {
    auto cf = action_algebra(natural_action(symmetric_group(3)));
    CHECK(cf.A.dim() == 3);
    CHECK(cf.B.dim() == 2);

    AlgebraElement b0 = cf.B.algebra.basis_element(0);
    AlgebraElement b1 = cf.B.algebra.basis_element(1);
    CHECK(cf.B.algebra.unit() == b0);
    AlgebraElement sq = cf.B.algebra.multiply(b1, b1);
    CHECK(sq == add(scaled(b0, Rational(2)), b1));

    CHECK(cf.B.counit[0] == Rational(1, 2));
    CHECK(cf.B.counit[1] == Rational(0));
    CHECK(cf.B.bilinear(b1, b1) == Rational(1));

    const int et = label_index(cf.A.algebra.basis_labels(), "[(0 1)]");
    CHECK(cf.apply_phi(cf.A.algebra.basis_element(et)) == add(b0, b1));

    const int e1 = label_index(cf.A.algebra.basis_labels(), "[e]");
    const int ec = label_index(cf.A.algebra.basis_labels(), "[(0 1 2)]");
    CHECK(cf.equip().u[e1] == Rational(4));
    CHECK(cf.equip().u[ec] == Rational(1));

    check_full_verification(cf);
}

TEST_CASE("action algebra of the trivial action") {
    auto cf = action_algebra(natural_action(cyclic_group(1)));
    CHECK(cf.A.dim() == 1);
    CHECK(cf.B.dim() == 1);
    check_full_verification(cf);
}

TEST_CASE("action algebra with a central twist") {
    GroupAction act = natural_action(symmetric_group(3));
    CenterData cd = group_center(*act.group);
    const int e1 = label_index(cd.algebra.basis_labels(), "[e]");
    const int et = label_index(cd.algebra.basis_labels(), "[(0 1)]");
    const int ec = label_index(cd.algebra.basis_labels(), "[(0 1 2)]");

    SUBCASE("a scalar twist rescales u inversely") {
        AlgebraElement mu = scaled(cd.algebra.basis_element(e1), Rational(2));
        auto cf = action_algebra(act, mu);
        CHECK(cf.equip().u[e1] == Rational(2));
        CHECK(cf.equip().u[ec] == Rational(1, 2));
        check_full_verification(cf);
    }

    SUBCASE("a non-scalar central twist still verifies") {
        AlgebraElement mu = add(cd.algebra.basis_element(e1), cd.algebra.basis_element(et));
        check_full_verification(action_algebra(act, mu));

        AlgebraElement mixed = cd.algebra.basis_element(e1);
        mixed[et] = Rational(1);
        mixed[ec] = Rational(-1, 2);
        check_full_verification(action_algebra(act, mixed));
    }

    SUBCASE("rejects a twist of the wrong dimension") {
        CHECK_THROWS_AS(action_algebra(act, AlgebraElement::zero(2)), BuildError);
    }

    SUBCASE("rejects a twist that is not star-invariant") {
        GroupAction z3 = natural_action(cyclic_group(3));
        CenterData cd3 = group_center(*z3.group);
        CHECK_THROWS_WITH_AS(action_algebra(z3, cd3.algebra.basis_element(1)),
                             "mu is not star-invariant", BuildError);
    }

    SUBCASE("rejects a twist that kills the permutation representation") {
        CHECK_THROWS_WITH_AS(action_algebra(act, cd.algebra.basis_element(et)),
                             "mu is not invertible on the permutation representation",
                             BuildError);
    }
}

TEST_CASE("intertwiner model agrees with the orbit construction") {
    std::vector<GroupAction> actions;
    actions.push_back(natural_action(symmetric_group(3)));
    actions.push_back(natural_action(symmetric_group(4)));
    actions.push_back(natural_action(dihedral_group(4)));
    actions.push_back(natural_action(cyclic_group(4)));
    auto s3 = symmetric_group(3);
    actions.push_back(coset_action(s3, subgroup_closure(*s3, {1})));

    for (const GroupAction& act : actions) {
        FiniteAlgebra literal = intertwiner_model(act);
        auto cf = action_algebra(act);
        REQUIRE(literal.dim() == cf.B.dim());
        CHECK(literal.basis_labels() == cf.B.algebra.basis_labels());
        CHECK(literal.unit() == cf.B.algebra.unit());
        for (int i = 0; i < literal.dim(); ++i)
            for (int j = 0; j < literal.dim(); ++j) {
                CHECK(literal.multiply(literal.basis_element(i), literal.basis_element(j)) ==
                      cf.B.algebra.multiply(cf.B.algebra.basis_element(i),
                                            cf.B.algebra.basis_element(j)));
            }
    }
}

TEST_CASE("intertwiner model of a transitive cyclic action is commutative") {
    FiniteAlgebra circulant = intertwiner_model(natural_action(cyclic_group(4)));
    CHECK(circulant.dim() == 4);
    CHECK(circulant.is_commutative());
}

TEST_CASE("hecke algebras") {
    auto s3 = symmetric_group(3);

    SUBCASE("the full group gives the one-point theory") {
        std::vector<int> all(6);
        for (int i = 0; i < 6; ++i) all[i] = i;
        auto cf = hecke_algebra(s3, all);
        CHECK(cf.B.dim() == 1);
        check_full_verification(cf);
    }

    SUBCASE("a point stabilizer recovers the natural action") {
        auto cf = hecke_algebra(s3, subgroup_closure(*s3, {1}));
        auto natural = action_algebra(natural_action(s3));
        CHECK(cf.B.dim() == 2);
        CHECK(cf.B.algebra.basis_labels() == natural.B.algebra.basis_labels());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(cf.B.algebra.basis_product(i, j) ==
                      natural.B.algebra.basis_product(i, j));
        CHECK(cf.B.counit == natural.B.counit);
        check_full_verification(cf);
    }

    SUBCASE("a large point stabilizer in S4") {
        auto s4 = symmetric_group(4);
        // copy of S3 fixing the last point
        int a = -1, b = -1;
        for (int i = 0; i < s4->order; ++i) {
            if (s4->labels[i] == "(0 1)") a = i;
            if (s4->labels[i] == "(1 2)") b = i;
        }
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        std::vector<int> sub = subgroup_closure(*s4, {a, b});
        CHECK(sub.size() == 6);
        auto cf = hecke_algebra(s4, sub);
        CHECK(cf.B.dim() == 2);
        check_full_verification(cf);
    }
}

TEST_CASE("frobenius-schur traces") {
    CHECK(frobenius_schur_trace(natural_action(symmetric_group(3))) == Rational(12));
    CHECK(frobenius_schur_trace(regular_action(quaternion_group())) == Rational(16));
    CHECK(frobenius_schur_trace(regular_action(cyclic_group(4))) == Rational(8));

    // on the regular action the trace is |G| times the number of square
    // roots of the identity
    for (const auto& g : {symmetric_group(3), symmetric_group(4), dihedral_group(4),
                          quaternion_group(), cyclic_group(6)}) {
        int involutions = 0;
        for (int e = 0; e < g->order; ++e)
            if (g->mul(e, e) == 0) ++involutions;
        CHECK(frobenius_schur_trace(regular_action(g)) ==
              Rational(g->order) * Rational(involutions));
    }

    // and on any action it is the brute-force fixed-point count
    GroupAction act = natural_action(dihedral_group(5));
    long total = 0;
    for (int e = 0; e < act.group->order; ++e)
        total += act.fixed_points(act.group->mul(e, e));
    CHECK(frobenius_schur_trace(act) == Rational(total));
}
