#include "cfalg/surfaces.hpp"

#include "cfalg/errors.hpp"

namespace cfalg {

SurfaceSpec make_surface(int a, int c, int s) {
    if (a < 0) throw BuildError("negative handle count");
    if (s < 0) throw BuildError("negative contour count");
    if (c < 0 || c > 2)
        throw BuildError("invalid crosscap count " + std::to_string(c) +
                         " (normalize to 0, 1, or 2 first)");
    return SurfaceSpec{a, c, s};
}

CorrelatorInput normalize_orientations(const EquippedCF& cf, CorrelatorInput input) {
    bool any = false;
    for (const auto& ins : input.interior) any = any || ins.reversed;
    for (const auto& contour : input.boundary)
        for (const auto& ins : contour) any = any || ins.reversed;
    if (!any) return input;
    if (!cf.equipment)
        throw BuildError("orientation flags require equipment");
    for (auto& ins : input.interior)
        if (ins.reversed) {
            ins.element = cf.star_a(ins.element);
            ins.reversed = false;
        }
    for (auto& contour : input.boundary)
        for (auto& ins : contour)
            if (ins.reversed) {
                ins.element = cf.star_b(ins.element);
                ins.reversed = false;
            }
    return input;
}

Rational correlator(const EquippedCF& cf, const SurfaceSpec& surface,
                    const CorrelatorInput& raw_input) {
    if (static_cast<int>(raw_input.boundary.size()) != surface.contours)
        throw BuildError("contour count mismatch: surface has " +
                         std::to_string(surface.contours) + ", input has " +
                         std::to_string(raw_input.boundary.size()));
    CorrelatorInput input = normalize_orientations(cf, raw_input);

    const FiniteAlgebra& a = cf.A.algebra;
    AlgebraElement core = a.unit();
    for (const auto& ins : input.interior) {
        if (ins.element.size() != a.dim())
            throw BuildError("interior insertion is not an element of A");
        core = a.multiply(core, ins.element);
    }
    if (surface.orientable()) {
        if (surface.handles > 0) core = a.multiply(core, a.power(casimir(cf.A), surface.handles));
    } else {
        if (!cf.equipment) throw BuildError("non-orientable surfaces require equipment");
        core = a.multiply(core, a.power(cf.equip().u, surface.twice_genus()));
    }

    if (surface.contours == 0) return cf.A.counit_of(core);

    const FiniteAlgebra& b = cf.B.algebra;
    AlgebraElement total = cf.apply_phi(core);
    for (int t = 0; t < surface.contours; ++t) {
        AlgebraElement contour_product = b.unit();
        for (const auto& ins : input.boundary[t]) {
            if (ins.element.size() != b.dim())
                throw BuildError("boundary insertion is not an element of B");
            contour_product = b.multiply(contour_product, ins.element);
        }
        if (t > 0) contour_product = handle_twist(cf.B, contour_product);
        total = b.multiply(total, contour_product);
    }
    return cf.B.counit_of(total);
}

namespace {

Rational closed_correlator(const EquippedCF& cf, const SurfaceSpec& s,
                           const std::vector<AlgebraElement>& interior) {
    CorrelatorInput input;
    for (const auto& e : interior) input.interior.push_back(Insertion{e, false});
    return correlator(cf, s, input);
}

Rational disk_correlator(const EquippedCF& cf, const std::vector<AlgebraElement>& boundary) {
    CorrelatorInput input;
    input.boundary.emplace_back();
    for (const auto& e : boundary) input.boundary[0].push_back(Insertion{e, false});
    return correlator(cf, make_surface(0, 0, 1), input);
}

void require_arity(const std::string& case_id, std::size_t got, std::size_t want,
                   const char* side) {
    if (got != want)
        throw BuildError(case_id + " requires exactly " + std::to_string(want) + " " + side +
                         " elements, got " + std::to_string(got));
}

std::string mismatch_witness(const Rational& left, const Rational& right) {
    return "left=" + left.str() + ", right=" + right.str();
}

}  // namespace

Report check_cut_identity(const EquippedCF& cf, const std::string& case_id, const CutData& data) {
    Report r;
    const SurfaceSpec sphere = make_surface(0, 0, 0);

    if (case_id == "C1") {
        require_arity(case_id, data.interior.size(), 4, "interior");
        const FiniteAlgebra& a = cf.A.algebra;
        const Matrix& f = cf.A.form.inverse_or_throw("C1 needs a non-degenerate form on A");
        const auto& x = data.interior;
        Rational direct = closed_correlator(cf, sphere, {x[0], x[1], x[2], x[3]});
        auto channel = [&](const AlgebraElement& p1, const AlgebraElement& p2,
                           const AlgebraElement& p3, const AlgebraElement& p4) {
            Rational sum;
            for (int i = 0; i < a.dim(); ++i)
                for (int j = 0; j < a.dim(); ++j) {
                    if (f.at(i, j).is_zero()) continue;
                    sum += closed_correlator(cf, sphere, {p1, p2, a.basis_element(i)}) *
                           f.at(i, j) *
                           closed_correlator(cf, sphere, {a.basis_element(j), p3, p4});
                }
            return sum;
        };
        Rational s12 = channel(x[0], x[1], x[2], x[3]);
        Rational s13 = channel(x[0], x[2], x[1], x[3]);
        r.add("c1-channel-12-34", direct == s12,
              direct == s12 ? "" : mismatch_witness(direct, s12));
        r.add("c1-channel-13-24", direct == s13,
              direct == s13 ? "" : mismatch_witness(direct, s13));
    } else if (case_id == "C2") {
        require_arity(case_id, data.interior.size(), 1, "interior");
        const FiniteAlgebra& a = cf.A.algebra;
        const Matrix& f = cf.A.form.inverse_or_throw("C2 needs a non-degenerate form on A");
        Rational left = closed_correlator(cf, make_surface(1, 0, 0), {data.interior[0]});
        Rational right;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                if (f.at(i, j).is_zero()) continue;
                right += closed_correlator(
                             cf, sphere,
                             {data.interior[0], a.basis_element(i), a.basis_element(j)}) *
                         f.at(i, j);
            }
        r.add("c2", left == right, left == right ? "" : mismatch_witness(left, right));
    } else if (case_id == "C3") {
        require_arity(case_id, data.boundary.size(), 4, "boundary");
        const FiniteAlgebra& b = cf.B.algebra;
        const Matrix& f = cf.B.form.inverse_or_throw("C3 needs a non-degenerate form on B");
        const auto& x = data.boundary;
        Rational direct = disk_correlator(cf, {x[0], x[1], x[2], x[3]});
        auto channel = [&](const AlgebraElement& p1, const AlgebraElement& p2,
                           const AlgebraElement& p3, const AlgebraElement& p4) {
            Rational sum;
            for (int i = 0; i < b.dim(); ++i)
                for (int j = 0; j < b.dim(); ++j) {
                    if (f.at(i, j).is_zero()) continue;
                    sum += disk_correlator(cf, {p1, p2, b.basis_element(i)}) * f.at(i, j) *
                           disk_correlator(cf, {b.basis_element(j), p3, p4});
                }
            return sum;
        };
        Rational s12 = channel(x[0], x[1], x[2], x[3]);
        Rational s23 = channel(x[1], x[2], x[3], x[0]);
        r.add("c3-channel-12-34", direct == s12,
              direct == s12 ? "" : mismatch_witness(direct, s12));
        r.add("c3-channel-23-41", direct == s23,
              direct == s23 ? "" : mismatch_witness(direct, s23));
    } else if (case_id == "C4") {
        require_arity(case_id, data.boundary.size(), 2, "boundary");
        const FiniteAlgebra& b = cf.B.algebra;
        const Matrix& f = cf.B.form.inverse_or_throw("C4 needs a non-degenerate form on B");
        CorrelatorInput annulus_input;
        annulus_input.boundary.resize(2);
        annulus_input.boundary[0].push_back(Insertion{data.boundary[0], false});
        annulus_input.boundary[1].push_back(Insertion{data.boundary[1], false});
        Rational left = correlator(cf, make_surface(0, 0, 2), annulus_input);
        Rational right;
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j) {
                if (f.at(i, j).is_zero()) continue;
                right += f.at(i, j) * disk_correlator(cf, {data.boundary[0], b.basis_element(i),
                                                           data.boundary[1], b.basis_element(j)});
            }
        r.add("c4", left == right, left == right ? "" : mismatch_witness(left, right));
    } else if (case_id == "C5") {
        const FiniteAlgebra& a = cf.A.algebra;
        const Matrix& f = cf.A.form.inverse_or_throw("C5 needs a non-degenerate form on A");
        const SurfaceSpec rp2 = make_surface(0, 1, 0);
        Rational left = closed_correlator(cf, make_surface(0, 2, 0), {});
        Rational right;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                if (f.at(i, j).is_zero()) continue;
                right += closed_correlator(cf, rp2, {a.basis_element(i)}) * f.at(i, j) *
                         closed_correlator(cf, rp2, {a.basis_element(j)});
            }
        r.add("c5", left == right, left == right ? "" : mismatch_witness(left, right));
    } else if (case_id == "C6") {
        SurfaceSpec base = data.base.value_or(make_surface(0, 0, 0));
        if (base.crosscaps > 1)
            throw BuildError("C6 base surface must have at most one crosscap");
        if (base.contours != 0) throw BuildError("C6 base surface must be closed");
        SurfaceSpec lifted = make_surface(base.handles, base.crosscaps + 1, 0);
        Rational left = closed_correlator(cf, lifted, data.interior);
        std::vector<AlgebraElement> with_u = data.interior;
        with_u.push_back(cf.equip().u);
        Rational right = closed_correlator(cf, base, with_u);
        r.add("c6", left == right, left == right ? "" : mismatch_witness(left, right));
    } else {
        throw ParseError("unknown cut identity case '" + case_id + "'");
    }

    r.sort_by_name();
    return r;
}

}  // namespace cfalg
