#include "cfalg/frobenius.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cfalg/errors.hpp"

namespace cfalg {

bool AlgebraElement::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

std::string AlgebraElement::str(const std::vector<std::string>& labels) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        const Rational& c = coeffs[i];
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                a = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) a = -c;
        }
        // The label "1" stands for the algebra unit; print its coefficient bare.
        if (labels[i] == "1") {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << labels[i];
        }
        first = false;
    }
    return first ? "0" : os.str();
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.size() != y.size()) throw BuildError("element sum dimension mismatch");
    AlgebraElement out = x;
    for (int i = 0; i < y.size(); ++i) out[i] += y[i];
    return out;
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.size() != y.size()) throw BuildError("element difference dimension mismatch");
    AlgebraElement out = x;
    for (int i = 0; i < y.size(); ++i) out[i] -= y[i];
    return out;
}

AlgebraElement scaled(const AlgebraElement& x, const Rational& c) {
    AlgebraElement out = x;
    for (auto& v : out.coeffs) v *= c;
    return out;
}

namespace {

void canonicalize_row(FiniteAlgebra::SparseRow& row, int dim) {
    for (const auto& [k, c] : row) {
        (void)c;
        if (k < 0 || k >= dim) throw BuildError("structure tensor index out of range");
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    FiniteAlgebra::SparseRow merged;
    for (auto& [k, c] : row) {
        if (!merged.empty() && merged.back().first == k)
            merged.back().second += c;
        else
            merged.emplace_back(k, c);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.second.is_zero(); }),
                 merged.end());
    row = std::move(merged);
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> basis_labels,
                             std::vector<SparseRow> structure, AlgebraElement unit)
    : labels_(std::move(basis_labels)), structure_(std::move(structure)), unit_(std::move(unit)) {
    const int d = dim();
    if (d == 0) throw BuildError("algebra needs at least one basis element");
    if (static_cast<int>(structure_.size()) != d * d)
        throw BuildError("structure tensor size mismatch");
    if (unit_.size() != d) throw BuildError("unit dimension mismatch");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (static_cast<int>(distinct.size()) != d) throw BuildError("basis labels must be distinct");
    for (auto& row : structure_) canonicalize_row(row, d);
}

FiniteAlgebra FiniteAlgebra::from_products(
    std::vector<std::string> basis_labels,
    const std::function<AlgebraElement(int, int)>& product_of_basis, AlgebraElement unit) {
    const int d = static_cast<int>(basis_labels.size());
    std::vector<SparseRow> structure(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            AlgebraElement p = product_of_basis(i, j);
            if (p.size() != d) throw BuildError("basis product dimension mismatch");
            SparseRow& row = structure[static_cast<std::size_t>(i) * d + j];
            for (int k = 0; k < d; ++k)
                if (!p[k].is_zero()) row.emplace_back(k, p[k]);
        }
    return FiniteAlgebra(std::move(basis_labels), std::move(structure), std::move(unit));
}

AlgebraElement FiniteAlgebra::basis_element(int i) const {
    if (i < 0 || i >= dim()) throw BuildError("basis index out of range");
    AlgebraElement e = AlgebraElement::zero(dim());
    e[i] = 1;
    return e;
}

AlgebraElement FiniteAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw BuildError("element product dimension mismatch");
    AlgebraElement out = AlgebraElement::zero(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (const auto& [k, c] : basis_product(i, j)) out[k] += f * c;
        }
    }
    return out;
}

AlgebraElement FiniteAlgebra::power(const AlgebraElement& x, int e) const {
    if (e < 0) throw BuildError("negative power");
    AlgebraElement out = unit_;
    for (int i = 0; i < e; ++i) out = multiply(out, x);
    return out;
}

AlgebraElement FiniteAlgebra::product(const std::vector<AlgebraElement>& xs) const {
    AlgebraElement out = unit_;
    for (const auto& x : xs) out = multiply(out, x);
    return out;
}

Matrix FiniteAlgebra::left_multiplication(const AlgebraElement& x) const {
    if (x.size() != dim()) throw BuildError("element dimension mismatch");
    Matrix m(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j)
            for (const auto& [k, c] : basis_product(i, j)) m.at(k, j) += x[i] * c;
    }
    return m;
}

namespace {

/// Scratch accumulator for sparse row combinations, reset between uses by
/// replaying the touched indices.
struct Accumulator {
    std::vector<Rational> value;
    std::vector<int> touched;

    explicit Accumulator(int dim) : value(dim) {}

    void clear() {
        for (int k : touched) value[k] = 0;
        touched.clear();
    }
    void add(const Rational& f, const FiniteAlgebra::SparseRow& row) {
        for (const auto& [k, c] : row) {
            if (value[k].is_zero()) touched.push_back(k);
            value[k] += f * c;
        }
    }
    bool equals(const Accumulator& other) const {
        for (int k : touched)
            if (value[k] != other.value[k]) return false;
        for (int k : other.touched)
            if (value[k] != other.value[k]) return false;
        return true;
    }
};

}  // namespace

std::optional<std::tuple<int, int, int>> FiniteAlgebra::associativity_witness() const {
    const int d = dim();
    Accumulator lhs(d), rhs(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                lhs.clear();
                rhs.clear();
                for (const auto& [s, c] : basis_product(i, j)) lhs.add(c, basis_product(s, k));
                for (const auto& [t, c] : basis_product(j, k)) rhs.add(c, basis_product(i, t));
                if (!lhs.equals(rhs)) return std::make_tuple(i, j, k);
            }
    return std::nullopt;
}

std::optional<std::pair<int, int>> FiniteAlgebra::commutativity_witness() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            if (basis_product(i, j) != basis_product(j, i)) return std::make_pair(i, j);
    return std::nullopt;
}

bool FiniteAlgebra::is_associative() const { return !associativity_witness().has_value(); }
bool FiniteAlgebra::is_commutative() const { return !commutativity_witness().has_value(); }

Rational FrobeniusPair::counit_of(const AlgebraElement& x) const {
    if (x.size() != dim()) throw BuildError("counit dimension mismatch");
    Rational out;
    for (int i = 0; i < dim(); ++i)
        if (!x[i].is_zero()) out += x[i] * counit[i];
    return out;
}

Rational FrobeniusPair::bilinear(const AlgebraElement& x, const AlgebraElement& y) const {
    return counit_of(algebra.multiply(x, y));
}

FrobeniusPair make_frobenius_pair(FiniteAlgebra algebra, std::vector<Rational> counit,
                                  bool commutative) {
    const int d = algebra.dim();
    if (static_cast<int>(counit.size()) != d) throw BuildError("counit dimension mismatch");
    Matrix gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rational v;
            for (const auto& [k, c] : algebra.basis_product(i, j))
                if (!counit[k].is_zero()) v += c * counit[k];
            gram.at(i, j) = std::move(v);
        }
    // The inverse is attempted here but its absence is not an error: the
    // verifier reports degeneracy, and only the operations that need the
    // inverse raise.
    GramData form{std::move(gram), std::nullopt};
    try {
        form.inverse = invert_matrix(form.gram);
    } catch (const SingularMatrixError&) {
    }
    return FrobeniusPair{std::move(algebra), std::move(counit), commutative, std::move(form)};
}

AlgebraElement EquippedCF::apply_phi(const AlgebraElement& a) const {
    if (phi.rows() != B.dim() || phi.cols() != A.dim() || a.size() != A.dim())
        throw BuildError("phi dimension mismatch");
    return AlgebraElement{phi.apply(a.coeffs)};
}

AlgebraElement EquippedCF::star_a(const AlgebraElement& a) const {
    const Equipment& eq = equip();
    if (eq.star_a.rows() != A.dim() || a.size() != A.dim())
        throw BuildError("star dimension mismatch");
    return AlgebraElement{eq.star_a.apply(a.coeffs)};
}

AlgebraElement EquippedCF::star_b(const AlgebraElement& b) const {
    const Equipment& eq = equip();
    if (eq.star_b.rows() != B.dim() || b.size() != B.dim())
        throw BuildError("star dimension mismatch");
    return AlgebraElement{eq.star_b.apply(b.coeffs)};
}

const Equipment& EquippedCF::equip() const {
    if (!equipment) throw BuildError("the theory carries no equipment");
    return *equipment;
}

AlgebraElement casimir(const FrobeniusPair& p) {
    const Matrix& f = p.form.inverse_or_throw("casimir needs a non-degenerate form");
    const int d = p.dim();
    AlgebraElement out = AlgebraElement::zero(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Rational& fij = f.at(i, j);
            if (fij.is_zero()) continue;
            for (const auto& [k, c] : p.algebra.basis_product(i, j)) out[k] += fij * c;
        }
    return out;
}

AlgebraElement twisted_casimir(const FrobeniusPair& p, const Matrix& star) {
    const Matrix& f = p.form.inverse_or_throw("twisted casimir needs a non-degenerate form");
    const int d = p.dim();
    if (star.rows() != d || star.cols() != d) throw BuildError("star dimension mismatch");
    if (!(star * star).is_identity()) throw BuildError("star is not an involution");
    AlgebraElement out = AlgebraElement::zero(d);
    for (int j = 0; j < d; ++j) {
        // star of basis element j
        for (int s = 0; s < d; ++s) {
            const Rational& sj = star.at(s, j);
            if (sj.is_zero()) continue;
            for (int i = 0; i < d; ++i) {
                const Rational& fij = f.at(i, j);
                if (fij.is_zero()) continue;
                Rational w = fij * sj;
                for (const auto& [k, c] : p.algebra.basis_product(i, s)) out[k] += w * c;
            }
        }
    }
    return out;
}

AlgebraElement phi_dual(const EquippedCF& cf, const AlgebraElement& b) {
    if (b.size() != cf.B.dim()) throw BuildError("phi_dual dimension mismatch");
    std::vector<Rational> w = cf.B.form.gram.apply(b.coeffs);
    std::vector<Rational> v = cf.phi.transposed().apply(w);
    const Matrix& ga_inv = cf.A.form.inverse_or_throw("phi_dual needs a non-degenerate form on A");
    return AlgebraElement{ga_inv.apply(v)};
}

Rational w_trace(const EquippedCF& cf, const AlgebraElement& x1, const AlgebraElement& x2) {
    const FiniteAlgebra& alg = cf.B.algebra;
    Rational tr;
    for (int k = 0; k < alg.dim(); ++k) {
        AlgebraElement mid = alg.multiply(x1, alg.basis_element(k));
        tr += alg.multiply(mid, x2)[k];
    }
    return tr;
}

AlgebraElement handle_twist(const FrobeniusPair& b, const AlgebraElement& x) {
    const Matrix& f = b.form.inverse_or_throw("handle twist needs a non-degenerate form");
    const int d = b.dim();
    if (x.size() != d) throw BuildError("handle twist dimension mismatch");
    AlgebraElement out = AlgebraElement::zero(d);
    for (int i = 0; i < d; ++i) {
        AlgebraElement left = b.algebra.multiply(b.algebra.basis_element(i), x);
        for (int j = 0; j < d; ++j) {
            const Rational& fij = f.at(i, j);
            if (fij.is_zero()) continue;
            AlgebraElement term = b.algebra.multiply(left, b.algebra.basis_element(j));
            for (int k = 0; k < d; ++k)
                if (!term[k].is_zero()) out[k] += fij * term[k];
        }
    }
    return out;
}

void Report::add(std::string name, bool pass, std::string witness) {
    checks.push_back(CheckResult{std::move(name), pass, std::move(witness)});
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::sort_by_name() {
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

Report verify_frobenius_pair(const FrobeniusPair& p) {
    Report r;
    const FiniteAlgebra& alg = p.algebra;
    const auto& labels = alg.basis_labels();
    const int d = alg.dim();

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i) {
            AlgebraElement ei = alg.basis_element(i);
            if (alg.multiply(alg.unit(), ei) != ei) {
                ok = false;
                w = "1*x != x at x=" + labels[i];
            } else if (alg.multiply(ei, alg.unit()) != ei) {
                ok = false;
                w = "x*1 != x at x=" + labels[i];
            }
        }
        r.add("unit-laws", ok, w);
    }

    {
        auto witness = alg.associativity_witness();
        std::string w;
        if (witness) {
            auto [i, j, k] = *witness;
            w = "(x*y)*z != x*(y*z) at x=" + labels[i] + ", y=" + labels[j] + ", z=" + labels[k];
        }
        r.add("associativity", !witness, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i)
            for (int j = i + 1; j < d; ++j)
                if (p.form.gram.at(i, j) != p.form.gram.at(j, i)) {
                    ok = false;
                    w = "form(x,y)=" + p.form.gram.at(i, j).str() +
                        ", form(y,x)=" + p.form.gram.at(j, i).str() + " at x=" + labels[i] +
                        ", y=" + labels[j];
                    break;
                }
        r.add("gram-symmetry", ok, w);
    }

    r.add("non-degeneracy", p.nondegenerate(),
          p.nondegenerate() ? "" : "the gram matrix of the induced form is singular");

    if (p.commutative) {
        auto witness = alg.commutativity_witness();
        std::string w;
        if (witness)
            w = "x*y != y*x at x=" + labels[witness->first] + ", y=" + labels[witness->second];
        r.add("commutativity", !witness, w);
    }

    r.sort_by_name();
    return r;
}

Report verify_cardy(const EquippedCF& cf) {
    Report r;
    const FiniteAlgebra& a = cf.A.algebra;
    const FiniteAlgebra& b = cf.B.algebra;
    if (cf.phi.rows() != b.dim() || cf.phi.cols() != a.dim())
        throw BuildError("phi dimension mismatch");

    {
        auto witness = a.commutativity_witness();
        std::string w;
        if (witness)
            w = "x*y != y*x at x=" + a.basis_labels()[witness->first] +
                ", y=" + a.basis_labels()[witness->second];
        r.add("a-commutative", !witness, w);
    }

    std::vector<AlgebraElement> phi_basis;
    phi_basis.reserve(a.dim());
    for (int i = 0; i < a.dim(); ++i) phi_basis.push_back(cf.apply_phi(a.basis_element(i)));

    r.add("phi-unit", cf.apply_phi(a.unit()) == b.unit(),
          cf.apply_phi(a.unit()) == b.unit()
              ? ""
              : "phi(1) = " + cf.apply_phi(a.unit()).str(b.basis_labels()));

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < a.dim() && ok; ++i)
            for (int j = 0; j < a.dim(); ++j) {
                AlgebraElement lhs = cf.apply_phi(a.multiply(a.basis_element(i), a.basis_element(j)));
                AlgebraElement rhs = b.multiply(phi_basis[i], phi_basis[j]);
                if (lhs != rhs) {
                    ok = false;
                    w = "phi(x*y) != phi(x)*phi(y) at x=" + a.basis_labels()[i] +
                        ", y=" + a.basis_labels()[j];
                    break;
                }
            }
        r.add("phi-homomorphism", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < a.dim() && ok; ++i)
            for (int k = 0; k < b.dim(); ++k) {
                AlgebraElement ek = b.basis_element(k);
                if (b.multiply(phi_basis[i], ek) != b.multiply(ek, phi_basis[i])) {
                    ok = false;
                    w = "phi(x)*y != y*phi(x) at x=" + a.basis_labels()[i] +
                        ", y=" + b.basis_labels()[k];
                    break;
                }
            }
        r.add("phi-central", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        std::vector<AlgebraElement> duals;
        duals.reserve(b.dim());
        for (int i = 0; i < b.dim(); ++i) duals.push_back(phi_dual(cf, b.basis_element(i)));
        for (int i = 0; i < b.dim() && ok; ++i)
            for (int j = 0; j < b.dim(); ++j) {
                Rational lhs = cf.A.bilinear(duals[i], duals[j]);
                Rational rhs = w_trace(cf, b.basis_element(i), b.basis_element(j));
                if (lhs != rhs) {
                    ok = false;
                    w = "(phi*(x),phi*(y))_A=" + lhs.str() + ", trace=" + rhs.str() +
                        " at x=" + b.basis_labels()[i] + ", y=" + b.basis_labels()[j];
                    break;
                }
            }
        r.add("cardy-identity", ok, w);
    }

    r.sort_by_name();
    return r;
}

Report verify_equipment(const EquippedCF& cf) {
    Report r;
    const Equipment& eq = cf.equip();
    const FiniteAlgebra& a = cf.A.algebra;
    const FiniteAlgebra& b = cf.B.algebra;
    if (eq.star_a.rows() != a.dim() || eq.star_a.cols() != a.dim() ||
        eq.star_b.rows() != b.dim() || eq.star_b.cols() != b.dim() || eq.u.size() != a.dim())
        throw BuildError("equipment dimension mismatch");

    const bool star_a_involutive = (eq.star_a * eq.star_a).is_identity();
    const bool star_b_involutive = (eq.star_b * eq.star_b).is_identity();
    r.add("star-a-involution", star_a_involutive, star_a_involutive ? "" : "star_a^2 != id");
    r.add("star-b-involution", star_b_involutive, star_b_involutive ? "" : "star_b^2 != id");

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < a.dim() && ok; ++i)
            for (int j = 0; j < a.dim(); ++j) {
                AlgebraElement lhs = cf.star_a(a.multiply(a.basis_element(i), a.basis_element(j)));
                AlgebraElement rhs =
                    a.multiply(cf.star_a(a.basis_element(i)), cf.star_a(a.basis_element(j)));
                if (lhs != rhs) {
                    ok = false;
                    w = "star(x*y) != star(x)*star(y) at x=" + a.basis_labels()[i] +
                        ", y=" + a.basis_labels()[j];
                    break;
                }
            }
        r.add("star-a-automorphism", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < b.dim() && ok; ++i)
            for (int j = 0; j < b.dim(); ++j) {
                AlgebraElement lhs = cf.star_b(b.multiply(b.basis_element(i), b.basis_element(j)));
                AlgebraElement rhs =
                    b.multiply(cf.star_b(b.basis_element(j)), cf.star_b(b.basis_element(i)));
                if (lhs != rhs) {
                    ok = false;
                    w = "star(x*y) != star(y)*star(x) at x=" + b.basis_labels()[i] +
                        ", y=" + b.basis_labels()[j];
                    break;
                }
            }
        r.add("star-b-anti-automorphism", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < a.dim(); ++i)
            if (cf.A.counit_of(cf.star_a(a.basis_element(i))) != cf.A.counit[i]) {
                ok = false;
                w = "counit(star(x)) != counit(x) at x=" + a.basis_labels()[i];
                break;
            }
        r.add("counit-star-a", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < b.dim(); ++i)
            if (cf.B.counit_of(cf.star_b(b.basis_element(i))) != cf.B.counit[i]) {
                ok = false;
                w = "counit(star(x)) != counit(x) at x=" + b.basis_labels()[i];
                break;
            }
        r.add("counit-star-b", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < a.dim(); ++i) {
            AlgebraElement lhs = cf.apply_phi(cf.star_a(a.basis_element(i)));
            AlgebraElement rhs = cf.star_b(cf.apply_phi(a.basis_element(i)));
            if (lhs != rhs) {
                ok = false;
                w = "phi(star(x)) != star(phi(x)) at x=" + a.basis_labels()[i];
                break;
            }
        }
        r.add("phi-star-compat", ok, w);
    }

    if (star_a_involutive) {
        AlgebraElement lhs = a.multiply(eq.u, eq.u);
        AlgebraElement rhs = twisted_casimir(cf.A, eq.star_a);
        r.add("u-square", lhs == rhs,
              lhs == rhs ? ""
                         : "u^2 = " + lhs.str(a.basis_labels()) +
                               ", twisted casimir = " + rhs.str(a.basis_labels()));
    } else {
        r.add("u-square", false, "star_a is not an involution, twisted casimir undefined");
    }

    if (star_b_involutive) {
        AlgebraElement lhs = cf.apply_phi(eq.u);
        AlgebraElement rhs = twisted_casimir(cf.B, eq.star_b);
        r.add("phi-u", lhs == rhs,
              lhs == rhs ? ""
                         : "phi(u) = " + lhs.str(b.basis_labels()) +
                               ", twisted casimir = " + rhs.str(b.basis_labels()));
    } else {
        r.add("phi-u", false, "star_b is not an involution, twisted casimir undefined");
    }

    r.sort_by_name();
    return r;
}

}  // namespace cfalg
