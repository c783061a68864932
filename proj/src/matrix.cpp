#include "cfalg/matrix.hpp"

#include <sstream>
#include <utility>

#include "cfalg/errors.hpp"

namespace cfalg {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw BuildError("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rational());
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw BuildError("matrix-vector dimension mismatch");
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Rational Matrix::trace() const {
    if (rows_ != cols_) throw BuildError("trace of a non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw BuildError("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw BuildError("matrix sum dimension mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// Fraction-free Gauss-Jordan elimination (Bareiss one-step updates) on the
// integer matrix D*M augmented with the identity.  Every division below is
// exact by the Sylvester determinant identity; the run ends with p*I on the
// left and p*(D*M)^-1 on the right, p being the final pivot.
Matrix invert_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw BuildError("inverse of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return m;

    Integer scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(i, j).den().get_mpz_t());

    const int w = 2 * n;
    std::vector<Integer> a(static_cast<std::size_t>(n) * w);
    auto entry = [&](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i) * w + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational& r = m.at(i, j);
            entry(i, j) = r.num() * (scale / r.den());
        }
        entry(i, n + i) = 1;
    }

    Integer prev = 1;
    Integer pivot = 1;
    Integer t;
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int r = k; r < n; ++r)
            if (entry(r, k) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) throw SingularMatrixError();
        if (pr != k)
            for (int j = 0; j < w; ++j) std::swap(entry(pr, j), entry(k, j));
        pivot = entry(k, k);
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Integer f = entry(i, k);
            for (int j = 0; j < w; ++j) {
                t = pivot * entry(i, j) - f * entry(k, j);
                if (mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()) == 0)
                    throw SingularMatrixError("fraction-free elimination divisibility failure");
                mpz_divexact(entry(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pivot;
    }

    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = Rational(scale * entry(i, n + j), pivot);

    if (!(m * inv).is_identity()) throw SingularMatrixError("inverse failed verification");
    return inv;
}

const Matrix& GramData::inverse_or_throw(const std::string& context) const {
    if (!inverse) throw BuildError("degenerate bilinear form: " + context);
    return *inverse;
}

GramData make_gram_data(Matrix gram) {
    if (gram.rows() != gram.cols()) throw BuildError("gram matrix must be square");
    if (!gram.is_symmetric()) throw BuildError("gram matrix must be symmetric");
    GramData g{std::move(gram), std::nullopt};
    g.inverse = invert_matrix(g.gram);
    return g;
}

}  // namespace cfalg
