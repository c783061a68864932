#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfalg/rational.hpp"

namespace cfalg {

/// Dense matrix of exact rationals.  Small dimensions only; this backs
/// Gram matrices, structure maps and basis changes, not bulk numerics.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Matrix transposed() const;
    bool is_symmetric() const;
    bool is_identity() const;

    /// Matrix-vector product; the vector length must equal cols().
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    Rational trace() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact inverse of a square matrix via fraction-free elimination on the
/// integer matrix obtained by clearing denominators.  Raises
/// SingularMatrixError when no inverse exists.
Matrix invert_matrix(const Matrix& m);

/// A symmetric bilinear form together with its inverse.  The inverse is
/// optional so that callers prepared for degeneracy can hold a GramData
/// without one; consumers that need it call inverse_or_throw and get a
/// BuildError naming the context if the form is degenerate.
struct GramData {
    Matrix gram;
    std::optional<Matrix> inverse;

    bool nondegenerate() const { return inverse.has_value(); }
    const Matrix& inverse_or_throw(const std::string& context) const;
};

/// pre: gram is square and symmetric.  Raises SingularMatrixError when the
/// form is degenerate.
GramData make_gram_data(Matrix gram);

}  // namespace cfalg
