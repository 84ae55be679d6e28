#pragma once

#include <optional>
#include <vector>

#include "wm/scalar.hpp"

namespace wm {

using Vec = std::vector<Scalar>;

namespace vec {
Vec zero(const FieldSpec& f, size_t n);
Vec unit(const FieldSpec& f, size_t n, size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
bool is_zero(const Vec& a);
std::string str(const Vec& a);
}  // namespace vec

/// Dense row-major matrix over one FieldSpec.  Immutable in spirit: the
/// mutating entry accessor exists for construction code only.
class Matrix {
 public:
  Matrix(const FieldSpec& f, size_t rows, size_t cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const FieldSpec& f, size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                          size_t cols);

  const FieldSpec& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // m * x, x a column vector
  Matrix transpose() const;
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;
  Matrix submatrix(size_t r0, size_t c0, size_t nrows, size_t ncols) const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string str() const;

 private:
  FieldSpec field_;
  size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<size_t> pivots;  // pivot column per nonzero row
  size_t rank;
};

/// Unique reduced row echelon form over the matrix's field.
RrefResult rref(const Matrix& m);

/// A solution of m x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse of a square matrix; throws Errc::Precondition when singular.
Matrix inverse(const Matrix& m);

size_t rank_of(const Matrix& m);

}  // namespace wm
