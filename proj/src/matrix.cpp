#include "wm/matrix.hpp"

#include <sstream>

namespace wm {

namespace vec {

Vec zero(const FieldSpec& f, size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit(const FieldSpec& f, size_t n, size_t i) {
  Vec v = zero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector add");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector sub");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string str(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i].str();
  os << ")";
  return os.str();
}

}  // namespace vec

Matrix Matrix::identity(const FieldSpec& f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                         size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, Errc::DimensionMismatch,
            "ragged row list");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(size_t i) const {
  return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(field_ == o.field_, Errc::FieldMismatch, "matrix product");
  require(cols_ == o.rows_, Errc::DimensionMismatch, "matrix product");
  Matrix r(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_,
          Errc::DimensionMismatch, "matrix add");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_,
          Errc::DimensionMismatch, "matrix sub");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  require(x.size() == cols_, Errc::DimensionMismatch, "matrix apply");
  Vec r = vec::zero(field_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || x[j].is_zero()) continue;
      r[i] += at(i, j) * x[j];
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  require(field_ == below.field_ && cols_ == below.cols_,
          Errc::DimensionMismatch, "vstack");
  Matrix r(field_, rows_ + below.rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (size_t i = 0; i < below.rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  require(field_ == right.field_ && rows_ == right.rows_,
          Errc::DimensionMismatch, "hstack");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t j = 0; j < right.cols_; ++j)
      r.at(i, cols_ + j) = right.at(i, j);
  }
  return r;
}

Matrix Matrix::submatrix(size_t r0, size_t c0, size_t nrows,
                         size_t ncols) const {
  require(r0 + nrows <= rows_ && c0 + ncols <= cols_, Errc::DimensionMismatch,
          "submatrix");
  Matrix r(field_, nrows, ncols);
  for (size_t i = 0; i < nrows; ++i)
    for (size_t j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         e_ == o.e_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "") << "[";
    for (size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << at(i, j).str();
    os << "]";
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t sel = r;
    while (sel < a.rows() && a.at(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(sel, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), r};
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  require(b.size() == m.rows(), Errc::DimensionMismatch, "solve");
  Matrix aug = m.hstack(Matrix::from_rows(m.field(), {b}, b.size())
                            .transpose());
  RrefResult rr = rref(aug);
  // A pivot in the appended column means the system is inconsistent.
  for (size_t p : rr.pivots)
    if (p == m.cols()) return std::nullopt;
  Vec x = vec::zero(m.field(), m.cols());
  for (size_t i = 0; i < rr.pivots.size(); ++i)
    x[rr.pivots[i]] = rr.reduced.at(i, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  require(m.rows() == m.cols(), Errc::DimensionMismatch, "inverse");
  size_t n = m.rows();
  RrefResult rr = rref(m.hstack(Matrix::identity(m.field(), n)));
  require(rr.rank >= n && (n == 0 || rr.pivots[n - 1] == n - 1),
          Errc::Precondition, "matrix is singular");
  return rr.reduced.submatrix(0, n, n, n);
}

size_t rank_of(const Matrix& m) { return rref(m).rank; }

}  // namespace wm
