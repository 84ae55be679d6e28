#include "wm/subspace.hpp"

namespace wm {

Subspace Subspace::zero(const FieldSpec& f, size_t ambient) {
  return Subspace(f, ambient, Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& f, size_t ambient) {
  std::vector<size_t> piv(ambient);
  for (size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(f, ambient, Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::span(const Matrix& generators) {
  RrefResult rr = rref(generators);
  Matrix basis = rr.reduced.submatrix(0, 0, rr.rank, generators.cols());
  return Subspace(generators.field(), generators.cols(), std::move(basis),
                  std::move(rr.pivots));
}

Subspace Subspace::span_of(const FieldSpec& f, const std::vector<Vec>& rows,
                           size_t ambient) {
  return span(Matrix::from_rows(f, rows, ambient));
}

bool Subspace::contains_vector(const Vec& v) const {
  return coordinates_of(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  require(ambient_ == other.ambient_ && field_ == other.field_,
          Errc::DimensionMismatch, "subspace containment");
  for (size_t i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  require(v.size() == ambient_, Errc::DimensionMismatch,
          "vector/ambient mismatch");
  // Pivot columns of an RREF basis read the coefficients off directly.
  Vec coords = vec::zero(field_, dim());
  Vec rest = v;
  for (size_t i = 0; i < dim(); ++i) {
    coords[i] = rest[pivots_[i]];
    if (!coords[i].is_zero())
      rest = vec::sub(rest, vec::scale(coords[i], basis_.row(i)));
  }
  if (!vec::is_zero(rest)) return std::nullopt;
  return coords;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  require(coords.size() == dim(), Errc::DimensionMismatch, "coords length");
  Vec v = vec::zero(field_, ambient_);
  for (size_t i = 0; i < dim(); ++i)
    if (!coords[i].is_zero())
      v = vec::add(v, vec::scale(coords[i], basis_.row(i)));
  return v;
}

namespace {
void check_compatible(const Subspace& u, const Subspace& w) {
  require(u.field() == w.field(), Errc::FieldMismatch, "subspace op");
  require(u.ambient_dim() == w.ambient_dim(), Errc::DimensionMismatch,
          "subspace op");
}
}  // namespace

Subspace sum(const Subspace& u, const Subspace& w) {
  check_compatible(u, w);
  return Subspace::span(u.basis().vstack(w.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  check_compatible(u, w);
  size_t n = u.ambient_dim();
  const FieldSpec& f = u.field();
  // Zassenhaus: reduce [U | U; W | 0]; rows with zero left half carry a
  // basis of the intersection in their right half.
  Matrix top = u.basis().hstack(u.basis());
  Matrix bottom = w.basis().hstack(Matrix(f, w.dim(), n));
  RrefResult rr = rref(top.vstack(bottom));
  std::vector<Vec> inter;
  for (size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] < n) continue;
    inter.push_back(Vec(rr.reduced.row(i).begin() + n,
                        rr.reduced.row(i).end()));
  }
  return Subspace::span_of(f, inter, n);
}

Subspace complement_in(const Subspace& u, const Subspace& w) {
  check_compatible(u, w);
  require(w.contains(u), Errc::Precondition,
          "complement_in requires u to be a subspace of w");
  Matrix work = u.basis();
  size_t r = u.dim();
  std::vector<Vec> added;
  for (size_t i = 0; i < w.dim(); ++i) {
    Vec cand = w.basis().row(i);
    Matrix trial = work.vstack(Matrix::from_rows(w.field(), {cand},
                                                 w.ambient_dim()));
    if (rank_of(trial) > r) {
      work = std::move(trial);
      ++r;
      added.push_back(std::move(cand));
    }
  }
  return Subspace::span_of(w.field(), added, w.ambient_dim());
}

Subspace kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec::zero(m.field(), m.cols());
    v[c] = Scalar::one(m.field());
    for (size_t i = 0; i < rr.rank; ++i)
      v[rr.pivots[i]] = -rr.reduced.at(i, c);
    basis.push_back(std::move(v));
  }
  return Subspace::span_of(m.field(), basis, m.cols());
}

Subspace apply_map(const Matrix& m, const Subspace& space) {
  require(m.cols() == space.ambient_dim(), Errc::DimensionMismatch,
          "apply_map");
  std::vector<Vec> images;
  images.reserve(space.dim());
  for (size_t i = 0; i < space.dim(); ++i)
    images.push_back(m.apply(space.basis().row(i)));
  return Subspace::span_of(m.field(), images, m.rows());
}

}  // namespace wm
