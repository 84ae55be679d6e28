#pragma once

#include "wm/matrix.hpp"

namespace wm {

/// A linear subspace of k^n held in canonical form: the basis matrix is the
/// RREF of any generating set, zero rows dropped.  Two Subspace values are
/// equal as sets iff they are equal as values, so set equality is operator==.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, size_t ambient);
  static Subspace full(const FieldSpec& f, size_t ambient);

  /// Canonicalizes the row space of `generators` (rows may be dependent).
  static Subspace span(const Matrix& generators);
  static Subspace span_of(const FieldSpec& f, const std::vector<Vec>& rows,
                          size_t ambient);

  const FieldSpec& field() const { return field_; }
  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains_vector(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vec> coordinates_of(const Vec& v) const;

  /// The ambient vector with the given basis coefficients.
  Vec from_coordinates(const Vec& coords) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  std::string str() const { return basis_.str(); }

 private:
  Subspace(const FieldSpec& f, size_t ambient, Matrix basis,
           std::vector<size_t> pivots)
      : field_(f), ambient_(ambient), basis_(std::move(basis)),
        pivots_(std::move(pivots)) {}

  FieldSpec field_;
  size_t ambient_;
  Matrix basis_;  // dim x ambient, RREF, no zero rows
  std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& w);

/// Zassenhaus intersection.
Subspace intersect(const Subspace& u, const Subspace& w);

/// Extends a basis of u to one of w (u must be contained in w) and returns
/// the span of the added vectors, so u + result = w and the sum is direct.
Subspace complement_in(const Subspace& u, const Subspace& w);

/// Null space {x : m x = 0}.
Subspace kernel(const Matrix& m);

/// Image {m u : u in space} of a subspace under a linear map.
Subspace apply_map(const Matrix& m, const Subspace& space);

}  // namespace wm
