#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wm/subspace.hpp"

namespace wm {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AssocWitness {
  size_t i, j, k;
  Vec left_product;   // (e_i e_j) e_k
  Vec right_product;  // e_i (e_j e_k)
};

/// A finite-dimensional associative algebra given by structure constants:
/// e_i e_j = sum_k tensor[i][j][k] e_k.  The tensor is stored dense; target
/// dimensions are small.  Instances are immutable once created; create()
/// refuses non-associative tensors, so a held Algebra is always validated.
class Algebra {
 public:
  /// Validates associativity (throws Errc::NotAssociative with the first
  /// failing triple in lexicographic order) and caches the identity element
  /// if one exists.
  static AlgebraPtr create(const FieldSpec& f, size_t dim, std::vector<Scalar> tensor,
                           std::vector<std::string> basis_names = {});

  /// For constructions whose associativity is inherited structurally
  /// (opposite algebras); skips the O(n^5) scan.
  static AlgebraPtr create_trusted(const FieldSpec& f, size_t dim,
                                   std::vector<Scalar> tensor,
                                   std::vector<std::string> basis_names = {});

  const FieldSpec& field() const { return field_; }
  size_t dim() const { return dim_; }
  bool validated() const { return validated_; }

  /// The structure-constant row c_{ij}^w for w = 0..dim-1.
  std::span<const Scalar> product_row(size_t i, size_t j) const {
    return {tensor_.data() + (i * dim_ + j) * dim_, dim_};
  }

  const std::vector<std::string>& basis_names() const { return basis_names_; }
  std::string basis_name(size_t i) const;

  const std::optional<Vec>& identity_coords() const { return identity_; }

  /// Structural equality (field, dimension, tensor).
  bool operator==(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && tensor_ == o.tensor_;
  }

 private:
  Algebra(const FieldSpec& f, size_t dim, std::vector<Scalar> tensor,
          std::vector<std::string> names)
      : field_(f), dim_(dim), tensor_(std::move(tensor)),
        basis_names_(std::move(names)) {}

  FieldSpec field_;
  size_t dim_;
  std::vector<Scalar> tensor_;  // dim^3, index (i*dim + j)*dim + k
  std::vector<std::string> basis_names_;
  std::optional<Vec> identity_;
  bool validated_ = false;
};

/// Scan for an associativity failure without constructing an Algebra.
/// Returns the lexicographically first failing triple.
std::optional<AssocWitness> check_associativity(const FieldSpec& f, size_t dim,
                                                const std::vector<Scalar>& tensor);

/// An element of an algebra: a coordinate vector in the algebra basis.
struct Element {
  AlgebraPtr algebra;
  Vec coords;

  static Element zero(const AlgebraPtr& a);
  static Element basis(const AlgebraPtr& a, size_t i);
  static Element of(const AlgebraPtr& a, Vec coords);

  bool is_zero() const { return vec::is_zero(coords); }
  bool operator==(const Element& o) const;
  std::string str() const;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Scalar& c, const Element& a);

/// The ring product, the bilinear extension of the structure tensor.
Element multiply(const Element& a, const Element& b);

/// Matrix of y -> a y (resp. y -> y a) in the algebra basis, acting on
/// column coordinate vectors.
Matrix left_mul_operator(const Element& a);
Matrix right_mul_operator(const Element& a);

/// Solves 1 e_i = e_i = e_i 1; nullopt when the algebra has no identity.
std::optional<Element> find_identity(const AlgebraPtr& a);

bool is_idempotent(const Element& e);

/// A with an adjoined identity (always adjoined, even when A is unital).
/// The new unit is basis vector 0; embed maps old coordinates to new ones.
struct Unitalization {
  AlgebraPtr algebra;  // dimension dim(A) + 1
  Matrix embed;        // (n+1) x n, injective algebra map onto codim-1 ideal
  Element embed_element(const Element& x) const;
};
Unitalization unitalize(const AlgebraPtr& a);

/// Same space, reversed multiplication; swaps left and right ideals.
AlgebraPtr opposite(const AlgebraPtr& a);

enum class Side { Left, Right, TwoSided };
const char* side_name(Side s);

/// A subspace closed under the required regular action(s).  Closure is
/// verified at construction; use unchecked() only for spans already known
/// closed (e.g. deserialized data verified elsewhere).
class SidedIdeal {
 public:
  SidedIdeal(AlgebraPtr algebra, Side side, Subspace space);
  static SidedIdeal unchecked(AlgebraPtr algebra, Side side, Subspace space);

  const AlgebraPtr& algebra() const { return algebra_; }
  Side side() const { return side_; }
  const Subspace& space() const { return space_; }
  size_t dim() const { return space_.dim(); }

  bool operator==(const SidedIdeal& o) const {
    return side_ == o.side_ && space_ == o.space_;
  }

 private:
  SidedIdeal() = delete;
  AlgebraPtr algebra_;
  Side side_;
  Subspace space_;
};

/// True iff the subspace is closed under the action(s) required by `side`.
bool is_ideal(const AlgebraPtr& a, Side side, const Subspace& space);

/// Smallest ideal of the given side containing the generators (which are
/// included even when the algebra has no unit).
SidedIdeal ideal_generated(const AlgebraPtr& a, Side side,
                           const std::vector<Element>& generators);

/// span{ u v : u in U, v in V } over basis vectors of U and V.
Subspace subspace_product(const AlgebraPtr& a, const Subspace& u,
                          const Subspace& v);

/// The projection A -> A/N for a two-sided ideal N, with a fixed linear
/// section (free coordinates zero) making all downstream outputs
/// deterministic.
class QuotientMap {
 public:
  static QuotientMap build(const AlgebraPtr& a, const SidedIdeal& two_sided);
  static QuotientMap identity(const AlgebraPtr& a);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const SidedIdeal& kernel() const { return kernel_; }
  const Matrix& projection() const { return projection_; }  // nbar x n
  const Matrix& section() const { return section_; }        // n x nbar

  Element project(const Element& x) const;
  Element lift(const Element& xbar) const;
  Subspace project_subspace(const Subspace& s) const;

 private:
  QuotientMap(AlgebraPtr src, AlgebraPtr tgt, SidedIdeal ker, Matrix proj,
              Matrix sect)
      : source_(std::move(src)), target_(std::move(tgt)),
        kernel_(std::move(ker)), projection_(std::move(proj)),
        section_(std::move(sect)) {}

  AlgebraPtr source_;
  AlgebraPtr target_;
  SidedIdeal kernel_;
  Matrix projection_;
  Matrix section_;
};

/// Throws Errc::NotTwoSided unless N is two-sided.
QuotientMap quotient(const AlgebraPtr& a, const SidedIdeal& n);

/// Solve m x = b for x constrained to a subspace (free coefficients zero).
std::optional<Vec> solve_in_subspace(const Matrix& m, const Vec& b,
                                     const Subspace& constraint);

}  // namespace wm
