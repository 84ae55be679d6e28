#include "wm/algebra.hpp"

#include <sstream>

namespace wm {

namespace {

// c_{ij}^. as a Vec.
Vec product_vec(const Algebra& a, size_t i, size_t j) {
  auto row = a.product_row(i, j);
  return Vec(row.begin(), row.end());
}

Vec multiply_coords(const Algebra& a, const Vec& x, const Vec& y) {
  size_t n = a.dim();
  Vec out = vec::zero(a.field(), n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      auto row = a.product_row(i, j);
      for (size_t k = 0; k < n; ++k) {
        if (row[k].is_zero()) continue;
        out[k] += c * row[k];
      }
    }
  }
  return out;
}

std::optional<Vec> identity_coords_of(const Algebra& a) {
  size_t n = a.dim();
  const FieldSpec& f = a.field();
  if (n == 0) return Vec{};
  // Unknown u, equations u e_j = e_j and e_j u = e_j for every j.
  Matrix sys(f, 2 * n * n, n);
  Vec rhs = vec::zero(f, 2 * n * n);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) {
      auto lrow = a.product_row(i, j);  // coefficient of u_i in u e_j
      auto rrow = a.product_row(j, i);  // coefficient of u_i in e_j u
      for (size_t k = 0; k < n; ++k) {
        sys.at((j * n + k), i) = lrow[k];
        sys.at((n * n + j * n + k), i) = rrow[k];
      }
    }
    rhs[j * n + j] = Scalar::one(f);
    rhs[n * n + j * n + j] = Scalar::one(f);
  }
  return solve(sys, rhs);
}

}  // namespace

std::optional<AssocWitness> check_associativity(const FieldSpec& f, size_t dim,
                                                const std::vector<Scalar>& tensor) {
  require(tensor.size() == dim * dim * dim, Errc::DimensionMismatch,
          "structure tensor size");
  auto row = [&](size_t i, size_t j) {
    return std::span<const Scalar>(tensor.data() + (i * dim + j) * dim, dim);
  };
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) {
        // (e_i e_j) e_k = sum_m c_{ij}^m c_{mk}^. versus
        // e_i (e_j e_k) = sum_m c_{jk}^m c_{im}^.
        Vec lhs = vec::zero(f, dim), rhs = vec::zero(f, dim);
        auto cij = row(i, j), cjk = row(j, k);
        for (size_t m = 0; m < dim; ++m) {
          if (!cij[m].is_zero()) {
            auto cmk = row(m, k);
            for (size_t w = 0; w < dim; ++w)
              if (!cmk[w].is_zero()) lhs[w] += cij[m] * cmk[w];
          }
          if (!cjk[m].is_zero()) {
            auto cim = row(i, m);
            for (size_t w = 0; w < dim; ++w)
              if (!cim[w].is_zero()) rhs[w] += cjk[m] * cim[w];
          }
        }
        if (lhs != rhs)
          return AssocWitness{i, j, k, std::move(lhs), std::move(rhs)};
      }
  return std::nullopt;
}

AlgebraPtr Algebra::create(const FieldSpec& f, size_t dim, std::vector<Scalar> tensor,
                           std::vector<std::string> basis_names) {
  if (auto w = check_associativity(f, dim, tensor)) {
    std::ostringstream os;
    os << "(e" << w->i << " e" << w->j << ") e" << w->k << " = "
       << vec::str(w->left_product) << " but e" << w->i << " (e" << w->j
       << " e" << w->k << ") = " << vec::str(w->right_product);
    fail(Errc::NotAssociative, os.str());
  }
  return create_trusted(f, dim, std::move(tensor), std::move(basis_names));
}

AlgebraPtr Algebra::create_trusted(const FieldSpec& f, size_t dim,
                                   std::vector<Scalar> tensor,
                                   std::vector<std::string> basis_names) {
  require(tensor.size() == dim * dim * dim, Errc::DimensionMismatch,
          "structure tensor size");
  require(basis_names.empty() || basis_names.size() == dim,
          Errc::DimensionMismatch, "basis name count");
  auto a = std::shared_ptr<Algebra>(
      new Algebra(f, dim, std::move(tensor), std::move(basis_names)));
  a->validated_ = true;
  a->identity_ = identity_coords_of(*a);
  return a;
}

std::string Algebra::basis_name(size_t i) const {
  if (i < basis_names_.size()) return basis_names_[i];
  return "e" + std::to_string(i);
}

Element Element::zero(const AlgebraPtr& a) {
  return {a, vec::zero(a->field(), a->dim())};
}

Element Element::basis(const AlgebraPtr& a, size_t i) {
  return {a, vec::unit(a->field(), a->dim(), i)};
}

Element Element::of(const AlgebraPtr& a, Vec coords) {
  require(coords.size() == a->dim(), Errc::DimensionMismatch,
          "element coordinate length");
  return {a, std::move(coords)};
}

bool Element::operator==(const Element& o) const {
  return algebra.get() == o.algebra.get() && coords == o.coords;
}

std::string Element::str() const { return vec::str(coords); }

namespace {
void check_same_algebra(const Element& a, const Element& b) {
  require(a.algebra.get() == b.algebra.get(), Errc::Precondition,
          "elements of different algebras");
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  check_same_algebra(a, b);
  return {a.algebra, vec::add(a.coords, b.coords)};
}

Element operator-(const Element& a, const Element& b) {
  check_same_algebra(a, b);
  return {a.algebra, vec::sub(a.coords, b.coords)};
}

Element operator*(const Scalar& c, const Element& a) {
  return {a.algebra, vec::scale(c, a.coords)};
}

Element multiply(const Element& a, const Element& b) {
  check_same_algebra(a, b);
  return {a.algebra, multiply_coords(*a.algebra, a.coords, b.coords)};
}

Matrix left_mul_operator(const Element& a) {
  const Algebra& alg = *a.algebra;
  size_t n = alg.dim();
  Matrix m(alg.field(), n, n);
  for (size_t j = 0; j < n; ++j) {
    // column j = coordinates of a e_j
    for (size_t i = 0; i < n; ++i) {
      if (a.coords[i].is_zero()) continue;
      auto row = alg.product_row(i, j);
      for (size_t k = 0; k < n; ++k)
        if (!row[k].is_zero()) m.at(k, j) += a.coords[i] * row[k];
    }
  }
  return m;
}

Matrix right_mul_operator(const Element& a) {
  const Algebra& alg = *a.algebra;
  size_t n = alg.dim();
  Matrix m(alg.field(), n, n);
  for (size_t j = 0; j < n; ++j) {
    // column j = coordinates of e_j a
    for (size_t i = 0; i < n; ++i) {
      if (a.coords[i].is_zero()) continue;
      auto row = alg.product_row(j, i);
      for (size_t k = 0; k < n; ++k)
        if (!row[k].is_zero()) m.at(k, j) += a.coords[i] * row[k];
    }
  }
  return m;
}

std::optional<Element> find_identity(const AlgebraPtr& a) {
  if (a->identity_coords()) return Element::of(a, *a->identity_coords());
  return std::nullopt;
}

bool is_idempotent(const Element& e) { return multiply(e, e) == e; }

Element Unitalization::embed_element(const Element& x) const {
  return Element::of(algebra, embed.apply(x.coords));
}

Unitalization unitalize(const AlgebraPtr& a) {
  size_t n = a->dim();
  const FieldSpec& f = a->field();
  size_t m = n + 1;
  std::vector<Scalar> tensor(m * m * m, Scalar::zero(f));
  auto at = [&](size_t i, size_t j, size_t k) -> Scalar& {
    return tensor[(i * m + j) * m + k];
  };
  for (size_t j = 0; j < m; ++j) at(0, j, j) = Scalar::one(f);
  for (size_t i = 1; i < m; ++i) at(i, 0, i) = Scalar::one(f);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto row = a->product_row(i, j);
      for (size_t k = 0; k < n; ++k) at(i + 1, j + 1, k + 1) = row[k];
    }
  std::vector<std::string> names;
  if (!a->basis_names().empty()) {
    names.push_back("1");
    for (size_t i = 0; i < n; ++i) names.push_back(a->basis_name(i));
  }
  AlgebraPtr a1 = Algebra::create(f, m, std::move(tensor), std::move(names));
  Matrix embed(f, m, n);
  for (size_t i = 0; i < n; ++i) embed.at(i + 1, i) = Scalar::one(f);
  return {std::move(a1), std::move(embed)};
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  size_t n = a->dim();
  std::vector<Scalar> tensor;
  tensor.reserve(n * n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto row = a->product_row(j, i);
      tensor.insert(tensor.end(), row.begin(), row.end());
    }
  // Associativity of the reversed tensor is the mirror image of the
  // original identity, so the scan is skipped.
  return Algebra::create_trusted(a->field(), n, std::move(tensor),
                                 a->basis_names());
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two_sided";
  }
  return "?";
}

bool is_ideal(const AlgebraPtr& a, Side side, const Subspace& space) {
  require(space.ambient_dim() == a->dim(), Errc::DimensionMismatch,
          "ideal ambient dimension");
  for (size_t i = 0; i < a->dim(); ++i) {
    Element ei = Element::basis(a, i);
    for (size_t r = 0; r < space.dim(); ++r) {
      Element v = Element::of(a, space.basis().row(r));
      if (side != Side::Right &&
          !space.contains_vector(multiply(ei, v).coords))
        return false;
      if (side != Side::Left &&
          !space.contains_vector(multiply(v, ei).coords))
        return false;
    }
  }
  return true;
}

SidedIdeal::SidedIdeal(AlgebraPtr algebra, Side side, Subspace space)
    : algebra_(std::move(algebra)), side_(side), space_(std::move(space)) {
  require(is_ideal(algebra_, side_, space_), Errc::NotAnIdeal,
          std::string("subspace is not a ") + side_name(side_) + " ideal");
}

SidedIdeal SidedIdeal::unchecked(AlgebraPtr algebra, Side side,
                                 Subspace space) {
  SidedIdeal id{std::move(algebra), side, Subspace::zero(space.field(), space.ambient_dim())};
  id.space_ = std::move(space);
  return id;
}

SidedIdeal ideal_generated(const AlgebraPtr& a, Side side,
                           const std::vector<Element>& generators) {
  std::vector<Vec> rows;
  for (const auto& g : generators) {
    require(g.algebra.get() == a.get(), Errc::Precondition,
            "generator from another algebra");
    rows.push_back(g.coords);
  }
  Subspace span = Subspace::span_of(a->field(), rows, a->dim());
  for (;;) {
    std::vector<Vec> next;
    for (size_t r = 0; r < span.dim(); ++r) {
      Vec v = span.basis().row(r);
      next.push_back(v);
      Element ev = Element::of(a, v);
      for (size_t i = 0; i < a->dim(); ++i) {
        Element ei = Element::basis(a, i);
        if (side != Side::Right) next.push_back(multiply(ei, ev).coords);
        if (side != Side::Left) next.push_back(multiply(ev, ei).coords);
      }
    }
    Subspace grown = Subspace::span_of(a->field(), next, a->dim());
    if (grown == span) break;
    span = std::move(grown);
  }
  return SidedIdeal::unchecked(a, side, std::move(span));
}

Subspace subspace_product(const AlgebraPtr& a, const Subspace& u,
                          const Subspace& v) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < u.dim(); ++i)
    for (size_t j = 0; j < v.dim(); ++j)
      rows.push_back(multiply_coords(*a, u.basis().row(i),
                                     v.basis().row(j)));
  return Subspace::span_of(a->field(), rows, a->dim());
}

QuotientMap QuotientMap::identity(const AlgebraPtr& a) {
  Matrix id = Matrix::identity(a->field(), a->dim());
  return QuotientMap(
      a, a,
      SidedIdeal::unchecked(a, Side::TwoSided,
                            Subspace::zero(a->field(), a->dim())),
      id, id);
}

QuotientMap QuotientMap::build(const AlgebraPtr& a, const SidedIdeal& n) {
  return quotient(a, n);
}

Element QuotientMap::project(const Element& x) const {
  require(x.algebra.get() == source_.get(), Errc::Precondition,
          "projecting element of a different algebra");
  return Element::of(target_, projection_.apply(x.coords));
}

Element QuotientMap::lift(const Element& xbar) const {
  require(xbar.algebra.get() == target_.get(), Errc::Precondition,
          "lifting element of a different algebra");
  return Element::of(source_, section_.apply(xbar.coords));
}

Subspace QuotientMap::project_subspace(const Subspace& s) const {
  return apply_map(projection_, s);
}

QuotientMap quotient(const AlgebraPtr& a, const SidedIdeal& n) {
  require(n.algebra().get() == a.get(), Errc::Precondition,
          "ideal of a different algebra");
  require(n.side() == Side::TwoSided || is_ideal(a, Side::TwoSided, n.space()),
          Errc::NotTwoSided, "quotient kernel must be two-sided");
  if (n.space().is_zero()) return QuotientMap::identity(a);

  const FieldSpec& f = a->field();
  size_t dim = a->dim();
  Subspace comp = complement_in(n.space(), Subspace::full(f, dim));
  size_t nbar = comp.dim();

  // x = sum y_a C_a + sum z_b N_b; the projection reads off y.
  Matrix basis_rows = comp.basis().vstack(n.space().basis());
  Matrix proj = inverse(basis_rows.transpose()).submatrix(0, 0, nbar, dim);
  Matrix section = comp.basis().transpose();

  std::vector<Scalar> tensor;
  tensor.reserve(nbar * nbar * nbar);
  for (size_t i = 0; i < nbar; ++i)
    for (size_t j = 0; j < nbar; ++j) {
      Vec prod = multiply_coords(*a, comp.basis().row(i),
                                 comp.basis().row(j));
      Vec image = proj.apply(prod);
      tensor.insert(tensor.end(), image.begin(), image.end());
    }
  AlgebraPtr target = Algebra::create(f, nbar, std::move(tensor));

  // kernel(projection) must be exactly N
  require(kernel(proj) == n.space(), Errc::Internal,
          "quotient projection kernel mismatch");
  SidedIdeal ker = SidedIdeal::unchecked(a, Side::TwoSided, n.space());
  return QuotientMap(a, target, std::move(ker), std::move(proj),
                     std::move(section));
}

std::optional<Vec> solve_in_subspace(const Matrix& m, const Vec& b,
                                     const Subspace& constraint) {
  require(m.cols() == constraint.ambient_dim(), Errc::DimensionMismatch,
          "solve_in_subspace");
  // Parametrize x = B^T t over the constraint basis and solve for t.
  Matrix reduced = m * constraint.basis().transpose();
  auto t = solve(reduced, b);
  if (!t) return std::nullopt;
  return constraint.from_coordinates(*t);
}

}  // namespace wm
