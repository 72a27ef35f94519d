#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hompre/scalar.hpp"

namespace hompre {

/// Dense coordinate vector over the rationals.
class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t size) : entries_(size) {}
  Vector(std::initializer_list<Scalar> values) : entries_(values) {}
  explicit Vector(std::vector<Scalar> values) : entries_(std::move(values)) {}

  /// The i-th standard basis vector of length n (zero-based i).
  static Vector basis(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  Vector operator-() const;
  friend bool operator==(const Vector&, const Vector&) = default;

  /// Concatenation, used for direct sums A ⊕ B.
  static Vector concat(const Vector& a, const Vector& b);
  Vector slice(std::size_t offset, std::size_t count) const;

private:
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

/// Square or rectangular matrix of a linear map in fixed bases, row-major.
/// apply() acts on column vectors: (M v)_i = sum_j M(i,j) v_j.
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  LinearMap(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static LinearMap identity(std::size_t n);
  static LinearMap zero(std::size_t rows, std::size_t cols) { return LinearMap(rows, cols); }
  static LinearMap diagonal(const std::vector<Scalar>& diag);
  static LinearMap from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  static LinearMap from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const Scalar> entries() const { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector apply(const Vector& v) const;
  Vector column(std::size_t j) const;
  bool is_zero() const;

  LinearMap transpose() const;
  Scalar determinant() const;
  std::size_t rank() const;
  /// Exact inverse; throws SingularMap when the determinant vanishes.
  LinearMap inverse() const;
  /// Integer power; negative exponents go through inverse().
  LinearMap power(int exponent) const;

  LinearMap& operator+=(const LinearMap& o);
  LinearMap& operator-=(const LinearMap& o);
  LinearMap& operator*=(const Scalar& s);
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(const Scalar& s, LinearMap m) { return m *= s; }
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  LinearMap operator-() const;
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const LinearMap& m);

/// Element of V ⊗ W: entry (i, j) is the coefficient of e_i ⊗ e_j.
/// Flattening order is lexicographic with the left factor major.
class Tensor2 {
public:
  Tensor2() = default;
  Tensor2(std::size_t dim_left, std::size_t dim_right)
      : dim_left_(dim_left), dim_right_(dim_right), entries_(dim_left * dim_right) {}
  Tensor2(std::size_t dim_left, std::size_t dim_right, std::vector<Scalar> entries);

  static Tensor2 from_map(const LinearMap& m);
  static Tensor2 from_flat(std::size_t dim_left, std::size_t dim_right, const Vector& v);
  /// e_i ⊗ e_j in dimension n (zero-based).
  static Tensor2 elementary(std::size_t n, std::size_t i, std::size_t j);

  std::size_t dim_left() const { return dim_left_; }
  std::size_t dim_right() const { return dim_right_; }
  std::span<const Scalar> entries() const { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_right_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_right_ + j]; }

  Vector flat() const { return Vector(entries_); }
  LinearMap as_map() const { return LinearMap(dim_left_, dim_right_, entries_); }
  bool is_zero() const;
  bool is_symmetric() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Scalar& s, Tensor2 t);
  friend bool operator==(const Tensor2&, const Tensor2&) = default;

private:
  std::size_t dim_left_ = 0;
  std::size_t dim_right_ = 0;
  std::vector<Scalar> entries_;
};

/// Rank-3 array; as a structure tensor, entry (i, j, k) is c_{ij}^k in
/// e_i * e_j = sum_k c_{ij}^k e_k.
class Tensor3 {
public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), entries_(d0 * d1 * d2) {}
  /// Cubical tensor of dimension n in every slot.
  static Tensor3 cube(std::size_t n) { return Tensor3(n, n, n); }

  std::size_t dim(std::size_t slot) const { return slot == 0 ? d0_ : (slot == 1 ? d1_ : d2_); }
  std::span<const Scalar> entries() const { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return entries_[(i * d1_ + j) * d2_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * d1_ + j) * d2_ + k];
  }

  bool is_zero() const;
  std::size_t nonzero_count() const;
  /// Adds s * (a ⊗ b ⊗ c).
  void add_outer(const Scalar& s, const Vector& a, const Vector& b, const Vector& c);

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
  std::size_t d0_ = 0;
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  std::vector<Scalar> entries_;
};

LinearMap invert_map(const LinearMap& m);

/// Plain transpose: the matrix of f* on dual bases, <f*(ξ), u> = <ξ, f(u)>.
LinearMap dual_map(const LinearMap& m);

/// Kronecker product f ⊗ g on the lexicographically ordered tensor basis.
LinearMap tensor_product_map(const LinearMap& f, const LinearMap& g);

/// Block-diagonal f ⊕ g.
LinearMap direct_sum(const LinearMap& f, const LinearMap& g);

/// (x * y)_k = sum_{i,j} x_i y_j c(i, j, k).
Vector apply_bilinear(const Tensor3& c, const Vector& x, const Vector& y);

/// σ(r): (i, j) ↦ (j, i). Requires a square tensor.
Tensor2 flip_tensor2(const Tensor2& r);

/// sum_i coeffs_i * maps_i; the standard way a basis-indexed family of
/// matrices (ρ(e_i)) is evaluated at a vector x.
LinearMap linear_combination(const std::vector<LinearMap>& maps, const Vector& coeffs,
                             std::size_t rows, std::size_t cols);

/// Unique solution of m x = b for invertible square m.
Vector solve(const LinearMap& m, const Vector& b);

/// Coordinates c with columns * c = w, or nullopt when w is outside the
/// column span. Columns must be linearly independent.
std::optional<Vector> solve_in_span(const LinearMap& columns, const Vector& w);

/// Indices of pivot columns from exact row reduction; these columns form a
/// basis of the column space.
std::vector<std::size_t> pivot_columns(const LinearMap& m);

}  // namespace hompre
