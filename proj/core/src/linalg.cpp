#include "hompre/linalg.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "hompre/errors.hpp"

namespace hompre {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

// Row-reduces m in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(LinearMap& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Vector Vector::basis(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require(size() == o.size(), "vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require(size() == o.size(), "vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = -entries_[i];
  return r;
}

Vector Vector::concat(const Vector& a, const Vector& b) {
  std::vector<Scalar> v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return Vector(std::move(v));
}

Vector Vector::slice(std::size_t offset, std::size_t count) const {
  require(offset + count <= size(), "slice out of range");
  return Vector(std::vector<Scalar>(entries_.begin() + static_cast<std::ptrdiff_t>(offset),
                                    entries_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ']';
}

LinearMap::LinearMap(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows * cols, "matrix entry count does not match shape");
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LinearMap LinearMap::diagonal(const std::vector<Scalar>& diag) {
  LinearMap m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

LinearMap LinearMap::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    require(row.size() == c, "ragged matrix rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return LinearMap(r, c, std::move(e));
}

LinearMap LinearMap::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  LinearMap m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == rows, "column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector LinearMap::apply(const Vector& v) const {
  require(v.size() == cols_, "map applied to vector of wrong size");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) acc += a * v[j];
    }
    out[i] = acc;
  }
  return out;
}

Vector LinearMap::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool LinearMap::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar LinearMap::determinant() const {
  require(is_square(), "determinant of non-square map");
  LinearMap m = *this;
  Scalar det = 1;
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar f = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

std::size_t LinearMap::rank() const {
  LinearMap m = *this;
  return row_reduce(m).size();
}

LinearMap LinearMap::inverse() const {
  require(is_square(), "inverse of non-square map");
  const std::size_t n = rows_;
  LinearMap aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw SingularMap("map is not invertible");
  LinearMap inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

LinearMap LinearMap::power(int exponent) const {
  require(is_square(), "power of non-square map");
  LinearMap base = exponent < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  LinearMap result = identity(rows_);
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

LinearMap& LinearMap::operator*=(const Scalar& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  require(a.cols_ == b.rows_, "matrix product shapes incompatible");
  LinearMap c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

LinearMap LinearMap::operator-() const {
  LinearMap m = *this;
  for (auto& x : m.entries_) x = -x;
  return m;
}

std::ostream& operator<<(std::ostream& os, const LinearMap& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Tensor2::Tensor2(std::size_t dim_left, std::size_t dim_right, std::vector<Scalar> entries)
    : dim_left_(dim_left), dim_right_(dim_right), entries_(std::move(entries)) {
  require(entries_.size() == dim_left * dim_right, "tensor entry count does not match shape");
}

Tensor2 Tensor2::from_map(const LinearMap& m) {
  return Tensor2(m.rows(), m.cols(), std::vector<Scalar>(m.entries().begin(), m.entries().end()));
}

Tensor2 Tensor2::from_flat(std::size_t dim_left, std::size_t dim_right, const Vector& v) {
  return Tensor2(dim_left, dim_right, std::vector<Scalar>(v.begin(), v.end()));
}

Tensor2 Tensor2::elementary(std::size_t n, std::size_t i, std::size_t j) {
  Tensor2 t(n, n);
  t(i, j) = 1;
  return t;
}

bool Tensor2::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

bool Tensor2::is_symmetric() const {
  if (dim_left_ != dim_right_) return false;
  for (std::size_t i = 0; i < dim_left_; ++i)
    for (std::size_t j = i + 1; j < dim_right_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  require(dim_left_ == o.dim_left_ && dim_right_ == o.dim_right_, "tensor shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  require(dim_left_ == o.dim_left_ && dim_right_ == o.dim_right_, "tensor shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Tensor2 operator*(const Scalar& s, Tensor2 t) {
  for (auto& x : t.entries_) x *= s;
  return t;
}

bool Tensor3::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t Tensor3::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& x : entries_)
    if (!x.is_zero()) ++n;
  return n;
}

void Tensor3::add_outer(const Scalar& s, const Vector& a, const Vector& b, const Vector& c) {
  require(a.size() == d0_ && b.size() == d1_ && c.size() == d2_, "outer product shape mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < d0_; ++i) {
    if (a[i].is_zero()) continue;
    const Scalar si = s * a[i];
    for (std::size_t j = 0; j < d1_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar sij = si * b[j];
      for (std::size_t k = 0; k < d2_; ++k)
        if (!c[k].is_zero()) (*this)(i, j, k) += sij * c[k];
    }
  }
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  require(d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_, "tensor shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  require(d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_, "tensor shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

LinearMap invert_map(const LinearMap& m) { return m.inverse(); }

LinearMap dual_map(const LinearMap& m) { return m.transpose(); }

LinearMap tensor_product_map(const LinearMap& f, const LinearMap& g) {
  LinearMap k(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& a = f(i, j);
      if (a.is_zero()) continue;
      for (std::size_t p = 0; p < g.rows(); ++p)
        for (std::size_t q = 0; q < g.cols(); ++q)
          if (!g(p, q).is_zero()) k(i * g.rows() + p, j * g.cols() + q) = a * g(p, q);
    }
  return k;
}

LinearMap direct_sum(const LinearMap& f, const LinearMap& g) {
  LinearMap m(f.rows() + g.rows(), f.cols() + g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) m(i, j) = f(i, j);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m(f.rows() + i, f.cols() + j) = g(i, j);
  return m;
}

Vector apply_bilinear(const Tensor3& c, const Vector& x, const Vector& y) {
  require(x.size() == c.dim(0) && y.size() == c.dim(1), "bilinear map applied to vectors of wrong size");
  Vector out(c.dim(2));
  for (std::size_t i = 0; i < c.dim(0); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.dim(1); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < c.dim(2); ++k)
        if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

Tensor2 flip_tensor2(const Tensor2& r) {
  if (r.dim_left() != r.dim_right()) throw DimensionMismatch("flip requires a square tensor");
  Tensor2 f(r.dim_right(), r.dim_left());
  for (std::size_t i = 0; i < r.dim_left(); ++i)
    for (std::size_t j = 0; j < r.dim_right(); ++j) f(j, i) = r(i, j);
  return f;
}

LinearMap linear_combination(const std::vector<LinearMap>& maps, const Vector& coeffs,
                             std::size_t rows, std::size_t cols) {
  require(maps.size() == coeffs.size(), "coefficient count does not match family size");
  LinearMap m(rows, cols);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    require(maps[i].rows() == rows && maps[i].cols() == cols, "family member has wrong shape");
    m += coeffs[i] * maps[i];
  }
  return m;
}

Vector solve(const LinearMap& m, const Vector& b) { return m.inverse().apply(b); }

std::optional<Vector> solve_in_span(const LinearMap& columns, const Vector& w) {
  require(w.size() == columns.rows(), "vector length does not match column length");
  const std::size_t k = columns.cols();
  LinearMap aug(columns.rows(), k + 1);
  for (std::size_t i = 0; i < columns.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = columns(i, j);
    aug(i, k) = w[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw DimensionMismatch("spanning columns are linearly dependent");
  Vector c(k);
  for (std::size_t r = 0; r < k; ++r) c[r] = aug(r, k);
  return c;
}

std::vector<std::size_t> pivot_columns(const LinearMap& m) {
  LinearMap copy = m;
  return row_reduce(copy);
}

}  // namespace hompre
