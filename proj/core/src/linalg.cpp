#include "hopf/linalg.hpp"

#include <utility>

namespace hopf {

Vec zero_vec(std::size_t n, int conductor) { return Vec(n, CycNum::zero(conductor)); }

Vec unit_vec(std::size_t n, std::size_t i, int conductor) {
  Vec v = zero_vec(n, conductor);
  v.at(i) = CycNum::one(conductor);
  return v;
}

bool is_zero(std::span<const CycNum> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) out[i] -= b[i];
  return out;
}

Vec scale(const Vec& v, const CycNum& c) {
  Vec out = v;
  for (auto& x : out)
    if (!x.is_zero()) x *= c;
  return out;
}

Mat::Mat(std::size_t rows, std::size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(rows * cols, CycNum::zero(conductor)) {}

Mat Mat::identity(std::size_t n, int conductor) {
  Mat m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum::one(conductor);
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows, int conductor) {
  Mat m(rows, cols.size(), conductor);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols, int conductor) {
  Mat m(rows.size(), cols, conductor);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vec Mat::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  Mat out(rows_, o.cols_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycNum& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const CycNum& b = o(k, j);
        if (b.is_zero()) continue;
        out(i, j).add_product(a, b);
      }
    }
  }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vec out = zero_vec(rows_, conductor_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const CycNum& a = (*this)(i, k);
      if (!a.is_zero()) out[i].add_product(a, v[k]);
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Mat Mat::scaled(const CycNum& c) const {
  Mat out = *this;
  for (auto& x : out.data_)
    if (!x.is_zero()) x *= c;
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_, conductor_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

CycNum Mat::trace() const {
  if (rows_ != cols_) throw ShapeError("trace of a non-square matrix");
  CycNum t = CycNum::zero(conductor_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Mat::is_zero() const { return hopf::is_zero(data_); }

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const CycNum& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Tensor3::Tensor3(std::size_t d, int conductor) : d_(d), data_(d * d * d, CycNum::zero(conductor)) {}

std::vector<std::size_t> row_reduce(std::vector<Vec>& rows, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < pivot_cols && cur < rows.size(); ++c) {
    std::size_t p = cur;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[cur], rows[p]);
    Vec& prow = rows[cur];
    const CycNum inv = prow[c].inverse();
    support.clear();
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (prow[j].is_zero()) continue;
      if (j != c) prow[j] *= inv;
      support.push_back(j);
    }
    prow[c] = CycNum::one(prow[c].conductor());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == cur || rows[r][c].is_zero()) continue;
      const CycNum factor = rows[r][c];
      Vec& row = rows[r];
      for (std::size_t j : support) row[j] -= factor * prow[j];
    }
    pivots.push_back(c);
    ++cur;
  }
  return pivots;
}

namespace {

std::vector<Vec> to_rows(const Mat& a) {
  std::vector<Vec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return rows;
}

}  // namespace

std::optional<Solution> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw ShapeError("solve: right-hand side length mismatch");
  const std::size_t n = a.cols();
  const int cond = a.conductor();
  std::vector<Vec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec row = a.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  const auto pivots = row_reduce(rows, n);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (!rows[r][n].is_zero()) return std::nullopt;

  Solution sol;
  sol.particular = zero_vec(n, cond);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular[pivots[r]] = rows[r][n];
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n, cond);
    v[f] = CycNum::one(cond);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!rows[r][f].is_zero()) v[pivots[r]] = -rows[r][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::vector<Vec> nullspace(const Mat& a) { return solve(a, zero_vec(a.rows(), a.conductor()))->nullspace; }

std::size_t rank(const Mat& a) {
  auto rows = to_rows(a);
  return row_reduce(rows, a.cols()).size();
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const int cond = a.conductor();
  std::vector<Vec> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Vec row = a.row(r);
    row.resize(2 * n, CycNum::zero(cond));
    row[n + r] = CycNum::one(cond);
    rows.push_back(std::move(row));
  }
  const auto pivots = row_reduce(rows, n);
  if (pivots.size() != n) throw SingularMatrix("matrix is singular");
  Mat inv(n, n, cond);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols(), static_cast<int>(lcm(a.conductor(), b.conductor())));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const CycNum& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const CycNum& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

Mat power(const Mat& a, unsigned long k) {
  if (a.rows() != a.cols()) throw ShapeError("power of a non-square matrix");
  Mat result = Mat::identity(a.rows(), a.conductor());
  Mat base = a;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool is_nilpotent(const Mat& a) {
  if (a.rows() != a.cols()) throw ShapeError("nilpotency of a non-square matrix");
  Mat p = a;
  for (std::size_t k = 1; k < a.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * a;
  }
  return p.is_zero();
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t dim, int conductor) {
  if (basis.empty()) return is_zero(v);
  return solve(Mat::from_columns(basis, dim, conductor), v).has_value();
}

}  // namespace hopf
