#pragma once

#include "hopf/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hopf {

using Vec = std::vector<CycNum>;

struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Vec zero_vec(std::size_t n, int conductor);
Vec unit_vec(std::size_t n, std::size_t i, int conductor);
bool is_zero(std::span<const CycNum> v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const CycNum& c);

/// Dense row-major matrix over Q(zeta_n). Column j holds the image of the
/// j-th basis vector, so `A * v` applies the map A to the coordinates v.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, int conductor = 1);

  static Mat identity(std::size_t n, int conductor = 1);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows, int conductor);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols, int conductor);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int conductor() const { return conductor_; }

  CycNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const CycNum> data() const { return data_; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const CycNum& c) const;
  Mat transpose() const;
  CycNum trace() const;
  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int conductor_ = 1;
  std::vector<CycNum> data_;
};

/// Coefficient of basis element k in the product/coproduct slot (i, j).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d, int conductor);

  std::size_t dim() const { return d_; }
  CycNum& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d_ + j) * d_ + k]; }
  const CycNum& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d_ + j) * d_ + k];
  }
  std::span<const CycNum> data() const { return data_; }
  std::size_t size() const { return data_.size(); }
  CycNum& flat(std::size_t idx) { return data_[idx]; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.d_ == b.d_ && a.data_ == b.data_; }

 private:
  std::size_t d_ = 0;
  std::vector<CycNum> data_;
};

struct Solution {
  Vec particular;
  std::vector<Vec> nullspace;
};

/// Affine solution set of A x = b, or nullopt when inconsistent.
std::optional<Solution> solve(const Mat& a, const Vec& b);
std::vector<Vec> nullspace(const Mat& a);
std::size_t rank(const Mat& a);
Mat inverse(const Mat& a);

/// Kronecker product; the pair (i, j) is flattened to i * dim_B + j.
Mat kron(const Mat& a, const Mat& b);

/// True iff A^n = 0 for an n x n matrix A.
bool is_nilpotent(const Mat& a);
Mat power(const Mat& a, unsigned long k);

bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t dim, int conductor);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
/// Only the first `pivot_cols` columns are eligible as pivots.
std::vector<std::size_t> row_reduce(std::vector<Vec>& rows, std::size_t pivot_cols);

}  // namespace hopf
