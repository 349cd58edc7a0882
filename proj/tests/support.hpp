#pragma once

#include "hopf/hopf_algebra.hpp"

#include <complex>
#include <cstdint>
#include <random>

namespace testing {

using hopf::CycNum;
using hopf::Vec;

inline CycNum random_cyc(std::mt19937_64& rng, int n, long bound = 5) {
  std::vector<hopf::Rational> c(static_cast<std::size_t>(n));
  for (auto& q : c) {
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    const long den = 1 + static_cast<long>(rng() % 3);
    q = hopf::make_rational(num, den);
  }
  return CycNum::from_powers(n, std::move(c));
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t len, int n, long bound = 3) {
  Vec v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    v.emplace_back(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound, n);
  return v;
}

inline hopf::Mat random_int_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int n, long bound = 4) {
  hopf::Mat m(r, c, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = CycNum(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound, n);
  return m;
}

// z -> exp(2 pi i / n): a ring homomorphism Q(zeta_n) -> C.
inline std::complex<double> embed(const CycNum& x) {
  const double pi = 3.14159265358979323846;
  const int n = x.conductor();
  std::complex<double> acc = 0, zk = 1;
  const std::complex<double> z = std::polar(1.0, 2 * pi / n);
  for (const auto& q : x.coeffs()) {
    acc += q.get_d() * zk;
    zk *= z;
  }
  return acc;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

// Dense product straight from the structure tensor, bypassing HopfAlgebra::multiply.
inline Vec raw_multiply(const hopf::HopfAlgebra& h, const Vec& a, const Vec& b) {
  const std::size_t d = h.dim();
  Vec out = hopf::zero_vec(d, h.conductor());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out[k] += a[i] * b[j] * h.mult()(i, j, k);
  return out;
}

}  // namespace testing
