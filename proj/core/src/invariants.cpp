#include "hopf/invariants.hpp"

#include "hopf/structure.hpp"

namespace hopf {

Mat antipode_power(const HopfAlgebra& h, long n) {
  if (n >= 0) return power(h.antipode(), static_cast<unsigned long>(n));
  return power(inverse(h.antipode()), static_cast<unsigned long>(-n));
}

CycNum trace_antipode_power(const HopfAlgebra& h, long n) { return antipode_power(h, n).trace(); }

namespace {

Mat counit_map(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  Mat p(d, d, h.conductor());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r)
      if (!h.counit()[i].is_zero() && !h.unit()[r].is_zero()) p(r, i) = h.counit()[i] * h.unit()[r];
  return p;
}

// m o (id (x) prev) o Delta
Mat convolve_with_identity(const HopfAlgebra& h, const Mat& prev) {
  const std::size_t d = h.dim();
  Mat out(d, d, h.conductor());
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& t : h.coproduct_terms(i))
      for (std::size_t r = 0; r < d; ++r) {
        const CycNum& p = prev(r, t.k);
        if (p.is_zero()) continue;
        const CycNum w = t.coef * p;
        for (const auto& u : h.product_terms(t.j, r)) out(u.k, i).add_product(w, u.coef);
      }
  return out;
}

}  // namespace

std::vector<Mat> convolution_powers(const HopfAlgebra& h, unsigned kmax) {
  std::vector<Mat> powers;
  powers.reserve(kmax + 1);
  powers.push_back(counit_map(h));
  for (unsigned k = 1; k <= kmax; ++k) powers.push_back(convolve_with_identity(h, powers.back()));
  return powers;
}

Mat convolution_power(const HopfAlgebra& h, unsigned k) { return convolution_powers(h, k).back(); }

CycNum kmn_indicator(const HopfAlgebra& h, unsigned n) {
  if (n == 0) return trace_antipode_power(h, 2);
  return (h.antipode() * convolution_power(h, n - 1)).trace();
}

unsigned long matrix_order(const Mat& m, unsigned long cap) {
  Mat p = m;
  for (unsigned long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  throw OrderCapExceeded("matrix order exceeds cap " + std::to_string(cap));
}

AntipodeOrders ord_antipode(const HopfAlgebra& h) {
  const unsigned long cap = 4UL * h.dim() * h.dim();
  AntipodeOrders o;
  o.ord_s = matrix_order(h.antipode(), cap);
  o.ord_s2 = matrix_order(h.antipode() * h.antipode(), cap);
  return o;
}

InvariantTable invariant_table(const HopfAlgebra& h, long trace_min, long trace_max, unsigned kmn_max) {
  InvariantTable t;
  t.dim = h.dim();
  const auto ords = ord_antipode(h);
  t.ord_s = ords.ord_s;
  t.ord_s2 = ords.ord_s2;
  if (trace_min > trace_max) {
    trace_max = 2 * static_cast<long>(ords.ord_s);
    trace_min = -trace_max;
  }

  const Mat& s = h.antipode();
  if (trace_max >= 0) {
    Mat p = power(s, static_cast<unsigned long>(std::max(0L, trace_min)));
    for (long n = std::max(0L, trace_min); n <= trace_max; ++n) {
      t.trace_powers[n] = p.trace();
      p = p * s;
    }
  }
  if (trace_min < 0) {
    const Mat sinv = inverse(s);
    const long top = std::min(-1L, trace_max);
    Mat p = power(sinv, static_cast<unsigned long>(-top));
    for (long n = top; n >= trace_min; --n) {
      t.trace_powers[n] = p.trace();
      p = p * sinv;
    }
  }

  const auto conv = convolution_powers(h, kmn_max == 0 ? 0 : kmn_max - 1);
  t.kmn[0] = trace_antipode_power(h, 2);
  for (unsigned n = 1; n <= kmn_max; ++n) t.kmn[n] = (s * conv[n - 1]).trace();

  const auto chev = is_chevalley(h);
  t.semisimple = chev.radical.radical_basis.empty();
  t.chevalley = chev.chevalley;
  return t;
}

InvariantTable invariant_table(const HopfAlgebra& h) { return invariant_table(h, 1, 0, 12); }

std::vector<TableDifference> diff_tables(const InvariantTable& a, const InvariantTable& b) {
  std::vector<TableDifference> diff;
  if (a.dim != b.dim) diff.push_back({"dim", 0, std::to_string(a.dim), std::to_string(b.dim)});
  if (a.ord_s != b.ord_s) diff.push_back({"ord_s", 0, std::to_string(a.ord_s), std::to_string(b.ord_s)});
  if (a.ord_s2 != b.ord_s2) diff.push_back({"ord_s2", 0, std::to_string(a.ord_s2), std::to_string(b.ord_s2)});
  for (const auto& [n, v] : a.trace_powers) {
    auto it = b.trace_powers.find(n);
    if (it != b.trace_powers.end() && it->second != v)
      diff.push_back({"trace", n, v.to_string(), it->second.to_string()});
  }
  for (const auto& [n, v] : a.kmn) {
    auto it = b.kmn.find(n);
    if (it != b.kmn.end() && it->second != v)
      diff.push_back({"kmn", static_cast<long>(n), v.to_string(), it->second.to_string()});
  }
  return diff;
}

}  // namespace hopf
