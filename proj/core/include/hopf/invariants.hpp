#pragma once

#include "hopf/hopf_algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

struct OrderCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// S^n; negative n uses the inverse of S.
Mat antipode_power(const HopfAlgebra& h, long n);
CycNum trace_antipode_power(const HopfAlgebra& h, long n);

/// P_k(h) = h_1 h_2 ... h_k, the k-th convolution power of the identity.
Mat convolution_power(const HopfAlgebra& h, unsigned k);
/// P_0 .. P_kmax.
std::vector<Mat> convolution_powers(const HopfAlgebra& h, unsigned kmax);

/// Tr(S o P_{n-1}) for n >= 1 and Tr(S^2) for n = 0.
CycNum kmn_indicator(const HopfAlgebra& h, unsigned n);

struct AntipodeOrders {
  unsigned long ord_s = 0;
  unsigned long ord_s2 = 0;
};

/// Multiplicative orders of S and S^2; throws OrderCapExceeded past 4 dim^2.
AntipodeOrders ord_antipode(const HopfAlgebra& h);
unsigned long matrix_order(const Mat& m, unsigned long cap);

struct InvariantTable {
  std::size_t dim = 0;
  std::map<long, CycNum> trace_powers;
  std::map<unsigned, CycNum> kmn;
  unsigned long ord_s = 0;
  unsigned long ord_s2 = 0;
  bool semisimple = false;
  bool chevalley = false;
};

struct TableDifference {
  std::string quantity;  // "dim", "trace", "kmn", "ord_s", "ord_s2"
  long n = 0;
  std::string a;
  std::string b;
};

/// Traces over [trace_min, trace_max] and indicators nu_0..nu_kmn_max.
/// When trace_min > trace_max the range defaults to [-2 ord(S), 2 ord(S)].
InvariantTable invariant_table(const HopfAlgebra& h, long trace_min, long trace_max, unsigned kmn_max);
InvariantTable invariant_table(const HopfAlgebra& h);

/// Gauge-invariant quantities that differ; the structural flags are not compared.
std::vector<TableDifference> diff_tables(const InvariantTable& a, const InvariantTable& b);

}  // namespace hopf
