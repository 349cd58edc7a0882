#pragma once

#include "hopf/hopf_algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

struct IntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RadicalVerificationError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotInRadical : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Left integral L of H (h L = eps(h) L) and right integral l of H*
/// (l(h_1) h_2 = l(h) 1), scaled so that l(L) = 1.
struct IntegralPair {
  Vec left_integral;
  Vec right_cointegral;
};

IntegralPair integrals(const HopfAlgebra& h);

/// l(S(L_2) T(L_1)); equals Tr(T) for every linear endomorphism T.
CycNum radford_trace(const HopfAlgebra& h, const IntegralPair& ip, const Mat& t);

/// L_1 (x) a L_2 = S(a) L_1 (x) L_2 for every basis element a.
bool integral_identity_check(const HopfAlgebra& h, const Vec& left_integral);

struct RadicalData {
  std::vector<Vec> radical_basis;
  /// Indices i whose unit vectors e_i complete the radical basis; they
  /// become the basis of H/J in this order.
  std::vector<std::size_t> complement;
  /// (d - dim J) x d coordinate projection H -> H/J.
  Mat projection;
  std::optional<HopfAlgebra> quotient;

  bool contains(const Vec& x) const;
};

/// Complement and projection for the span of `basis` (linearly independent).
RadicalData subspace_data(const HopfAlgebra& h, std::vector<Vec> basis);

/// J(H) as the kernel of the trace form (a, b) -> Tr(l(ab)).
RadicalData jacobson_radical(const HopfAlgebra& h);

struct ChevalleyResult {
  bool chevalley = false;
  /// Name of the first failing Hopf-ideal condition, empty when chevalley.
  std::string failure;
  RadicalData radical;
};

/// Decides whether J(H) is a Hopf ideal; on success radical.quotient holds H/J.
ChevalleyResult is_chevalley(const HopfAlgebra& h);
ChevalleyResult is_chevalley(const HopfAlgebra& h, RadicalData radical);

enum class Side { left, right };

/// Nilpotency of l(x) r(a) T (left) or l(a) r(x) T (right) for x in J(H).
bool nilpotent_composite_check(const HopfAlgebra& h, const RadicalData& rad, const Vec& x, const Vec& a,
                               const Mat& t, Side side);

}  // namespace hopf
