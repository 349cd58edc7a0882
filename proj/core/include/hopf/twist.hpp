#pragma once

#include "hopf/hopf_algebra.hpp"
#include "hopf/invariants.hpp"
#include "hopf/structure.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

enum class TwistFailure { not_invertible, inverse_mismatch, normalization, cocycle };

std::string to_string(TwistFailure f);

struct TwistError : std::runtime_error {
  TwistError(TwistFailure kind, const std::string& what) : std::runtime_error(what), kind(kind) {}
  TwistFailure kind;
};

/// A validated Drinfeld twist F in H (x) H with its derived elements
///   beta  = sum f_i S(g_i),  beta_inv = sum S(d_i) e_i  (F^-1 = sum d_i (x) e_i),
///   gamma = beta S(beta^-1).
struct Twist {
  Vec f;
  Vec f_inv;
  Vec beta;
  Vec beta_inv;
  Vec gamma;
  Vec gamma_inv;
};

/// Outcome of every twist condition, evaluated in order; later checks are
/// skipped (left false) once F is found not to be invertible.
struct TwistCheckReport {
  bool invertible = false;
  bool inverse_matches = true;  // supplied F^-1, if any, inverts F
  bool counit_left = false;     // (eps (x) id)(F) = 1
  bool counit_right = false;    // (id (x) eps)(F) = 1
  bool cocycle = false;
  bool beta_routes_agree = false;
  std::optional<Twist> twist;

  std::optional<TwistFailure> first_failure() const;
};

TwistCheckReport check_twist(const HopfAlgebra& h, const Vec& f, const std::optional<Vec>& f_inv = std::nullopt);

/// Throws TwistError naming the first failing condition.
Twist validate_twist(const HopfAlgebra& h, const Vec& f, const std::optional<Vec>& f_inv = std::nullopt);

/// (Delta (x) id)(X) and (id (x) Delta)(X) for X in H (x) H.
Vec coproduct_left(const HopfAlgebra& h, const Vec& x);
Vec coproduct_right(const HopfAlgebra& h, const Vec& x);

struct TwistedPair {
  HopfAlgebra base;
  Twist twist;
  HopfAlgebra twisted;
};

/// H^F: same algebra, Delta^F = F Delta(-) F^-1, S_F(h) = beta S(h) beta^-1.
TwistedPair twist_hopf(const HopfAlgebra& h, const Twist& t);

/// gamma S^2(gamma) ... S^{2k-2}(gamma).
Vec gamma_power(const HopfAlgebra& h, const Twist& t, unsigned k);

/// True iff Delta(v) = v (x) v and eps(v) = 1.
bool grouplike_check(const HopfAlgebra& h, const Vec& v);

/// Delta(gamma) = F^-1 (gamma (x) gamma) (S^2 (x) S^2)(F).
bool gamma_coproduct_check(const HopfAlgebra& h, const Twist& t);
bool gamma_coproduct_check(const HopfAlgebra& h, const Twist& t, const Vec& gamma);

struct BetaFixedResult {
  bool semisimple = false;
  bool chevalley = false;
  bool antipode_fixes_beta = false;  // S(beta) = beta
  bool beta_mod_radical = false;     // S(beta) - beta in J(H)

  /// The statement that applies to H: exact fixedness when semisimple,
  /// fixedness modulo J when Chevalley; vacuously true otherwise.
  bool holds() const;
};

BetaFixedResult beta_fixed_check(const HopfAlgebra& h, const Twist& t);
BetaFixedResult beta_fixed_check(const HopfAlgebra& h, const Twist& t, const ChevalleyResult& chev);

struct InvarianceReport {
  InvariantTable base;
  InvariantTable twisted;
  std::vector<TableDifference> diff;
};

/// trace_min > trace_max selects the default range [-2 ord(S), 2 ord(S)].
InvarianceReport invariance_report(const HopfAlgebra& h, const Twist& t, long trace_min = 1, long trace_max = 0,
                                   unsigned kmn_max = 12);

enum class RegularObjectStatus { witness_found, no_witness_probabilistic, quotient_certified };

std::string to_string(RegularObjectStatus s);

struct RegularObjectResult {
  RegularObjectStatus status = RegularObjectStatus::no_witness_probabilistic;
  std::optional<Vec> witness;
  std::size_t fixed_space_dim = 0;
  unsigned trials = 0;
  /// sigma^N = r(gamma^(N))^-1 with N = ord(S^2).
  bool sigma_power_identity = false;
  /// H Chevalley and the image of gamma is 1 and the induced S^2 is id in H/J.
  bool quotient_certificate = false;
};

/// Searches for a unit t with S^2(t) gamma^-1 = t (see RegularObjectResult).
RegularObjectResult regular_object_test(const HopfAlgebra& h, const Twist& t, std::uint64_t seed = 0);

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GammaUnityResult {
  bool holds = false;
  Vec gamma_n;
};

/// gamma^(N) = 1; requires ord(S^2) | N.
GammaUnityResult gamma_unity_check(const HopfAlgebra& h, const Twist& t, unsigned long n);

}  // namespace hopf
