#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

using Rational = mpq_class;

struct CycParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConductorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

long euler_phi(long n);
long gcd(long a, long b);
long lcm(long a, long b);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

namespace detail {
struct CycField;
}

/// An element of Q(zeta_n), stored as its remainder modulo Phi_n.
///
/// The coefficient vector always has length phi(n); equality of two values
/// with different conductors is decided in Q(zeta_lcm). Values are never
/// descended to a smaller field automatically.
class CycNum {
 public:
  CycNum();
  CycNum(long value, int conductor = 1);
  CycNum(const Rational& value, int conductor = 1);

  static CycNum zero(int conductor);
  static CycNum one(int conductor);
  /// zeta_n^exponent, exponent taken mod n.
  static CycNum zeta(int conductor, long exponent = 1);
  /// Reduces an arbitrary-length coefficient list (powers of zeta_n) mod Phi_n.
  static CycNum from_powers(int conductor, std::vector<Rational> coeffs);

  int conductor() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  /// Re-expresses the value in Q(zeta_m); conductor() must divide m.
  CycNum lifted(int m) const;
  CycNum inverse() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  /// this += a * b, without a temporary when all conductors agree.
  void add_product(const CycNum& a, const CycNum& b);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Canonical text form, e.g. "1/2 + 1/2*z - z^3". Parses back with cyc_parse.
  std::string to_string() const;

 private:
  CycNum(const detail::CycField* field, std::vector<Rational> coeffs);
  static void align(CycNum& a, CycNum& b);

  const detail::CycField* field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

/// Parses `text` in Q(zeta_conductor). Grammar: signed sums of terms
/// `q`, `q*z`, `q*z^k`, `z^k` with `q = int[/posint]`.
CycNum cyc_parse(std::string_view text, int conductor);

enum class CycOp { add, sub, mul, div };
CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op);

/// Rational with canonicalized numerator/denominator.
Rational make_rational(long num, long den = 1);

}  // namespace hopf
