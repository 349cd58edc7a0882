#include "hopf/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopf {

long gcd(long a, long b) { return std::gcd(a, b); }
long lcm(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  if (n < 1) throw ConductorError("euler_phi: n must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace detail {

struct CycField {
  int n;
  int phi;
  std::vector<long> modulus;  // Phi_n, monic of degree phi
};

namespace {

std::vector<long> compute_cyclotomic(int n, std::map<int, std::vector<long>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long> den = compute_cyclotomic(d, memo);
    const std::size_t dd = den.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
      const long c = num[k];  // den is monic
      quot[k - dd] = c;
      if (c != 0)
        for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= c * den[t];
      if (k == dd) break;
    }
    num = std::move(quot);
  }
  memo.emplace(n, num);
  return num;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::unique_ptr<CycField>>& registry() {
  static std::map<int, std::unique_ptr<CycField>> r;
  return r;
}

std::map<int, std::vector<long>>& cyclo_memo() {
  static std::map<int, std::vector<long>> m;
  return m;
}

}  // namespace

const CycField* field(int n) {
  if (n < 1) throw ConductorError("conductor must be a positive integer, got " + std::to_string(n));
  std::lock_guard lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(n);
  if (it != reg.end()) return it->second.get();
  auto f = std::make_unique<CycField>();
  f->n = n;
  f->phi = static_cast<int>(euler_phi(n));
  f->modulus = compute_cyclotomic(n, cyclo_memo());
  const CycField* raw = f.get();
  reg.emplace(n, std::move(f));
  return raw;
}

const CycField* rational_field() {
  static const CycField* f = field(1);
  return f;
}

}  // namespace detail

const std::vector<long>& cyclotomic_polynomial(int n) { return detail::field(n)->modulus; }

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place reduction modulo the monic integer polynomial `m`.
void reduce_mod(Poly& p, const std::vector<long>& m) {
  const std::size_t deg = m.size() - 1;
  if (p.size() <= deg) {
    p.resize(deg);
    return;
  }
  Rational tmp;
  for (std::size_t k = p.size() - 1; k >= deg; --k) {
    if (p[k] != 0) {
      const Rational c = p[k];
      for (std::size_t t = 0; t < deg; ++t) {
        if (m[t] == 0) continue;
        tmp = c * m[t];
        p[k - deg + t] -= tmp;
      }
      p[k] = 0;
    }
    if (k == deg) break;
  }
  p.resize(deg);
}

// Quotient and remainder of a / b over Q; b nonzero and trimmed.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) r[shift + t] -= c * b[t];
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

CycNum::CycNum() : field_(detail::rational_field()), coeffs_(1, Rational(0)) {}

CycNum::CycNum(long value, int conductor)
    : field_(detail::field(conductor)), coeffs_(static_cast<std::size_t>(field_->phi), Rational(0)) {
  coeffs_[0] = value;
}

CycNum::CycNum(const Rational& value, int conductor)
    : field_(detail::field(conductor)), coeffs_(static_cast<std::size_t>(field_->phi), Rational(0)) {
  coeffs_[0] = value;
}

CycNum CycNum::zero(int conductor) { return CycNum(0L, conductor); }
CycNum CycNum::one(int conductor) { return CycNum(1L, conductor); }

CycNum::CycNum(const detail::CycField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CycNum CycNum::from_powers(int conductor, std::vector<Rational> coeffs) {
  const detail::CycField* f = detail::field(conductor);
  const auto n = static_cast<std::size_t>(conductor);
  if (coeffs.size() > n) {
    // zeta^n = 1
    for (std::size_t k = n; k < coeffs.size(); ++k) coeffs[k % n] += coeffs[k];
    coeffs.resize(n);
  }
  reduce_mod(coeffs, f->modulus);
  return CycNum(f, std::move(coeffs));
}

CycNum CycNum::zeta(int conductor, long exponent) {
  if (conductor < 1) throw ConductorError("conductor must be a positive integer");
  long e = exponent % conductor;
  if (e < 0) e += conductor;
  std::vector<Rational> p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[static_cast<std::size_t>(e)] = 1;
  return from_powers(conductor, std::move(p));
}

int CycNum::conductor() const { return field_->n; }

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycNum CycNum::lifted(int m) const {
  const int n = conductor();
  if (m == n) return *this;
  if (m < 1 || m % n != 0)
    throw ConductorError("cannot lift from conductor " + std::to_string(n) + " to " + std::to_string(m));
  const auto step = static_cast<std::size_t>(m / n);
  std::vector<Rational> p((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return from_powers(m, std::move(p));
}

void CycNum::align(CycNum& a, CycNum& b) {
  if (a.field_ == b.field_) return;
  const int m = static_cast<int>(lcm(a.conductor(), b.conductor()));
  a = a.lifted(m);
  b = b.lifted(m);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (field_ != o.field_) {
    CycNum other = o;
    align(*this, other);
    return *this += other;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (o.coeffs_[i] != 0) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (field_ != o.field_) {
    CycNum other = o;
    align(*this, other);
    return *this -= other;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (o.coeffs_[i] != 0) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.field_ != b.field_) {
    CycNum x = a, y = b;
    CycNum::align(x, y);
    return x * y;
  }
  const auto phi = a.coeffs_.size();
  if (phi == 1) return CycNum(a.field_, {a.coeffs_[0] * b.coeffs_[0]});
  std::vector<Rational> p(2 * phi - 1, Rational(0));
  bool any = false;
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      p[i + j] += a.coeffs_[i] * b.coeffs_[j];
      any = true;
    }
  }
  if (!any) return CycNum(a.field_, std::vector<Rational>(phi, Rational(0)));
  reduce_mod(p, a.field_->modulus);
  return CycNum(a.field_, std::move(p));
}

void CycNum::add_product(const CycNum& a, const CycNum& b) {
  if (field_ == a.field_ && field_ == b.field_ && coeffs_.size() == 1) {
    if (a.coeffs_[0] != 0 && b.coeffs_[0] != 0) coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    return;
  }
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in cyclotomic field");
  if (is_rational()) return CycNum(field_, [&] {
      std::vector<Rational> v(coeffs_.size(), Rational(0));
      v[0] = 1 / coeffs_[0];
      return v;
    }());
  Poly m(field_->modulus.begin(), field_->modulus.end());
  Poly a = coeffs_;
  trim(a);
  // Extended Euclid: s * a = r (mod m).
  Poly r0 = m, r1 = a, s0, s1{Rational(1)};
  Poly q, rem;
  while (!r1.empty()) {
    poly_divmod(r0, r1, q, rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible.
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  reduce_mod(s0, field_->modulus);
  return CycNum(field_, std::move(s0));
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  CycNum x = a, y = b;
  CycNum::align(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::string CycNum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (i == 0) {
      term = mag.get_str();
    } else {
      std::string zpow = i == 1 ? "z" : "z^" + std::to_string(i);
      term = mag == 1 ? zpow : mag.get_str() + "*" + zpow;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, int conductor) : s_(text), n_(conductor) {}

  CycNum parse() {
    std::vector<Rational> powers(static_cast<std::size_t>(n_), Rational(0));
    skip_ws();
    if (at_end()) fail("empty coefficient string");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (match_minus()) {
        sign = -1;
      } else if (peek() == '+') {
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      auto [coef, exponent] = term();
      if (sign < 0) coef = -coef;
      powers[static_cast<std::size_t>(exponent % n_)] += coef;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return CycNum::from_powers(n_, std::move(powers));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool match_minus() {
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "cannot parse coefficient \"" << s_ << "\" at offset " << pos_ << ": " << what;
    throw CycParseError(os.str());
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  long exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    mpz_class e = integer();
    mpz_class r = e % n_;
    return r.get_si();
  }

  std::pair<Rational, long> term() {
    if (peek() == 'z') {
      ++pos_;
      return {Rational(1), exponent()};
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a rational or 'z'");
    mpz_class num = integer();
    mpz_class den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    skip_ws();
    bool star = false;
    if (peek() == '*') {
      ++pos_;
      star = true;
      skip_ws();
    }
    if (peek() == 'z') {
      ++pos_;
      return {q, exponent()};
    }
    if (star) fail("expected 'z' after '*'");
    return {q, 0};
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNum cyc_parse(std::string_view text, int conductor) {
  if (conductor < 1) throw ConductorError("conductor must be a positive integer, got " + std::to_string(conductor));
  return Parser(text, conductor).parse();
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
  switch (op) {
    case CycOp::add: return a + b;
    case CycOp::sub: return a - b;
    case CycOp::mul: return a * b;
    case CycOp::div: return a / b;
  }
  throw std::invalid_argument("unknown cyclotomic operation");
}

}  // namespace hopf
