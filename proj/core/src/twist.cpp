#include "hopf/twist.hpp"

#include <random>

namespace hopf {

std::string to_string(TwistFailure f) {
  switch (f) {
    case TwistFailure::not_invertible: return "not_invertible";
    case TwistFailure::inverse_mismatch: return "inverse_mismatch";
    case TwistFailure::normalization: return "normalization";
    case TwistFailure::cocycle: return "cocycle";
  }
  return "unknown";
}

std::string to_string(RegularObjectStatus s) {
  switch (s) {
    case RegularObjectStatus::witness_found: return "witness-found";
    case RegularObjectStatus::no_witness_probabilistic: return "no-witness-probabilistic";
    case RegularObjectStatus::quotient_certified: return "quotient-certified";
  }
  return "unknown";
}

std::optional<TwistFailure> TwistCheckReport::first_failure() const {
  if (!invertible) return TwistFailure::not_invertible;
  if (!inverse_matches) return TwistFailure::inverse_mismatch;
  if (!counit_left || !counit_right) return TwistFailure::normalization;
  if (!cocycle) return TwistFailure::cocycle;
  return std::nullopt;
}

Vec coproduct_left(const HopfAlgebra& h, const Vec& x) {
  const std::size_t d = h.dim();
  Vec out = zero_vec(d * d * d, h.conductor());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const CycNum& c = x[i * d + j];
      if (c.is_zero()) continue;
      for (const auto& t : h.coproduct_terms(i)) out[(t.j * d + t.k) * d + j].add_product(c, t.coef);
    }
  return out;
}

Vec coproduct_right(const HopfAlgebra& h, const Vec& x) {
  const std::size_t d = h.dim();
  Vec out = zero_vec(d * d * d, h.conductor());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const CycNum& c = x[i * d + j];
      if (c.is_zero()) continue;
      for (const auto& t : h.coproduct_terms(j)) out[(i * d + t.j) * d + t.k].add_product(c, t.coef);
    }
  return out;
}

namespace {

// sum x_{jk} b_j S(b_k)
Vec contract_with_antipode_right(const HopfAlgebra& h, const Vec& x) {
  const std::size_t d = h.dim();
  Vec out = h.zero();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      if (!x[j * d + k].is_zero())
        out = out + scale(h.multiply(h.basis(j), h.apply_antipode(h.basis(k))), x[j * d + k]);
  return out;
}

// sum x_{jk} S(b_j) b_k
Vec contract_with_antipode_left(const HopfAlgebra& h, const Vec& x) {
  const std::size_t d = h.dim();
  Vec out = h.zero();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      if (!x[j * d + k].is_zero())
        out = out + scale(h.multiply(h.apply_antipode(h.basis(j)), h.basis(k)), x[j * d + k]);
  return out;
}

Mat square(const Mat& m) { return m * m; }

}  // namespace

TwistCheckReport check_twist(const HopfAlgebra& h, const Vec& f, const std::optional<Vec>& f_inv) {
  const std::size_t d = h.dim();
  if (f.size() != d * d) throw ShapeError("twist has length " + std::to_string(f.size()) + ", expected dim^2");
  if (f_inv && f_inv->size() != d * d) throw ShapeError("twist inverse has wrong length");

  TwistCheckReport rep;
  const Vec one2 = h.tensor_one(2);
  const auto sol = solve(h.left_mult_tensor(f), one2);
  if (!sol || !sol->nullspace.empty()) return rep;
  const Vec& finv = sol->particular;
  rep.invertible = h.tensor_multiply(finv, f, 2) == one2;
  if (!rep.invertible) return rep;
  if (f_inv) rep.inverse_matches = h.tensor_multiply(f, *f_inv, 2) == one2;

  Vec left = h.zero(), right = h.zero();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const CycNum& c = f[j * d + k];
      if (c.is_zero()) continue;
      left[k].add_product(c, h.counit()[j]);
      right[j].add_product(c, h.counit()[k]);
    }
  rep.counit_left = left == h.one();
  rep.counit_right = right == h.one();

  const Vec one = h.one();
  const Vec lhs = h.tensor_multiply(tensor_product(one, f), coproduct_right(h, f), 3);
  const Vec rhs = h.tensor_multiply(tensor_product(f, one), coproduct_left(h, f), 3);
  rep.cocycle = lhs == rhs;

  Twist t;
  t.f = f;
  t.f_inv = finv;
  t.beta = contract_with_antipode_right(h, f);
  t.beta_inv = contract_with_antipode_left(h, finv);
  const auto beta_inv_direct = h.inverse_element(t.beta);
  rep.beta_routes_agree = beta_inv_direct && *beta_inv_direct == t.beta_inv &&
                          h.multiply(t.beta, t.beta_inv) == one;
  t.gamma = h.multiply(t.beta, h.apply_antipode(t.beta_inv));
  // S(beta^-1)^-1 = S(beta)
  t.gamma_inv = h.multiply(h.apply_antipode(t.beta), t.beta_inv);
  if (!rep.first_failure() && rep.beta_routes_agree && h.multiply(t.gamma, t.gamma_inv) == one) rep.twist = std::move(t);
  return rep;
}

Twist validate_twist(const HopfAlgebra& h, const Vec& f, const std::optional<Vec>& f_inv) {
  auto rep = check_twist(h, f, f_inv);
  if (auto failure = rep.first_failure()) {
    std::string what;
    switch (*failure) {
      case TwistFailure::not_invertible: what = "twist is not invertible in H (x) H"; break;
      case TwistFailure::inverse_mismatch: what = "supplied F^-1 does not invert F"; break;
      case TwistFailure::normalization: what = "twist fails counit normalization"; break;
      case TwistFailure::cocycle: what = "twist fails the 2-cocycle identity"; break;
    }
    throw TwistError(*failure, what);
  }
  if (!rep.twist) throw std::logic_error("beta^-1 from F^-1 disagrees with the inverse of beta");
  return std::move(*rep.twist);
}

TwistedPair twist_hopf(const HopfAlgebra& h, const Twist& t) {
  const std::size_t d = h.dim();
  const int n = h.conductor();
  Tensor3 comult(d, n);
  for (std::size_t i = 0; i < d; ++i) {
    const Vec delta = h.tensor_multiply(h.tensor_multiply(t.f, h.coproduct(h.basis(i)), 2), t.f_inv, 2);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) comult(i, j, k) = delta[j * d + k];
  }
  // h -> beta S(h) beta^-1
  const Mat s_twisted = h.left_mult(t.beta) * h.right_mult(t.beta_inv) * h.antipode();
  HopfAlgebra twisted(h.name() + "^F", n, h.mult(), h.unit(), std::move(comult), h.counit(), s_twisted, h.labels());

  const auto report = verify_hopf(twisted);
  if (!report.all_passed()) throw std::logic_error("twisted algebra fails the Hopf axioms");
  const Mat s2 = square(h.antipode());
  if (square(s_twisted) != h.left_mult(t.gamma) * h.right_mult(t.gamma_inv) * s2)
    throw std::logic_error("S_F^2 differs from conjugation of S^2 by gamma");
  return {h, t, std::move(twisted)};
}

Vec gamma_power(const HopfAlgebra& h, const Twist& t, unsigned k) {
  if (k == 0) throw PreconditionError("gamma_power requires k >= 1");
  const Mat s2 = square(h.antipode());
  Vec prod = t.gamma;
  Vec cur = t.gamma;
  for (unsigned step = 1; step < k; ++step) {
    cur = s2 * cur;
    prod = h.multiply(prod, cur);
  }
  return prod;
}

bool grouplike_check(const HopfAlgebra& h, const Vec& v) {
  return h.epsilon(v).is_one() && h.coproduct(v) == tensor_product(v, v);
}

bool gamma_coproduct_check(const HopfAlgebra& h, const Twist& t) { return gamma_coproduct_check(h, t, t.gamma); }

bool gamma_coproduct_check(const HopfAlgebra& h, const Twist& t, const Vec& gamma) {
  const Mat s2 = square(h.antipode());
  const Vec rhs =
      h.tensor_multiply(h.tensor_multiply(t.f_inv, tensor_product(gamma, gamma), 2), apply_factorwise(s2, s2, t.f), 2);
  return h.coproduct(gamma) == rhs;
}

bool BetaFixedResult::holds() const {
  if (semisimple) return antipode_fixes_beta;
  if (chevalley) return beta_mod_radical;
  return true;
}

BetaFixedResult beta_fixed_check(const HopfAlgebra& h, const Twist& t) {
  return beta_fixed_check(h, t, is_chevalley(h));
}

BetaFixedResult beta_fixed_check(const HopfAlgebra& h, const Twist& t, const ChevalleyResult& chev) {
  BetaFixedResult r;
  r.semisimple = chev.radical.radical_basis.empty();
  r.chevalley = chev.chevalley;
  const Vec sb = h.apply_antipode(t.beta);
  r.antipode_fixes_beta = sb == t.beta;
  r.beta_mod_radical = chev.radical.contains(sb - t.beta);
  return r;
}

InvarianceReport invariance_report(const HopfAlgebra& h, const Twist& t, long trace_min, long trace_max,
                                   unsigned kmn_max) {
  const auto pair = twist_hopf(h, t);
  InvarianceReport rep;
  rep.base = invariant_table(h, trace_min, trace_max, kmn_max);
  if (trace_min > trace_max) {
    trace_min = rep.base.trace_powers.begin()->first;
    trace_max = rep.base.trace_powers.rbegin()->first;
  }
  rep.twisted = invariant_table(pair.twisted, trace_min, trace_max, kmn_max);
  rep.diff = diff_tables(rep.base, rep.twisted);
  return rep;
}

RegularObjectResult regular_object_test(const HopfAlgebra& h, const Twist& t, std::uint64_t seed) {
  constexpr unsigned kTrials = 32;
  const std::size_t d = h.dim();
  const int n = h.conductor();
  RegularObjectResult res;

  const Mat s2 = square(h.antipode());
  const Mat sigma = h.right_mult(t.gamma_inv) * s2;
  const auto fixed = nullspace(sigma - Mat::identity(d, n));
  res.fixed_space_dim = fixed.size();

  const unsigned long ord_s2 = ord_antipode(h).ord_s2;
  const Vec gamma_n = gamma_power(h, t, static_cast<unsigned>(ord_s2));
  res.sigma_power_identity = power(sigma, ord_s2) == inverse(h.right_mult(gamma_n));

  auto is_witness = [&](const Vec& cand) {
    return h.multiply(s2 * cand, t.gamma_inv) == cand && rank(h.left_mult(cand)) == d;
  };

  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * d + 1);
  if (!fixed.empty()) {
    for (unsigned trial = 0; trial < kTrials; ++trial) {
      ++res.trials;
      Vec cand = h.zero();
      for (const auto& v : fixed) {
        const long c = static_cast<long>(rng() % span) - static_cast<long>(d);
        if (c != 0) cand = cand + scale(v, CycNum(c, n));
      }
      if (is_witness(cand)) {
        res.witness = std::move(cand);
        res.status = RegularObjectStatus::witness_found;
        break;
      }
    }
  }

  const auto chev = is_chevalley(h);
  if (chev.chevalley) {
    const auto& rad = chev.radical;
    const auto& quotient = *rad.quotient;
    const Vec gamma_bar = rad.projection * t.gamma;
    res.quotient_certificate = gamma_bar == quotient.one() && square(quotient.antipode()).is_identity();
  }
  if (!res.witness && res.quotient_certificate) res.status = RegularObjectStatus::quotient_certified;
  return res;
}

GammaUnityResult gamma_unity_check(const HopfAlgebra& h, const Twist& t, unsigned long n) {
  if (n == 0 || !power(h.antipode(), 2 * n).is_identity())
    throw PreconditionError("gamma_unity_check requires ord(S^2) to divide N");
  GammaUnityResult r;
  r.gamma_n = gamma_power(h, t, static_cast<unsigned>(n));
  r.holds = r.gamma_n == h.one();
  return r;
}

}  // namespace hopf
