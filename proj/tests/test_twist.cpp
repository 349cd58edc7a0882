#include "hopf/twist.hpp"
#include "hopf/zoo.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hopf;

namespace {

Vec identity_twist(const HopfAlgebra& h) { return h.tensor_one(2); }

// sum_{a,b} phi(a,b) e_a (x) e_b over the idempotents of kZ_m
Vec idempotent_twist(const HopfAlgebra& h, unsigned m, const std::vector<std::vector<CycNum>>& phi) {
  const int n = h.conductor();
  std::vector<Vec> e;
  for (unsigned a = 0; a < m; ++a) {
    Vec v = h.zero();
    for (unsigned b = 0; b < m; ++b) v[b] = CycNum::zeta(n, -static_cast<long>(a * b) * (n / m)) / CycNum(m, n);
    e.push_back(v);
  }
  Vec f = zero_vec(h.dim() * h.dim(), n);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) f = f + scale(tensor_product(e[a], e[b]), phi[a][b]);
  return f;
}

}  // namespace

TEST_CASE("identity twist") {
  for (const auto& h : {group_algebra(GroupPresentation::cyclic(3)), sweedler(), taft(3, 1)}) {
    INFO(h.name());
    const auto t = validate_twist(h, identity_twist(h));
    CHECK(t.beta == h.one());
    CHECK(t.gamma == h.one());
    CHECK(t.f_inv == identity_twist(h));
    const auto pair = twist_hopf(h, t);
    CHECK(pair.twisted.comult() == h.comult());
    CHECK(pair.twisted.antipode() == h.antipode());
    CHECK(pair.twisted.mult() == h.mult());
    CHECK(pair.twisted.name() == h.name() + "^F");
    for (unsigned k = 1; k <= 4; ++k) CHECK(gamma_power(h, t, k) == h.one());
    CHECK(gamma_coproduct_check(h, t));
    CHECK(invariance_report(h, t).diff.empty());
    const auto b = beta_fixed_check(h, t);
    CHECK(b.antipode_fixes_beta);
    CHECK(b.holds());
    const auto reg = regular_object_test(h, t, 3);
    CHECK(reg.status == RegularObjectStatus::witness_found);
    for (unsigned long n : {1ul, 2ul, 6ul})
      if (power(h.antipode(), 2 * n).is_identity()) CHECK(gamma_unity_check(h, t, n).holds);
  }
}

TEST_CASE("bicharacter twist on kZ2") {
  const auto h = group_algebra(GroupPresentation::cyclic(2));
  const Vec f = bicharacter_twist(h, h.basis(1), 2, 1);
  std::size_t nonzero = 0;
  for (const auto& c : f) nonzero += !c.is_zero();
  CHECK(nonzero == 4);
  const auto rep = check_twist(h, f);
  CHECK(rep.invertible);
  CHECK(rep.counit_left);
  CHECK(rep.counit_right);
  CHECK(rep.cocycle);
  CHECK(rep.beta_routes_agree);
  CHECK_FALSE(rep.first_failure());
  CHECK(rep.twist);
}

TEST_CASE("1 (x) 1 + 1 (x) x on Sweedler is rejected at normalization") {
  const auto sw = sweedler();
  const Vec f = tensor_product(sw.one(), sw.one()) + tensor_product(sw.one(), sw.basis(2));
  const auto rep = check_twist(sw, f);
  CHECK(rep.invertible);
  CHECK_FALSE(rep.counit_left);
  CHECK(rep.counit_right);
  CHECK(rep.first_failure() == TwistFailure::normalization);
  try {
    validate_twist(sw, f);
    FAIL("expected TwistError");
  } catch (const TwistError& e) {
    CHECK(e.kind == TwistFailure::normalization);
  }
}

TEST_CASE("twist failure kinds") {
  const auto z2 = group_algebra(GroupPresentation::cyclic(2));
  // e_0 (x) e_0 is a proper idempotent
  const Vec e0 = scale(z2.one() + z2.basis(1), CycNum(Rational(1, 2), 2));
  CHECK(check_twist(z2, tensor_product(e0, e0)).first_failure() == TwistFailure::not_invertible);

  const auto z3 = group_algebra(GroupPresentation::cyclic(3));
  const Vec f = bicharacter_twist(z3, z3.basis(1), 3, 1);
  CHECK(check_twist(z3, f, f).first_failure() == TwistFailure::inverse_mismatch);
  CHECK_FALSE(check_twist(z3, f, validate_twist(z3, f).f_inv).first_failure());

  // normalized, invertible, but phi(1,1) phi(2,2) != phi(1,2) phi(1,0)
  std::vector<std::vector<CycNum>> phi(3, std::vector<CycNum>(3, CycNum::one(3)));
  phi[1][1] = CycNum(2, 3);
  const Vec bad = idempotent_twist(z3, 3, phi);
  const auto rep = check_twist(z3, bad);
  CHECK(rep.invertible);
  CHECK(rep.counit_left);
  CHECK(rep.counit_right);
  CHECK(rep.first_failure() == TwistFailure::cocycle);

  CHECK_THROWS_AS(check_twist(z3, z3.one()), ShapeError);
}

TEST_CASE("idempotent construction matches the bicharacter twist") {
  const auto z3 = group_algebra(GroupPresentation::cyclic(3));
  for (long c = 0; c < 3; ++c) {
    std::vector<std::vector<CycNum>> phi(3, std::vector<CycNum>(3, CycNum::one(3)));
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned b = 0; b < 3; ++b) phi[a][b] = CycNum::zeta(3, c * a * b);
    CHECK(idempotent_twist(z3, 3, phi) == bicharacter_twist(z3, z3.basis(1), 3, c));
  }
}

TEST_CASE("twisting kZ4 leaves the structure unchanged") {
  const auto h = group_algebra(GroupPresentation::cyclic(4));
  const auto t = validate_twist(h, bicharacter_twist(h, h.basis(1), 4, 1));
  const auto pair = twist_hopf(h, t);
  CHECK(pair.twisted.comult() == h.comult());
  CHECK(pair.twisted.antipode() == h.antipode());
  CHECK(beta_fixed_check(h, t).antipode_fixes_beta);
}

TEST_CASE("twisting Sweedler by the Z2 bicharacter") {
  const auto sw = sweedler();
  const auto t = validate_twist(sw, bicharacter_twist(sw, sw.basis(1), 2, 1));
  const auto pair = twist_hopf(sw, t);
  CHECK(pair.twisted.comult() != sw.comult());
  CHECK(verify_hopf(pair.twisted).all_passed());

  const Vec g2 = gamma_power(sw, t, 2);
  CHECK(gamma_power(sw, t, 1) == t.gamma);
  CHECK(grouplike_check(pair.twisted, g2));
  CHECK(gamma_coproduct_check(sw, t));
  CHECK(invariance_report(sw, t).diff.empty());
  CHECK_THROWS_AS(gamma_power(sw, t, 0), PreconditionError);
}

TEST_CASE("conjugated twists on Sweedler and Taft") {
  for (const auto& h : {sweedler(), taft(3, 1), generalized_taft(2, 2, 1)}) {
    INFO(h.name());
    const std::size_t x = h.conductor();  // index of x in the g^i x^j basis
    Vec u = h.one();
    u[x] = CycNum::one(h.conductor());
    const Vec f = conjugate_twist(h, bicharacter_twist(h, h.basis(1), static_cast<unsigned>(h.conductor()), 1), u);
    const auto t = validate_twist(h, f);
    const auto pair = twist_hopf(h, t);
    CHECK(verify_hopf(pair.twisted).all_passed());

    const auto chev = is_chevalley(h);
    const auto b = beta_fixed_check(h, t, chev);
    CHECK(b.chevalley);
    CHECK(b.beta_mod_radical);
    CHECK(b.holds());

    CHECK(gamma_coproduct_check(h, t));
    Vec mutated = t.gamma;
    mutated[x] += CycNum::one(h.conductor());
    CHECK_FALSE(gamma_coproduct_check(h, t, mutated));

    const auto n = ord_antipode(h).ord_s2;
    CHECK(grouplike_check(pair.twisted, gamma_power(h, t, static_cast<unsigned>(n))));
  }
  CHECK_THROWS_AS(conjugate_twist(sweedler(), sweedler().tensor_one(2), sweedler().basis(2)), std::invalid_argument);
}

TEST_CASE("beta is fixed by S for group algebra twists") {
  for (unsigned m : {2u, 3u, 4u, 6u}) {
    const auto h = group_algebra(GroupPresentation::cyclic(m));
    for (long c = 0; c < static_cast<long>(m); ++c) {
      const auto t = validate_twist(h, bicharacter_twist(h, h.basis(1), m, c));
      const auto b = beta_fixed_check(h, t);
      CHECK(b.semisimple);
      CHECK(b.antipode_fixes_beta);
    }
  }
}

TEST_CASE("S(beta) - beta has positive x-degree on Taft twists") {
  const auto t3 = taft(3, 1);
  for (long c = 0; c < 3; ++c) {
    const auto t = validate_twist(t3, bicharacter_twist(t3, t3.basis(1), 3, c));
    const Vec diff = t3.apply_antipode(t.beta) - t.beta;
    for (std::size_t i = 0; i < 3; ++i) CHECK(diff[i].is_zero());
    CHECK(beta_fixed_check(t3, t).beta_mod_radical);
  }
}

TEST_CASE("Taft(3) bicharacter twist preserves the invariant table") {
  const auto t3 = taft(3, 1);
  const auto t = validate_twist(t3, bicharacter_twist(t3, t3.basis(1), 3, 1));
  const auto rep = invariance_report(t3, t, -8, 8, 12);
  CHECK(rep.diff.empty());
  CHECK(rep.base.trace_powers.size() == 17);
  CHECK(rep.twisted.ord_s == rep.base.ord_s);
  CHECK(rep.twisted.ord_s2 == rep.base.ord_s2);
}

TEST_CASE("regular object search") {
  const auto t3 = taft(3, 1);
  Vec u = t3.one();
  u[3] = CycNum::one(3);
  const auto t = validate_twist(t3, conjugate_twist(t3, bicharacter_twist(t3, t3.basis(1), 3, 1), u));
  const auto a = regular_object_test(t3, t, 17);
  const auto b = regular_object_test(t3, t, 17);
  CHECK(a.status == RegularObjectStatus::witness_found);
  REQUIRE(a.witness);
  CHECK(a.witness == b.witness);
  CHECK(a.trials == b.trials);
  CHECK(a.sigma_power_identity);
  CHECK(a.quotient_certificate);
  const Vec& w = *a.witness;
  CHECK(t3.multiply(t3.antipode() * (t3.antipode() * w), t.gamma_inv) == w);
  CHECK(t3.inverse_element(w).has_value());
  CHECK(to_string(a.status) == "witness-found");
}

TEST_CASE("gamma unity") {
  const auto sw = sweedler();
  const auto t = validate_twist(sw, bicharacter_twist(sw, sw.basis(1), 2, 1));
  CHECK(gamma_unity_check(sw, t, 2).holds);
  CHECK(gamma_unity_check(sw, t, 4).holds);
  CHECK_THROWS_AS(gamma_unity_check(sw, t, 3), PreconditionError);

  Twist bad = t;
  bad.gamma = scale(t.gamma, CycNum(2, 2));
  const auto r = gamma_unity_check(sw, bad, 2);
  CHECK_FALSE(r.holds);
  CHECK(r.gamma_n != sw.one());
}

TEST_CASE("coproduct on tensor legs") {
  const auto sw = sweedler();
  const Vec x = sw.basis(2), g = sw.basis(1);
  const Vec xg = tensor_product(x, g);
  CHECK(coproduct_left(sw, xg) == tensor_product(sw.coproduct(x), g));
  CHECK(coproduct_right(sw, xg) == tensor_product(x, sw.coproduct(g)));
}
