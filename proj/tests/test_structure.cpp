#include "hopf/invariants.hpp"
#include "hopf/structure.hpp"
#include "hopf/zoo.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hopf;

namespace {

bool is_left_integral(const HopfAlgebra& h, const Vec& l) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (h.multiply(h.basis(i), l) != scale(l, h.counit()[i])) return false;
  return true;
}

// Span of the monomials g^i x^j with j >= 1 in a generalized Taft algebra.
std::vector<Vec> positive_x_degree(const HopfAlgebra& h, unsigned nd) {
  std::vector<Vec> out;
  for (std::size_t idx = nd; idx < h.dim(); ++idx) out.push_back(h.basis(idx));
  return out;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim, int n) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a)
    if (!in_span(b, v, dim, n)) return false;
  return true;
}

}  // namespace

TEST_CASE("integrals of group algebras") {
  for (const auto& g : {GroupPresentation::cyclic(2), GroupPresentation::cyclic(5), GroupPresentation::symmetric(3)}) {
    const auto h = group_algebra(g);
    const auto ip = integrals(h);
    // Lambda proportional to the sum of all group elements
    Vec sum = h.zero();
    for (std::size_t i = 0; i < h.dim(); ++i) sum[i] = CycNum::one(h.conductor());
    CHECK(in_span({sum}, ip.left_integral, h.dim(), h.conductor()));
    // lambda proportional to the coefficient of the identity
    for (std::size_t i = 0; i < h.dim(); ++i)
      if (i != g.identity) CHECK(ip.right_cointegral[i].is_zero());
    CycNum pairing = CycNum::zero(h.conductor());
    for (std::size_t i = 0; i < h.dim(); ++i) pairing += ip.right_cointegral[i] * ip.left_integral[i];
    CHECK(pairing.is_one());
  }
}

TEST_CASE("Sweedler integral is proportional to x + gx") {
  const auto sw = sweedler();
  const auto ip = integrals(sw);
  const Vec x_gx = sw.basis(2) + sw.basis(3);
  CHECK(in_span({x_gx}, ip.left_integral, 4, 2));
  CHECK(is_left_integral(sw, ip.left_integral));
}

TEST_CASE("Radford trace formula") {
  std::mt19937_64 rng(100);
  for (const auto& h : {group_algebra(GroupPresentation::cyclic(2)), sweedler(), taft(3, 1),
                        dual_group_algebra(GroupPresentation::symmetric(3))}) {
    INFO(h.name());
    const auto ip = integrals(h);
    CHECK(radford_trace(h, ip, Mat::identity(h.dim(), h.conductor())) == CycNum(static_cast<long>(h.dim())));
    CHECK(radford_trace(h, ip, Mat(h.dim(), h.dim(), h.conductor())).is_zero());
    for (int trial = 0; trial < (h.name() == "sweedler" ? 100 : 20); ++trial) {
      const Mat t = testing::random_int_mat(rng, h.dim(), h.dim(), h.conductor());
      CHECK(radford_trace(h, ip, t) == t.trace());
    }
  }
}

TEST_CASE("integral identity") {
  for (const auto& h : {group_algebra(GroupPresentation::cyclic(2)), sweedler(), taft(3, 1)}) {
    const auto ip = integrals(h);
    CHECK(integral_identity_check(h, ip.left_integral));
  }
  const auto sw = sweedler();
  CHECK_FALSE(integral_identity_check(sw, sw.basis(2)));
  CHECK_FALSE(integral_identity_check(sw, sw.one()));
}

TEST_CASE("Jacobson radical examples") {
  CHECK(jacobson_radical(group_algebra(GroupPresentation::symmetric(3))).radical_basis.empty());

  const auto sw = sweedler();
  const auto rad = jacobson_radical(sw);
  CHECK(same_span(rad.radical_basis, {sw.basis(2), sw.basis(3)}, 4, 2));
  // J^2 = 0
  for (const auto& a : rad.radical_basis)
    for (const auto& b : rad.radical_basis) CHECK(is_zero(sw.multiply(a, b)));
  CHECK(rad.projection.rows() == 2);
  CHECK(rad.contains(sw.basis(2) - sw.basis(3)));
  CHECK_FALSE(rad.contains(sw.basis(1)));

  const auto t3 = taft(3, 1);
  const auto r3 = jacobson_radical(t3);
  CHECK(r3.radical_basis.size() == 6);
  CHECK(same_span(r3.radical_basis, positive_x_degree(t3, 3), 9, 3));
}

TEST_CASE("Chevalley property") {
  const auto s3 = group_algebra(GroupPresentation::symmetric(3));
  const auto c = is_chevalley(s3);
  CHECK(c.chevalley);
  REQUIRE(c.radical.quotient);
  CHECK(c.radical.quotient->mult() == s3.mult());
  CHECK(c.radical.quotient->comult() == s3.comult());

  const auto sw = is_chevalley(sweedler());
  CHECK(sw.chevalley);
  CHECK(sw.failure.empty());
  REQUIRE(sw.radical.quotient);
  const auto& q = *sw.radical.quotient;
  CHECK(q.dim() == 2);
  CHECK(verify_hopf(q).all_passed());
  CHECK(diff_tables(invariant_table(q), invariant_table(group_algebra(GroupPresentation::cyclic(2)))).empty());

  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned d = 2; d <= 3; ++d) {
      const auto h = generalized_taft(n, d, 1);
      const auto ch = is_chevalley(h);
      CHECK(ch.chevalley);
      REQUIRE(ch.radical.quotient);
      CHECK(ch.radical.quotient->dim() == n * d);
      CHECK(same_span(ch.radical.radical_basis, positive_x_degree(h, n * d), h.dim(), h.conductor()));
      const auto qt = invariant_table(*ch.radical.quotient);
      CHECK(qt.semisimple);
      CHECK(qt.ord_s2 == 1);
    }
}

TEST_CASE("Hopf ideal conditions on ideals of function algebras") {
  // In k^G the ideal of functions vanishing on X is a Hopf ideal iff X is a subgroup.
  const auto z3 = GroupPresentation::cyclic(3);
  const auto kz3 = dual_group_algebra(z3);
  auto c = is_chevalley(kz3, subspace_data(kz3, {kz3.basis(0)}));
  CHECK_FALSE(c.chevalley);
  CHECK(c.failure == "counit");
  c = is_chevalley(kz3, subspace_data(kz3, {kz3.basis(1)}));
  CHECK(c.failure == "antipode");
  c = is_chevalley(kz3, subspace_data(kz3, {kz3.basis(1), kz3.basis(2)}));
  CHECK(c.chevalley);
  REQUIRE(c.radical.quotient);
  CHECK(c.radical.quotient->dim() == 1);

  const auto s3 = GroupPresentation::symmetric(3);
  const auto ks3 = dual_group_algebra(s3);
  // X = {e, two transpositions} is closed under inverses but not a subgroup
  std::vector<Vec> basis;
  unsigned transpositions = 0;
  for (std::size_t g = 0; g < s3.order; ++g) {
    if (g == s3.identity) continue;
    if (s3.element_order(g) == 2 && transpositions < 2) {
      ++transpositions;
      continue;
    }
    basis.push_back(ks3.basis(g));
  }
  REQUIRE(basis.size() == 3);
  c = is_chevalley(ks3, subspace_data(ks3, basis));
  CHECK(c.failure == "coproduct");

  // X = {e, 3-cycles} is the alternating subgroup
  basis.clear();
  for (std::size_t g = 0; g < s3.order; ++g)
    if (s3.element_order(g) == 2) basis.push_back(ks3.basis(g));
  c = is_chevalley(ks3, subspace_data(ks3, basis));
  CHECK(c.chevalley);
  REQUIRE(c.radical.quotient);
  CHECK(verify_hopf(*c.radical.quotient).all_passed());
}

TEST_CASE("nilpotent composites") {
  const auto sw = sweedler();
  const auto rad = jacobson_radical(sw);
  const Mat s = sw.antipode(), s2 = s * s;
  CHECK(nilpotent_composite_check(sw, rad, sw.basis(2), sw.one(), s, Side::left));
  CHECK(nilpotent_composite_check(sw, rad, sw.basis(2), sw.basis(1), s2, Side::right));

  const auto s3 = group_algebra(GroupPresentation::symmetric(3));
  const auto r3 = jacobson_radical(s3);
  CHECK(nilpotent_composite_check(s3, r3, s3.zero(), s3.basis(1), s3.antipode(), Side::left));

  CHECK_THROWS_AS(nilpotent_composite_check(sw, rad, sw.one(), sw.one(), s, Side::left), NotInRadical);
}
