#pragma once

#include "hopf/hopf_algebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

struct GroupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A finite group by its Cayley table; table[a][b] is the index of a*b.
struct GroupPresentation {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> cayley;
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;
  std::vector<std::string> labels;
  std::string name = "G";

  /// Validates the table (closure, associativity, identity, inverses).
  static GroupPresentation from_table(std::vector<std::vector<std::size_t>> table,
                                      std::vector<std::string> labels = {}, std::string name = "G");
  static GroupPresentation cyclic(std::size_t m);
  /// S_n on {1..n}, elements in lexicographic order of their one-line notation.
  static GroupPresentation symmetric(std::size_t n);

  std::size_t element_order(std::size_t g) const;
  /// Least common multiple of the element orders.
  std::size_t exponent() const;
};

/// Homomorphisms G -> mu_n, each given by exponents e with chi(g) = zeta_n^{e[g]}.
std::vector<std::vector<long>> linear_characters(const GroupPresentation& g, int n);

/// kG with Delta(g) = g (x) g and S(g) = g^-1; conductor defaults to exp(G).
HopfAlgebra group_algebra(const GroupPresentation& g, int conductor = 0);
HopfAlgebra dual_group_algebra(const GroupPresentation& g, int conductor = 0);

/// The grouplike sum_g chi(g) delta_g of (kG)*.
Vec character_element(const GroupPresentation& g, const std::vector<long>& exponents, int conductor);

/// Basis {1, g, x, gx}: g^2 = 1, x^2 = 0, gx = -xg, Delta(x) = x (x) 1 + g (x) x.
HopfAlgebra sweedler();

/// k<g, x>/(g^{nd} - 1, x^d, gx - zeta xg) with zeta = zeta_d^zeta_exp,
/// Delta(x) = x (x) 1 + g (x) x. Basis g^i x^j at index j * nd + i; conductor nd.
HopfAlgebra generalized_taft(unsigned n, unsigned d, long zeta_exp);
/// Taft algebra of dimension n^2.
HopfAlgebra taft(unsigned n, long zeta_exp);

/// F = sum_{a,b} zeta_m^{c a b} e_a (x) e_b over the idempotents of k<g>.
Vec bicharacter_twist(const HopfAlgebra& h, const Vec& g, unsigned m, long c);

/// (u (x) u) F Delta(u)^-1 for a unit u with eps(u) = 1.
Vec conjugate_twist(const HopfAlgebra& h, const Vec& f, const Vec& u);

/// H x| Z/N with the generator acting by S^2; basis b_i (x) x^j at index i * N + j.
HopfAlgebra pivotalization(const HopfAlgebra& h, unsigned n);

/// The element 1 (x) x^j of pivotalization(h, n).
Vec pivot_generator(const HopfAlgebra& h, unsigned n, unsigned j = 1);
/// The element a (x) 1 of pivotalization(h, n).
Vec pivot_embed(const HopfAlgebra& h, unsigned n, const Vec& a);

}  // namespace hopf
