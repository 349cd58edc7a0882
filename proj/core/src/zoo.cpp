#include "hopf/zoo.hpp"

#include "hopf/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hopf {

GroupPresentation GroupPresentation::from_table(std::vector<std::vector<std::size_t>> table,
                                                std::vector<std::string> labels, std::string name) {
  const std::size_t m = table.size();
  if (m == 0) throw GroupError("group must be nonempty");
  for (const auto& row : table) {
    if (row.size() != m) throw GroupError("Cayley table is not square");
    for (std::size_t x : row)
      if (x >= m) throw GroupError("Cayley table entry out of range");
  }
  if (!labels.empty() && labels.size() != m) throw GroupError("label count differs from group order");

  GroupPresentation g;
  g.order = m;
  g.cayley = std::move(table);
  g.labels = std::move(labels);
  g.name = std::move(name);

  auto is_identity = [&](std::size_t e) {
    for (std::size_t a = 0; a < m; ++a)
      if (g.cayley[e][a] != a || g.cayley[a][e] != a) return false;
    return true;
  };
  std::size_t e = 0;
  while (e < m && !is_identity(e)) ++e;
  if (e == m) throw GroupError("Cayley table has no identity");
  g.identity = e;

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (g.cayley[g.cayley[a][b]][c] != g.cayley[a][g.cayley[b][c]])
          throw GroupError("Cayley table is not associative");

  g.inverse.assign(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      if (g.cayley[a][b] == e && g.cayley[b][a] == e) {
        g.inverse[a] = b;
        break;
      }
    if (g.inverse[a] == m) throw GroupError("element without inverse");
  }
  return g;
}

GroupPresentation GroupPresentation::cyclic(std::size_t m) {
  if (m == 0) throw GroupError("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (std::size_t b = 0; b < m; ++b) table[a][b] = (a + b) % m;
  }
  return from_table(std::move(table), std::move(labels), "Z" + std::to_string(m));
}

GroupPresentation GroupPresentation::symmetric(std::size_t n) {
  if (n == 0 || n > 6) throw GroupError("symmetric group degree must be in 1..6");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    std::string l;
    for (std::size_t i : perms[a]) l += std::to_string(i + 1);
    labels.push_back(l);
    for (std::size_t b = 0; b < m; ++b) {
      // (ab)(i) = a(b(i))
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return from_table(std::move(table), std::move(labels), "S" + std::to_string(n));
}

std::size_t GroupPresentation::element_order(std::size_t g) const {
  std::size_t k = 1;
  for (std::size_t x = g; x != identity; x = cayley[x][g]) ++k;
  return k;
}

std::size_t GroupPresentation::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::vector<std::vector<long>> linear_characters(const GroupPresentation& g, int n) {
  const std::size_t m = g.order;
  // Greedy generating set.
  std::vector<std::size_t> gens;
  std::vector<bool> reached(m, false);
  auto close = [&] {
    std::fill(reached.begin(), reached.end(), false);
    std::deque<std::size_t> queue{g.identity};
    reached[g.identity] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t s : gens)
        if (const std::size_t y = g.cayley[x][s]; !reached[y]) {
          reached[y] = true;
          queue.push_back(y);
        }
    }
  };
  close();
  for (std::size_t a = 0; a < m; ++a)
    if (!reached[a]) {
      gens.push_back(a);
      close();
    }

  std::vector<std::vector<long>> chars;
  std::vector<long> assign(gens.size(), 0);
  while (true) {
    std::vector<long> val(m, -1);
    val[g.identity] = 0;
    std::deque<std::size_t> queue{g.identity};
    bool ok = true;
    while (!queue.empty() && ok) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const std::size_t y = g.cayley[x][gens[s]];
        const long v = (val[x] + assign[s]) % n;
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b)
        if (val[g.cayley[a][b]] != (val[a] + val[b]) % n) ok = false;
    if (ok) chars.push_back(val);

    std::size_t pos = 0;
    while (pos < assign.size() && ++assign[pos] == n) assign[pos++] = 0;
    if (pos == assign.size()) break;
  }
  return chars;
}

HopfAlgebra group_algebra(const GroupPresentation& g, int conductor) {
  if (conductor == 0) conductor = static_cast<int>(g.exponent());
  const std::size_t m = g.order;
  Tensor3 mult(m, conductor), comult(m, conductor);
  Mat s(m, m, conductor);
  Vec counit(m, CycNum::one(conductor));
  for (std::size_t a = 0; a < m; ++a) {
    comult(a, a, a) = CycNum::one(conductor);
    s(g.inverse[a], a) = CycNum::one(conductor);
    for (std::size_t b = 0; b < m; ++b) mult(a, b, g.cayley[a][b]) = CycNum::one(conductor);
  }
  return HopfAlgebra("k" + g.name, conductor, std::move(mult), unit_vec(m, g.identity, conductor), std::move(comult),
                     std::move(counit), std::move(s), g.labels);
}

HopfAlgebra dual_group_algebra(const GroupPresentation& g, int conductor) {
  auto h = dual_hopf(group_algebra(g, conductor));
  return h.with_name("dual-k" + g.name);
}

Vec character_element(const GroupPresentation& g, const std::vector<long>& exponents, int conductor) {
  if (exponents.size() != g.order) throw GroupError("character has wrong length");
  Vec v;
  for (long e : exponents) v.push_back(CycNum::zeta(conductor, e));
  return v;
}

HopfAlgebra sweedler() {
  constexpr int n = 2;
  const std::size_t d = 4;
  enum : std::size_t { one = 0, g = 1, x = 2, gx = 3 };
  Tensor3 m(d, n);
  const CycNum p1(1, n), m1(-1, n);
  m(one, one, one) = p1;
  m(one, g, g) = p1;
  m(one, x, x) = p1;
  m(one, gx, gx) = p1;
  m(g, one, g) = p1;
  m(g, g, one) = p1;
  m(g, x, gx) = p1;
  m(g, gx, x) = p1;
  m(x, one, x) = p1;
  m(x, g, gx) = m1;
  m(gx, one, gx) = p1;
  m(gx, g, x) = m1;

  Tensor3 c(d, n);
  c(one, one, one) = p1;
  c(g, g, g) = p1;
  c(x, x, one) = p1;
  c(x, g, x) = p1;
  c(gx, gx, g) = p1;
  c(gx, one, gx) = p1;

  Vec counit{p1, p1, CycNum::zero(n), CycNum::zero(n)};
  Mat s(d, d, n);
  s(one, one) = p1;
  s(g, g) = p1;
  s(gx, x) = m1;
  s(x, gx) = p1;
  return HopfAlgebra("sweedler", n, std::move(m), unit_vec(d, one, n), std::move(c), std::move(counit), std::move(s),
                     {"1", "g", "x", "gx"});
}

namespace {

std::string monomial_label(std::size_t i, std::size_t j) {
  std::string l;
  if (i == 1) l += "g";
  if (i > 1) l += "g^" + std::to_string(i);
  if (j == 1) l += "x";
  if (j > 1) l += "x^" + std::to_string(j);
  return l.empty() ? "1" : l;
}

}  // namespace

HopfAlgebra generalized_taft(unsigned n, unsigned d, long zeta_exp) {
  if (n == 0 || d == 0) throw std::invalid_argument("generalized_taft: n and d must be positive");
  if (gcd(((zeta_exp % static_cast<long>(d)) + d) % d, d) != 1)
    throw std::invalid_argument("generalized_taft: zeta exponent must be coprime to d");
  const std::size_t order = static_cast<std::size_t>(n) * d;  // |<g>|
  const std::size_t dim = order * d;
  const int cond = static_cast<int>(order);
  auto idx = [&](std::size_t i, std::size_t j) { return j * order + i; };

  // x g = zeta^-1 g x, so x^j g^k = zeta^{-jk} g^k x^j with zeta = zeta_nd^{n e}.
  Tensor3 mult(dim, cond);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < order; ++k)
        for (std::size_t l = 0; j + l < d; ++l) {
          const long e = -static_cast<long>(n) * zeta_exp * static_cast<long>(j * k);
          mult(idx(i, j), idx(k, l), idx((i + k) % order, j + l)) = CycNum::zeta(cond, e);
        }
  Vec unit = unit_vec(dim, idx(0, 0), cond);
  Vec counit = zero_vec(dim, cond);
  for (std::size_t i = 0; i < order; ++i) counit[idx(i, 0)] = CycNum::one(cond);

  // Provisional algebra for products in H and H (x) H.
  const HopfAlgebra alg("provisional", cond, mult, unit, Tensor3(dim, cond), counit, Mat(dim, dim, cond));
  const Vec g = alg.basis(idx(1 % order, 0));
  const Vec x = d > 1 ? alg.basis(idx(0, 1)) : alg.zero();
  const Vec g_inv = alg.basis(idx(order - 1, 0));
  const Vec dg = tensor_product(g, g);
  const Vec dx = tensor_product(x, unit) + tensor_product(g, x);
  const Vec sg = g_inv;
  const Vec sx = scale(alg.multiply(g_inv, x), CycNum(-1, cond));

  Tensor3 comult(dim, cond);
  Mat s(dim, dim, cond);
  std::vector<std::string> labels(dim);
  Vec dgi = alg.tensor_one(2);
  Vec sgi = unit;
  for (std::size_t i = 0; i < order; ++i) {
    Vec dcur = dgi;
    Vec sxj = unit;  // S(x)^j
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t b = idx(i, j);
      labels[b] = monomial_label(i, j);
      for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q) comult(b, p, q) = dcur[p * dim + q];
      // S(g^i x^j) = S(x)^j S(g)^i
      const Vec sb = alg.multiply(sxj, sgi);
      for (std::size_t r = 0; r < dim; ++r) s(r, b) = sb[r];
      dcur = alg.tensor_multiply(dcur, dx, 2);
      sxj = alg.multiply(sxj, sx);
    }
    dgi = alg.tensor_multiply(dgi, dg, 2);
    sgi = alg.multiply(sgi, sg);
  }

  std::string name = n == 1 ? "taft(" + std::to_string(d) + ")"
                            : "gtaft(" + std::to_string(n) + "," + std::to_string(d) + ")";
  if (zeta_exp != 1) name += "[zeta^" + std::to_string(zeta_exp) + "]";
  HopfAlgebra h(name, cond, std::move(mult), std::move(unit), std::move(comult), std::move(counit), std::move(s),
                std::move(labels));
  if (!verify_hopf(h, true).all_passed()) throw std::logic_error("generalized Taft construction fails the axioms");
  return h;
}

HopfAlgebra taft(unsigned n, long zeta_exp) { return generalized_taft(1, n, zeta_exp); }

Vec bicharacter_twist(const HopfAlgebra& h, const Vec& g, unsigned m, long c) {
  const int cond = h.conductor();
  if (m == 0) throw std::invalid_argument("bicharacter_twist: order must be positive");
  if (cond % static_cast<int>(m) != 0)
    throw ConductorError("bicharacter_twist: conductor " + std::to_string(cond) + " is not divisible by " +
                         std::to_string(m));
  if (h.coproduct(g) != tensor_product(g, g) || !h.epsilon(g).is_one())
    throw std::invalid_argument("bicharacter_twist: element is not grouplike");
  std::vector<Vec> pows{h.one()};
  for (unsigned b = 1; b <= m; ++b) pows.push_back(h.multiply(pows.back(), g));
  if (pows[m] != h.one()) throw std::invalid_argument("bicharacter_twist: g^m != 1");
  for (unsigned b = 1; b < m; ++b)
    if (pows[b] == h.one()) throw std::invalid_argument("bicharacter_twist: g has order smaller than m");

  const int step = cond / static_cast<int>(m);  // zeta_m = zeta_cond^step
  const CycNum inv_m(make_rational(1, m), cond);
  std::vector<Vec> idem;
  for (unsigned a = 0; a < m; ++a) {
    Vec e = h.zero();
    for (unsigned b = 0; b < m; ++b)
      e = e + scale(pows[b], CycNum::zeta(cond, -static_cast<long>(step) * a * b));
    idem.push_back(scale(e, inv_m));
  }
  Vec f = zero_vec(h.dim() * h.dim(), cond);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) {
      const long e = static_cast<long>(step) * (((c % static_cast<long>(m)) * a * b) % m);
      f = f + scale(tensor_product(idem[a], idem[b]), CycNum::zeta(cond, e));
    }
  return f;
}

Vec conjugate_twist(const HopfAlgebra& h, const Vec& f, const Vec& u) {
  if (!h.epsilon(u).is_one()) throw std::invalid_argument("conjugate_twist: eps(u) must be 1");
  const auto u_inv = h.inverse_element(u);
  if (!u_inv) throw std::invalid_argument("conjugate_twist: u is not a unit");
  return h.tensor_multiply(h.tensor_multiply(tensor_product(u, u), f, 2), h.coproduct(*u_inv), 2);
}

HopfAlgebra pivotalization(const HopfAlgebra& h, unsigned n) {
  if (n == 0) throw std::invalid_argument("pivotalization: N must be positive");
  const Mat s2 = h.antipode() * h.antipode();
  if (!power(s2, n).is_identity()) throw std::invalid_argument("pivotalization: ord(S^2) must divide N");
  const std::size_t d = h.dim();
  const std::size_t dim = d * n;
  const int cond = h.conductor();
  auto idx = [&](std::size_t i, std::size_t j) { return i * n + j; };

  std::vector<Mat> s2pow{Mat::identity(d, cond)};
  for (unsigned a = 1; a < n; ++a) s2pow.push_back(s2pow.back() * s2);

  Tensor3 mult(dim, cond), comult(dim, cond);
  Mat s(dim, dim, cond);
  Vec unit = zero_vec(dim, cond), counit = zero_vec(dim, cond);
  std::vector<std::string> labels(dim);
  for (std::size_t i = 0; i < d; ++i) {
    unit[idx(i, 0)] = h.unit()[i];
    for (unsigned a = 0; a < n; ++a) counit[idx(i, a)] = h.counit()[i];
  }
  for (std::size_t i = 0; i < d; ++i)
    for (unsigned a = 0; a < n; ++a) {
      const std::string base = h.labels().empty() ? "b" + std::to_string(i) : h.labels()[i];
      labels[idx(i, a)] = a == 0 ? base : base + "|x" + (a == 1 ? "" : "^" + std::to_string(a));
      // (b_i (x) x^a)(b_j (x) x^b) = b_i S^{2a}(b_j) (x) x^{a+b}
      for (std::size_t j = 0; j < d; ++j) {
        const Vec prod = h.multiply(h.basis(i), s2pow[a].column(j));
        for (unsigned b = 0; b < n; ++b)
          for (std::size_t k = 0; k < d; ++k)
            if (!prod[k].is_zero()) mult(idx(i, a), idx(j, b), idx(k, (a + b) % n)) = prod[k];
      }
      for (const auto& t : h.coproduct_terms(i)) comult(idx(i, a), idx(t.j, a), idx(t.k, a)) = t.coef;
      // S(b_i (x) x^a) = S^{-2a}(S(b_i)) (x) x^{-a}
      const unsigned back = (n - a) % n;
      const Vec sb = s2pow[back] * h.antipode().column(i);
      for (std::size_t k = 0; k < d; ++k) s(idx(k, back), idx(i, a)) = sb[k];
    }
  HopfAlgebra piv(h.name() + "^piv" + std::to_string(n), cond, std::move(mult), std::move(unit), std::move(comult),
                  std::move(counit), std::move(s), std::move(labels));
  return piv;
}

Vec pivot_generator(const HopfAlgebra& h, unsigned n, unsigned j) {
  Vec v = zero_vec(h.dim() * n, h.conductor());
  for (std::size_t i = 0; i < h.dim(); ++i) v[i * n + (j % n)] = h.unit()[i];
  return v;
}

Vec pivot_embed(const HopfAlgebra& h, unsigned n, const Vec& a) {
  Vec v = zero_vec(h.dim() * n, h.conductor());
  for (std::size_t i = 0; i < h.dim(); ++i) v[i * n] = a[i];
  return v;
}

}  // namespace hopf
