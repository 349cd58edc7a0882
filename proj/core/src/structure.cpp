#include "hopf/structure.hpp"

namespace hopf {

IntegralPair integrals(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  const int n = h.conductor();

  // h L = eps(h) L for every basis h.
  Mat left(d * d, d, n);
  for (std::size_t i = 0; i < d; ++i) {
    const Mat l = h.left_mult(h.basis(i));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        CycNum v = l(r, c);
        if (r == c) v -= h.counit()[i];
        left(i * d + r, c) = std::move(v);
      }
  }
  auto lambda_space = nullspace(left);
  if (lambda_space.size() != 1)
    throw IntegralError("space of left integrals has dimension " + std::to_string(lambda_space.size()));

  // l(h_1) h_2 = l(h) 1 for every basis h.
  Mat right(d * d, d, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& t : h.coproduct_terms(i)) right(i * d + t.k, t.j) += t.coef;
    for (std::size_t k = 0; k < d; ++k)
      if (!h.unit()[k].is_zero()) right(i * d + k, i) -= h.unit()[k];
  }
  auto co_space = nullspace(right);
  if (co_space.size() != 1)
    throw IntegralError("space of right integrals of the dual has dimension " + std::to_string(co_space.size()));

  IntegralPair ip{std::move(lambda_space.front()), std::move(co_space.front())};
  CycNum pairing = CycNum::zero(n);
  for (std::size_t i = 0; i < d; ++i) pairing.add_product(ip.right_cointegral[i], ip.left_integral[i]);
  if (pairing.is_zero()) throw IntegralError("integral pairing vanishes");
  ip.right_cointegral = scale(ip.right_cointegral, pairing.inverse());
  return ip;
}

CycNum radford_trace(const HopfAlgebra& h, const IntegralPair& ip, const Mat& t) {
  const std::size_t d = h.dim();
  const int n = h.conductor();
  if (t.rows() != d || t.cols() != d) throw ShapeError("radford_trace: operator shape mismatch");
  const Vec& lam = ip.right_cointegral;

  // pair(r, m) = l(b_r b_m)
  Mat pair(d, d, n);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t m = 0; m < d; ++m)
      for (const auto& u : h.product_terms(r, m)) pair(r, m).add_product(u.coef, lam[u.k]);
  // sp(k, m) = l(S(b_k) b_m)
  const Mat sp = h.antipode().transpose() * pair;

  const Vec delta = h.coproduct(ip.left_integral);
  CycNum result = CycNum::zero(n);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const CycNum& coef = delta[j * d + k];
      if (coef.is_zero()) continue;
      // l(S(b_k) T(b_j))
      CycNum val = CycNum::zero(n);
      for (std::size_t m = 0; m < d; ++m)
        if (!t(m, j).is_zero()) val.add_product(t(m, j), sp(k, m));
      result.add_product(coef, val);
    }
  return result;
}

bool integral_identity_check(const HopfAlgebra& h, const Vec& left_integral) {
  const Vec delta = h.coproduct(left_integral);
  for (std::size_t a = 0; a < h.dim(); ++a) {
    const Vec lhs = h.tensor_multiply(tensor_product(h.one(), h.basis(a)), delta, 2);
    const Vec rhs = h.tensor_multiply(tensor_product(h.apply_antipode(h.basis(a)), h.one()), delta, 2);
    if (lhs != rhs) return false;
  }
  return true;
}

bool RadicalData::contains(const Vec& x) const { return hopf::is_zero(projection * x); }

namespace {

std::vector<Vec> span_basis(std::vector<Vec> vecs) {
  if (vecs.empty()) return vecs;
  const std::size_t n = vecs.front().size();
  const auto pivots = row_reduce(vecs, n);
  vecs.resize(pivots.size());
  return vecs;
}

}  // namespace

RadicalData subspace_data(const HopfAlgebra& h, std::vector<Vec> basis) {
  const std::size_t d = h.dim();
  const int n = h.conductor();
  RadicalData rad;
  rad.radical_basis = std::move(basis);

  std::vector<Vec> cols = rad.radical_basis;
  for (std::size_t i = 0; i < d && cols.size() < d; ++i) {
    Vec e = h.basis(i);
    if (!in_span(cols, e, d, n)) {
      cols.push_back(std::move(e));
      rad.complement.push_back(i);
    }
  }
  const Mat change = inverse(Mat::from_columns(cols, d, n));
  const std::size_t jdim = rad.radical_basis.size();
  rad.projection = Mat(d - jdim, d, n);
  for (std::size_t r = jdim; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) rad.projection(r - jdim, c) = change(r, c);
  return rad;
}

RadicalData jacobson_radical(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  const int n = h.conductor();

  Vec traces = h.zero();  // Tr(l(b_p))
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (const auto& t : h.product_terms(p, q))
        if (t.k == q) traces[p] += t.coef;
  Mat gram(d, d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : h.product_terms(i, j)) gram(i, j).add_product(t.coef, traces[t.k]);

  RadicalData rad = subspace_data(h, nullspace(gram));

  for (const auto& r : rad.radical_basis)
    for (std::size_t i = 0; i < d; ++i)
      if (!rad.contains(h.multiply(h.basis(i), r)) || !rad.contains(h.multiply(r, h.basis(i))))
        throw RadicalVerificationError("trace-form kernel is not a two-sided ideal");

  std::vector<Vec> level = rad.radical_basis;
  for (std::size_t step = 1; !level.empty(); ++step) {
    if (step > d) throw RadicalVerificationError("trace-form kernel is not nilpotent");
    std::vector<Vec> products;
    for (const auto& p : level)
      for (const auto& r : rad.radical_basis) products.push_back(h.multiply(p, r));
    level = span_basis(std::move(products));
  }
  return rad;
}

ChevalleyResult is_chevalley(const HopfAlgebra& h) { return is_chevalley(h, jacobson_radical(h)); }

ChevalleyResult is_chevalley(const HopfAlgebra& h, RadicalData radical) {
  ChevalleyResult res;
  res.radical = std::move(radical);
  RadicalData& rad = res.radical;
  const Mat& pi = rad.projection;

  for (const auto& r : rad.radical_basis) {
    if (!h.epsilon(r).is_zero()) {
      res.failure = "counit";
      return res;
    }
    if (!rad.contains(h.apply_antipode(r))) {
      res.failure = "antipode";
      return res;
    }
    if (!is_zero(apply_factorwise(pi, pi, h.coproduct(r)))) {
      res.failure = "coproduct";
      return res;
    }
  }

  const std::size_t d = h.dim();
  const std::size_t q = rad.complement.size();
  const int n = h.conductor();
  Tensor3 mult(q, n), comult(q, n);
  Vec unit = pi * h.one();
  Vec counit = zero_vec(q, n);
  Mat lift(d, q, n);
  for (std::size_t a = 0; a < q; ++a) lift(rad.complement[a], a) = CycNum::one(n);
  for (std::size_t a = 0; a < q; ++a) {
    const std::size_t ia = rad.complement[a];
    counit[a] = h.counit()[ia];
    const Vec dbar = apply_factorwise(pi, pi, h.coproduct(h.basis(ia)));
    for (std::size_t b = 0; b < q; ++b) {
      const Vec prod = pi * h.multiply(h.basis(ia), h.basis(rad.complement[b]));
      for (std::size_t c = 0; c < q; ++c) {
        mult(a, b, c) = prod[c];
        comult(a, b, c) = dbar[b * q + c];
      }
    }
  }
  std::vector<std::string> labels;
  if (!h.labels().empty())
    for (std::size_t i : rad.complement) labels.push_back(h.labels()[i]);
  HopfAlgebra quotient(h.name() + "/J", n, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                       pi * h.antipode() * lift, std::move(labels));
  if (!verify_hopf(quotient, true).all_passed()) {
    res.failure = "quotient_axioms";
    return res;
  }
  rad.quotient = std::move(quotient);
  res.chevalley = true;
  return res;
}

bool nilpotent_composite_check(const HopfAlgebra& h, const RadicalData& rad, const Vec& x, const Vec& a,
                               const Mat& t, Side side) {
  if (!rad.contains(x)) throw NotInRadical("element is not in the Jacobson radical");
  const Mat composite = side == Side::left ? h.left_mult(x) * h.right_mult(a) * t : h.left_mult(a) * h.right_mult(x) * t;
  return is_nilpotent(composite);
}

}  // namespace hopf
