#include "hopf/hopf_algebra.hpp"

#include <stdexcept>

namespace hopf {

namespace {

CycNum lift_to(const CycNum& x, int conductor) {
  if (x.conductor() == conductor) return x;
  if (conductor % x.conductor() != 0)
    throw ConductorError("structure constant with conductor " + std::to_string(x.conductor()) +
                         " does not live in Q(zeta_" + std::to_string(conductor) + ")");
  return x.lifted(conductor);
}

std::vector<std::size_t> support(const Vec& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back(i);
  return s;
}

std::size_t ipow(std::size_t base, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

HopfAlgebra::HopfAlgebra(std::string name, int conductor, Tensor3 mult, Vec unit, Tensor3 comult, Vec counit,
                         Mat antipode, std::vector<std::string> labels)
    : name_(std::move(name)),
      conductor_(conductor),
      dim_(mult.dim()),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      labels_(std::move(labels)) {
  if (conductor_ < 1) throw ConductorError("conductor must be positive");
  const std::size_t d = dim_;
  if (d == 0) throw ShapeError("Hopf algebra must have positive dimension");
  if (comult_.dim() != d || unit_.size() != d || counit_.size() != d || antipode_.rows() != d ||
      antipode_.cols() != d)
    throw ShapeError("structure tensors have inconsistent dimensions");
  if (!labels_.empty() && labels_.size() != d) throw ShapeError("basis label count differs from dimension");

  for (std::size_t idx = 0; idx < mult_.size(); ++idx) mult_.flat(idx) = lift_to(mult_.data()[idx], conductor_);
  for (std::size_t idx = 0; idx < comult_.size(); ++idx)
    comult_.flat(idx) = lift_to(comult_.data()[idx], conductor_);
  for (auto& x : unit_) x = lift_to(x, conductor_);
  for (auto& x : counit_) x = lift_to(x, conductor_);
  Mat s(d, d, conductor_);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) s(r, c) = lift_to(antipode_(r, c), conductor_);
  antipode_ = std::move(s);

  product_terms_.resize(d * d);
  coproduct_terms_.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (const CycNum& m = mult_(i, j, k); !m.is_zero()) product_terms_[i * d + j].push_back({k, m});
        if (const CycNum& c = comult_(i, j, k); !c.is_zero()) coproduct_terms_[i].push_back({j, k, c});
      }
}

HopfAlgebra HopfAlgebra::with_name(std::string name) const {
  HopfAlgebra h = *this;
  h.name_ = std::move(name);
  return h;
}

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw ShapeError("multiply: element length mismatch");
  Vec out = zero();
  const auto sb = support(b);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j : sb) {
      const CycNum ab = a[i] * b[j];
      for (const auto& t : product_terms(i, j)) out[t.k].add_product(ab, t.coef);
    }
  }
  return out;
}

CycNum HopfAlgebra::epsilon(const Vec& a) const {
  CycNum e = CycNum::zero(conductor_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!a[i].is_zero() && !counit_[i].is_zero()) e.add_product(a[i], counit_[i]);
  return e;
}

Vec HopfAlgebra::coproduct(const Vec& a) const {
  if (a.size() != dim_) throw ShapeError("coproduct: element length mismatch");
  Vec out = zero_vec(dim_ * dim_, conductor_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : coproduct_terms(i)) out[t.j * dim_ + t.k].add_product(a[i], t.coef);
  }
  return out;
}

Mat HopfAlgebra::left_mult(const Vec& a) const {
  Mat m(dim_, dim_, conductor_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product_terms(i, j)) m(t.k, j).add_product(a[i], t.coef);
  }
  return m;
}

Mat HopfAlgebra::right_mult(const Vec& a) const {
  Mat m(dim_, dim_, conductor_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product_terms(j, i)) m(t.k, j).add_product(a[i], t.coef);
  }
  return m;
}

Vec HopfAlgebra::tensor_multiply(const Vec& x, const Vec& y, unsigned factors) const {
  const std::size_t n = ipow(dim_, factors);
  if (x.size() != n || y.size() != n) throw ShapeError("tensor_multiply: element length mismatch");
  Vec out = zero_vec(n, conductor_);
  const auto sx = support(x);
  const auto sy = support(y);
  std::vector<std::size_t> dx(factors), dy(factors);
  struct Partial {
    std::size_t index;
    CycNum coef;
  };
  std::vector<Partial> cur, next;
  for (std::size_t ix : sx) {
    for (std::size_t f = factors, v = ix; f-- > 0; v /= dim_) dx[f] = v % dim_;
    for (std::size_t iy : sy) {
      for (std::size_t f = factors, v = iy; f-- > 0; v /= dim_) dy[f] = v % dim_;
      cur.clear();
      cur.push_back({0, x[ix] * y[iy]});
      for (unsigned f = 0; f < factors && !cur.empty(); ++f) {
        const auto& terms = product_terms(dx[f], dy[f]);
        next.clear();
        for (const auto& p : cur)
          for (const auto& t : terms) next.push_back({p.index * dim_ + t.k, p.coef * t.coef});
        std::swap(cur, next);
      }
      for (const auto& p : cur) out[p.index] += p.coef;
    }
  }
  return out;
}

Vec HopfAlgebra::tensor_one(unsigned factors) const {
  Vec v = unit_;
  for (unsigned f = 1; f < factors; ++f) v = tensor_product(v, unit_);
  return v;
}

Mat HopfAlgebra::left_mult_tensor(const Vec& x) const {
  const std::size_t n = dim_ * dim_;
  if (x.size() != n) throw ShapeError("left_mult_tensor: element length mismatch");
  Mat m(n, n, conductor_);
  const auto sx = support(x);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t k = col / dim_, l = col % dim_;
    for (std::size_t ix : sx) {
      const std::size_t i = ix / dim_, j = ix % dim_;
      for (const auto& t1 : product_terms(i, k)) {
        const CycNum c1 = x[ix] * t1.coef;
        for (const auto& t2 : product_terms(j, l)) m(t1.k * dim_ + t2.k, col).add_product(c1, t2.coef);
      }
    }
  }
  return m;
}

std::optional<Vec> HopfAlgebra::inverse_element(const Vec& a) const {
  auto sol = solve(left_mult(a), unit_);
  if (!sol || !sol->nullspace.empty()) return std::nullopt;
  return sol->particular;
}

Vec tensor_product(const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x.is_zero() || y.is_zero() ? CycNum::zero(x.conductor()) : x * y);
  return out;
}

Vec apply_factorwise(const Mat& a, const Mat& b, const Vec& x) {
  const std::size_t n = a.cols(), m = b.cols();
  if (x.size() != n * m) throw ShapeError("apply_factorwise: element length mismatch");
  const int cond = static_cast<int>(lcm(a.conductor(), b.conductor()));
  // (A (x) B) X = A X B^T with X viewed as an n x m matrix.
  Mat xm(n, m, cond);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) xm(i, j) = x[i * m + j];
  const Mat y = a * xm * b.transpose();
  Vec out;
  out.reserve(a.rows() * b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) out.push_back(y(i, j));
  return out;
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck& AxiomReport::at(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no axiom named " + name);
}

namespace {

class Verifier {
 public:
  explicit Verifier(const HopfAlgebra& h) : h_(h), d_(h.dim()) {}

  AxiomCheck associativity() const {
    AxiomCheck c{"associativity", true, std::nullopt};
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        for (std::size_t k = 0; k < d_; ++k) {
          Vec left = h_.zero(), right = h_.zero();
          for (const auto& t : h_.product_terms(i, j))
            for (const auto& u : h_.product_terms(t.k, k)) left[u.k].add_product(t.coef, u.coef);
          for (const auto& t : h_.product_terms(j, k))
            for (const auto& u : h_.product_terms(i, t.k)) right[u.k].add_product(t.coef, u.coef);
          if (left != right) return fail(c, {i, j, k});
        }
    return c;
  }

  AxiomCheck unit() const {
    AxiomCheck c{"unit", true, std::nullopt};
    for (std::size_t i = 0; i < d_; ++i) {
      if (h_.multiply(h_.unit(), h_.basis(i)) != h_.basis(i)) return fail(c, {i, 0, 0});
      if (h_.multiply(h_.basis(i), h_.unit()) != h_.basis(i)) return fail(c, {i, 1, 0});
    }
    return c;
  }

  AxiomCheck coassociativity() const {
    AxiomCheck c{"coassociativity", true, std::nullopt};
    const std::size_t d2 = d_ * d_;
    for (std::size_t i = 0; i < d_; ++i) {
      Vec left = zero_vec(d2 * d_, h_.conductor()), right = left;
      for (const auto& t : h_.coproduct_terms(i)) {
        for (const auto& u : h_.coproduct_terms(t.j)) left[(u.j * d_ + u.k) * d_ + t.k].add_product(t.coef, u.coef);
        for (const auto& u : h_.coproduct_terms(t.k)) right[t.j * d2 + u.j * d_ + u.k].add_product(t.coef, u.coef);
      }
      for (std::size_t p = 0; p < left.size(); ++p)
        if (left[p] != right[p]) return fail(c, {i, p, 0});
    }
    return c;
  }

  AxiomCheck counit() const {
    AxiomCheck c{"counit", true, std::nullopt};
    for (std::size_t i = 0; i < d_; ++i) {
      Vec left = h_.zero(), right = h_.zero();
      for (const auto& t : h_.coproduct_terms(i)) {
        left[t.k].add_product(h_.counit()[t.j], t.coef);
        right[t.j].add_product(h_.counit()[t.k], t.coef);
      }
      if (left != h_.basis(i)) return fail(c, {i, 0, 0});
      if (right != h_.basis(i)) return fail(c, {i, 1, 0});
    }
    return c;
  }

  AxiomCheck bialgebra() const {
    AxiomCheck c{"bialgebra", true, std::nullopt};
    const unsigned two = 2;
    std::vector<Vec> deltas;
    deltas.reserve(d_);
    for (std::size_t i = 0; i < d_; ++i) deltas.push_back(h_.coproduct(h_.basis(i)));
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) {
        Vec prod = h_.zero();
        for (const auto& t : h_.product_terms(i, j)) prod[t.k] = t.coef;
        if (h_.coproduct(prod) != h_.tensor_multiply(deltas[i], deltas[j], two)) return fail(c, {i, j, 0});
        if (h_.epsilon(prod) != h_.counit()[i] * h_.counit()[j]) return fail(c, {i, j, 1});
      }
    if (h_.coproduct(h_.unit()) != h_.tensor_one(2)) return fail(c, {0, 0, 2});
    if (!h_.epsilon(h_.unit()).is_one()) return fail(c, {0, 0, 3});
    return c;
  }

  AxiomCheck antipode() const {
    AxiomCheck c{"antipode", true, std::nullopt};
    const Mat& s = h_.antipode();
    for (std::size_t i = 0; i < d_; ++i) {
      Vec left = h_.zero(), right = h_.zero();
      for (const auto& t : h_.coproduct_terms(i)) {
        // S(b_j) b_k and b_j S(b_k)
        for (std::size_t r = 0; r < d_; ++r) {
          if (const CycNum& sj = s(r, t.j); !sj.is_zero()) {
            const CycNum w = sj * t.coef;
            for (const auto& u : h_.product_terms(r, t.k)) left[u.k].add_product(w, u.coef);
          }
          if (const CycNum& sk = s(r, t.k); !sk.is_zero()) {
            const CycNum w = sk * t.coef;
            for (const auto& u : h_.product_terms(t.j, r)) right[u.k].add_product(w, u.coef);
          }
        }
      }
      const Vec expected = scale(h_.unit(), h_.counit()[i]);
      if (left != expected) return fail(c, {i, 0, 0});
      if (right != expected) return fail(c, {i, 1, 0});
    }
    return c;
  }

  AxiomCheck antipode_invertible() const {
    AxiomCheck c{"antipode_invertible", true, std::nullopt};
    const std::size_t r = rank(h_.antipode());
    if (r != d_) return fail(c, {r, d_, 0});
    return c;
  }

 private:
  static AxiomCheck fail(AxiomCheck c, std::array<std::size_t, 3> w) {
    c.passed = false;
    c.witness = w;
    return c;
  }

  const HopfAlgebra& h_;
  std::size_t d_;
};

}  // namespace

AxiomReport verify_hopf(const HopfAlgebra& h, bool stop_at_first_failure) {
  Verifier v(h);
  AxiomReport report;
  using Fn = AxiomCheck (Verifier::*)() const;
  const Fn order[] = {&Verifier::unit,     &Verifier::counit,   &Verifier::associativity,
                      &Verifier::coassociativity, &Verifier::bialgebra, &Verifier::antipode,
                      &Verifier::antipode_invertible};
  for (Fn fn : order) {
    report.checks.push_back((v.*fn)());
    if (stop_at_first_failure && !report.checks.back().passed) break;
  }
  return report;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  const int n = h.conductor();
  Tensor3 mult(d, n), comult(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        // (f g)(h) = f(h_1) g(h_2);  Delta(f)(a (x) b) = f(ab)
        mult(i, j, k) = h.comult()(k, i, j);
        comult(k, i, j) = h.mult()(i, j, k);
      }
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back("d(" + l + ")");
  return HopfAlgebra("dual(" + h.name() + ")", n, std::move(mult), h.counit(), std::move(comult), h.unit(),
                     h.antipode().transpose(), std::move(labels));
}

}  // namespace hopf
