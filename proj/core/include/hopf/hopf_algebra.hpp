#pragma once

#include "hopf/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

/// b_i * b_j contains `coef` * b_k.
struct ProductTerm {
  std::size_t k;
  CycNum coef;
};

/// Delta(b_i) contains `coef` * b_j (x) b_k.
struct CoproductTerm {
  std::size_t j;
  std::size_t k;
  CycNum coef;
};

/// A finite-dimensional Hopf algebra given by structure constants in a fixed
/// basis b_0..b_{d-1}.
///
///   mult(i, j, k)   coefficient of b_k in b_i b_j
///   comult(i, j, k) coefficient of b_j (x) b_k in Delta(b_i)
///   antipode(r, c)  coefficient of b_r in S(b_c)
///
/// Elements of H^{(x) r} are flat vectors of length d^r with the first tensor
/// factor most significant (b_i (x) b_j sits at i * d + j).
///
/// Construction checks shapes only; axioms are checked by verify_hopf.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(std::string name, int conductor, Tensor3 mult, Vec unit, Tensor3 comult, Vec counit, Mat antipode,
              std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  int conductor() const { return conductor_; }
  std::size_t dim() const { return dim_; }
  const Tensor3& mult() const { return mult_; }
  const Vec& unit() const { return unit_; }
  const Tensor3& comult() const { return comult_; }
  const Vec& counit() const { return counit_; }
  const Mat& antipode() const { return antipode_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::vector<ProductTerm>& product_terms(std::size_t i, std::size_t j) const {
    return product_terms_[i * dim_ + j];
  }
  const std::vector<CoproductTerm>& coproduct_terms(std::size_t i) const { return coproduct_terms_[i]; }

  HopfAlgebra with_name(std::string name) const;

  Vec zero() const { return zero_vec(dim_, conductor_); }
  Vec basis(std::size_t i) const { return unit_vec(dim_, i, conductor_); }
  Vec one() const { return unit_; }

  Vec multiply(const Vec& a, const Vec& b) const;
  CycNum epsilon(const Vec& a) const;
  Vec coproduct(const Vec& a) const;
  Vec apply_antipode(const Vec& a) const { return antipode_ * a; }

  /// Matrices of x -> a x and x -> x a.
  Mat left_mult(const Vec& a) const;
  Mat right_mult(const Vec& a) const;

  /// Product in the algebra H^{(x) factors}.
  Vec tensor_multiply(const Vec& x, const Vec& y, unsigned factors) const;
  Vec tensor_one(unsigned factors) const;
  /// Matrix of left multiplication by X on H (x) H.
  Mat left_mult_tensor(const Vec& x) const;

  /// Two-sided inverse of a, if a is a unit.
  std::optional<Vec> inverse_element(const Vec& a) const;

 private:
  std::string name_;
  int conductor_ = 1;
  std::size_t dim_ = 0;
  Tensor3 mult_;
  Vec unit_;
  Tensor3 comult_;
  Vec counit_;
  Mat antipode_;
  std::vector<std::string> labels_;
  std::vector<std::vector<ProductTerm>> product_terms_;
  std::vector<std::vector<CoproductTerm>> coproduct_terms_;
};

/// a (x) b for vectors of any lengths.
Vec tensor_product(const Vec& a, const Vec& b);

/// (A (x) B) X for X in V (x) W, without forming the Kronecker matrix.
Vec apply_factorwise(const Mat& a, const Mat& b, const Vec& x);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  /// First failing index triple; meaning depends on the axiom (see verify_hopf).
  std::optional<std::array<std::size_t, 3>> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck& at(const std::string& name) const;
};

/// Checks every Hopf algebra axiom exactly. Witness triples:
///   associativity   (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k)
///   unit            (i, side, 0), side 0 for 1 * b_i, 1 for b_i * 1
///   coassociativity (i, flat index into H^{(x)3}, 0)
///   counit          (i, side, 0)
///   bialgebra       (i, j, kind): kind 0 Delta(b_i b_j), 1 eps(b_i b_j), 2 Delta(1), 3 eps(1)
///   antipode        (i, side, 0), side 0 for m(S (x) id)Delta
///   antipode_invertible (rank, dim, 0)
/// With `stop_at_first_failure`, remaining axioms are skipped once one fails.
AxiomReport verify_hopf(const HopfAlgebra& h, bool stop_at_first_failure = false);

/// The dual Hopf algebra H* in the dual basis.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

}  // namespace hopf
