#pragma once

#include <Eigen/Dense>

#include "gctk/matrix.hpp"
#include "gctk/multivector.hpp"

namespace gctk {

// Endomorphism of E = T + T* at a point, basis (d/dx^0..d/dx^{d-1}, dx^0..dx^{d-1}).
class GeneralizedEndomorphism {
 public:
  GeneralizedEndomorphism() = default;
  explicit GeneralizedEndomorphism(RMatrix m);
  static GeneralizedEndomorphism from_blocks(const RMatrix& a, const RMatrix& p, const RMatrix& q,
                                             const RMatrix& d);
  static GeneralizedEndomorphism identity(int dim);

  int dim() const { return dim_; }
  const RMatrix& matrix() const { return m_; }

  RMatrix A() const { return m_.block(0, 0, dim_, dim_); }
  RMatrix P() const { return m_.block(0, dim_, dim_, dim_); }
  RMatrix Q() const { return m_.block(dim_, 0, dim_, dim_); }
  RMatrix D() const { return m_.block(dim_, dim_, dim_, dim_); }

  friend GeneralizedEndomorphism operator*(const GeneralizedEndomorphism& a, const GeneralizedEndomorphism& b) {
    return GeneralizedEndomorphism(a.m_ * b.m_);
  }
  friend GeneralizedEndomorphism operator+(const GeneralizedEndomorphism& a, const GeneralizedEndomorphism& b) {
    return GeneralizedEndomorphism(a.m_ + b.m_);
  }
  friend GeneralizedEndomorphism operator-(const GeneralizedEndomorphism& a, const GeneralizedEndomorphism& b) {
    return GeneralizedEndomorphism(a.m_ - b.m_);
  }
  friend GeneralizedEndomorphism operator*(const Rational& s, const GeneralizedEndomorphism& a) {
    return GeneralizedEndomorphism(a.m_ * s);
  }
  GeneralizedEndomorphism operator-() const { return GeneralizedEndomorphism(-m_); }
  friend bool operator==(const GeneralizedEndomorphism& a, const GeneralizedEndomorphism& b) {
    return a.m_ == b.m_;
  }

 private:
  int dim_ = 0;
  RMatrix m_;
};

using GE = GeneralizedEndomorphism;

// Block direct sum; coordinates of `b` follow those of `a` in both T and T*.
GE direct_sum(const GE& a, const GE& b);

// Columns of a 2d x k complex matrix, each an element of E (x) C.
struct DiracBasis {
  int dim = 0;
  CMatrix vectors;

  int size() const { return static_cast<int>(vectors.cols()); }
};

// Gram matrix of <X+xi, Y+eta> = 1/2 (xi(Y) + eta(X)).
RMatrix pairing_matrix(int dim);

template <class S>
S inner_product(const EVector<S>& a, const EVector<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  S sum(0);
  for (int i = 0; i < a.dim(); ++i) sum += a.cotangent[i] * b.tangent[i] + b.cotangent[i] * a.tangent[i];
  return sum * Complex(Rational(1, 2));
}
Rational inner_product(const EVector<Rational>& a, const EVector<Rational>& b);

bool is_gacs(const GE& j);
bool is_gacs(const Eigen::MatrixXd& j, double tol);
Eigen::MatrixXd to_float(const RMatrix& m);

// Real 2-form <-> its map X -> i_X w, matrix entry (j, i) = w(e_i, e_j).
RMatrix two_form_matrix(const Form& w);
Form two_form(const RMatrix& map);
// Real and imaginary parts of a complex form.
Form real_part(const Form& w);
Form imag_part(const Form& w);

GE make_JI(const RMatrix& complex_structure);
GE make_Jomega(const RMatrix& omega);
// exp(B) = [[1, 0], [B, 1]]
GE bfield(const RMatrix& b);
// exp(-B) J exp(B)
GE bfield_transform(const GE& j, const RMatrix& b);

int type_of(const GE& j);
DiracBasis dirac_of(const GE& j);

bool is_isotropic(const DiracBasis& l);
bool same_span(const DiracBasis& a, const DiracBasis& b);

DiracBasis annihilator(const Form& phi);

struct Purity {
  bool pure = false;
  bool nondegenerate = false;
  int annihilator_dim = 0;
};
Purity purity(const Form& phi);
bool is_pure(const Form& phi);

GE gacs_from_spinor(const Form& phi);
GE gacs_from_dirac(const DiracBasis& l);
Form spinor_from_gacs(const GE& j);

// Scale so the lowest-degree component's first coefficient is 1.
Form normalized(const Form& phi);

}  // namespace gctk
