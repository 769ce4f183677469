#include "gctk/double_space.hpp"

#include <algorithm>

namespace gctk {

GE::GeneralizedEndomorphism(RMatrix m) : dim_(static_cast<int>(m.rows() / 2)), m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2) {
    throw std::invalid_argument("generalized endomorphism must be a square matrix of even size");
  }
}

GE GE::from_blocks(const RMatrix& a, const RMatrix& p, const RMatrix& q, const RMatrix& d) {
  std::size_t n = a.rows();
  for (const RMatrix* b : {&a, &p, &q, &d}) {
    if (b->rows() != n || b->cols() != n) throw std::invalid_argument("block shape mismatch");
  }
  RMatrix m(2 * n, 2 * n);
  m.set_block(0, 0, a);
  m.set_block(0, n, p);
  m.set_block(n, 0, q);
  m.set_block(n, n, d);
  return GE(std::move(m));
}

GE GE::identity(int dim) { return GE(RMatrix::identity(2 * dim)); }

GE direct_sum(const GE& a, const GE& b) {
  std::size_t da = a.dim(), db = b.dim();
  auto sum = [&](const RMatrix& x, const RMatrix& y) {
    RMatrix s(da + db, da + db);
    s.set_block(0, 0, x);
    s.set_block(da, da, y);
    return s;
  };
  return GE::from_blocks(sum(a.A(), b.A()), sum(a.P(), b.P()), sum(a.Q(), b.Q()), sum(a.D(), b.D()));
}

RMatrix pairing_matrix(int dim) {
  RMatrix g(2 * dim, 2 * dim);
  for (int i = 0; i < dim; ++i) {
    g(i, dim + i) = Rational(1, 2);
    g(dim + i, i) = Rational(1, 2);
  }
  return g;
}

Rational inner_product(const EVector<Rational>& a, const EVector<Rational>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  Rational sum = 0;
  for (int i = 0; i < a.dim(); ++i) sum += a.cotangent[i] * b.tangent[i] + b.cotangent[i] * a.tangent[i];
  return sum / 2;
}

bool is_gacs(const GE& j) {
  const RMatrix& m = j.matrix();
  std::size_t n = m.rows();
  if (m * m != -RMatrix::identity(n)) return false;
  RMatrix g = pairing_matrix(j.dim());
  return m.transpose() * g * m == g;
}

Eigen::MatrixXd to_float(const RMatrix& m) {
  Eigen::MatrixXd f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) f(i, k) = m(i, k).get_d();
  return f;
}

bool is_gacs(const Eigen::MatrixXd& j, double tol) {
  if (j.rows() != j.cols() || j.rows() % 2) return false;
  auto n = j.rows();
  Eigen::MatrixXd g = to_float(pairing_matrix(static_cast<int>(n / 2)));
  if ((j * j + Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > tol) return false;
  return (j.transpose() * g * j - g).cwiseAbs().maxCoeff() <= tol;
}

RMatrix two_form_matrix(const Form& w) {
  int d = w.dim();
  RMatrix m(d, d);
  for (const auto& [mask, c] : w.terms()) {
    if (grade_of(mask) != 2) throw std::invalid_argument("two_form_matrix: not a 2-form");
    if (!c.is_real()) throw std::invalid_argument("two_form_matrix: complex coefficient");
    int i = std::countr_zero(mask);
    int k = std::countr_zero(mask & (mask - 1));
    m(k, i) = c.re();
    m(i, k) = -c.re();
  }
  return m;
}

Form two_form(const RMatrix& map) {
  int d = static_cast<int>(map.rows());
  if (map.cols() != map.rows() || map.transpose() != -map) {
    throw std::invalid_argument("two_form: matrix is not skew");
  }
  Form w(d);
  for (int i = 0; i < d; ++i)
    for (int k = i + 1; k < d; ++k) w.add_term((Mask{1} << i) | (Mask{1} << k), Complex(map(k, i)));
  return w;
}

Form real_part(const Form& w) {
  return w.map_coeffs([](const Complex& c) { return Complex(c.re()); });
}

Form imag_part(const Form& w) {
  return w.map_coeffs([](const Complex& c) { return Complex(c.im()); });
}

GE make_JI(const RMatrix& complex_structure) {
  std::size_t n = complex_structure.rows();
  if (complex_structure * complex_structure != -RMatrix::identity(n)) {
    throw std::invalid_argument("make_JI: I^2 != -1");
  }
  RMatrix zero(n, n);
  return GE::from_blocks(-complex_structure, zero, zero, complex_structure.transpose());
}

GE make_Jomega(const RMatrix& omega) {
  if (omega.transpose() != -omega) throw std::invalid_argument("make_Jomega: form is not skew");
  RMatrix inv = inverse(omega);
  RMatrix zero(omega.rows(), omega.cols());
  return GE::from_blocks(zero, -inv, omega, zero);
}

GE bfield(const RMatrix& b) {
  if (b.transpose() != -b) throw std::invalid_argument("bfield: form is not skew");
  std::size_t n = b.rows();
  RMatrix one = RMatrix::identity(n);
  return GE::from_blocks(one, RMatrix(n, n), b, one);
}

GE bfield_transform(const GE& j, const RMatrix& b) { return bfield(-b) * j * bfield(b); }

int type_of(const GE& j) {
  int kernel_dim = j.dim() - static_cast<int>(rank(j.P()));
  if (kernel_dim % 2) throw std::domain_error("type_of: odd kernel dimension, input is not a GACS");
  return kernel_dim / 2;
}

DiracBasis dirac_of(const GE& j) {
  std::size_t n = j.matrix().rows();
  CMatrix m = complexify(RMatrix::identity(n)) - complexify(j.matrix()) * Complex::i();
  CMatrix reduced = m;
  auto pivots = rref(reduced);
  if (static_cast<int>(pivots.size()) != j.dim()) {
    throw std::domain_error("dirac_of: eigenspace has the wrong dimension, input is not a GACS");
  }
  CMatrix basis(n, pivots.size());
  for (std::size_t c = 0; c < pivots.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) basis(r, c) = m(r, pivots[c]);
  return {j.dim(), basis};
}

bool is_isotropic(const DiracBasis& l) {
  CMatrix g = complexify(pairing_matrix(l.dim));
  return (l.vectors.transpose() * g * l.vectors).is_zero();
}

bool same_span(const DiracBasis& a, const DiracBasis& b) {
  return a.dim == b.dim && same_column_span(a.vectors, b.vectors);
}

namespace {

// Incremental reduced row echelon form over sparse rows.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }

  void insert(std::vector<Complex> r) {
    for (std::size_t p = 0; p < cols_; ++p) {
      if (pivot_row_[p] < 0 || r[p].is_zero()) continue;
      Complex f = r[p];
      const auto& b = rows_[pivot_row_[p]];
      for (std::size_t c = 0; c < cols_; ++c)
        if (!b[c].is_zero()) r[c] -= f * b[c];
    }
    std::size_t q = 0;
    while (q < cols_ && r[q].is_zero()) ++q;
    if (q == cols_) return;
    Complex inv = r[q].inverse();
    for (auto& x : r) x *= inv;
    for (auto& b : rows_) {
      if (b[q].is_zero()) continue;
      Complex f = b[q];
      for (std::size_t c = 0; c < cols_; ++c)
        if (!r[c].is_zero()) b[c] -= f * r[c];
    }
    pivot_row_[q] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
  }

  CMatrix kernel() const {
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] < 0) free.push_back(c);
    CMatrix k(cols_, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
      k(free[f], f) = Complex(1);
      for (std::size_t p = 0; p < cols_; ++p) {
        if (pivot_row_[p] >= 0) k(p, f) = -rows_[pivot_row_[p]][free[f]];
      }
    }
    return k;
  }

 private:
  std::size_t cols_;
  std::vector<int> pivot_row_;
  std::vector<std::vector<Complex>> rows_;
};

}  // namespace

DiracBasis annihilator(const Form& phi) {
  if (phi.is_zero()) throw std::invalid_argument("annihilator of the zero form");
  int d = phi.dim();
  std::size_t cols = 2 * static_cast<std::size_t>(d);
  std::map<Mask, std::vector<Complex>> rows;
  for (std::size_t k = 0; k < cols; ++k) {
    Form image = clifford_act(EVector<Complex>::unit(d, static_cast<int>(k)), phi);
    for (const auto& [mask, c] : image.terms()) {
      auto [it, inserted] = rows.try_emplace(mask);
      if (inserted) it->second.assign(cols, Complex());
      it->second[k] = c;
    }
  }
  RowEchelon echelon(cols);
  for (auto& [mask, r] : rows) {
    echelon.insert(std::move(r));
    if (echelon.full()) break;
  }
  return {d, echelon.kernel()};
}

Purity purity(const Form& phi) {
  DiracBasis l = annihilator(phi);
  Purity p;
  p.annihilator_dim = l.size();
  p.pure = l.size() == phi.dim();
  if (p.pure) p.nondegenerate = rank(hconcat(l.vectors, conj(l.vectors))) == 2 * l.vectors.cols();
  return p;
}

bool is_pure(const Form& phi) { return purity(phi).pure; }

GE gacs_from_dirac(const DiracBasis& l) {
  if (l.size() != l.dim) throw std::domain_error("Dirac basis is not maximal");
  std::size_t d = l.dim;
  CMatrix v = hconcat(l.vectors, conj(l.vectors));
  if (rank(v) != 2 * d) throw std::domain_error("degenerate Dirac structure: L meets its conjugate");
  CMatrix diag(2 * d, 2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    diag(k, k) = Complex::i();
    diag(d + k, d + k) = -Complex::i();
  }
  return GE(real_matrix(v * diag * inverse(v)));
}

GE gacs_from_spinor(const Form& phi) {
  Purity p = purity(phi);
  if (!p.pure) throw std::domain_error("gacs_from_spinor: spinor is not pure");
  if (!p.nondegenerate) throw std::domain_error("gacs_from_spinor: degenerate spinor");
  return gacs_from_dirac(annihilator(phi));
}

Form normalized(const Form& phi) {
  if (phi.is_zero()) throw std::invalid_argument("normalized: zero form");
  int low = kMaxDim + 1;
  Complex lead;
  for (const auto& [mask, c] : phi.terms()) {
    if (grade_of(mask) < low) {
      low = grade_of(mask);
      lead = c;
    }
  }
  return phi * lead.inverse();
}

Form spinor_from_gacs(const GE& j) {
  DiracBasis l = dirac_of(j);
  int d = j.dim();
  std::vector<EVector<Complex>> gens;
  for (int c = 0; c < l.size(); ++c) {
    auto col = l.vectors.column(c);
    gens.emplace_back(std::vector<Complex>(col.begin(), col.begin() + d),
                      std::vector<Complex>(col.begin() + d, col.end()));
  }
  // The Clifford product of a basis of L applied to a coordinate monomial
  // is annihilated by L; scan monomials until the product is nonzero.
  std::vector<Mask> order;
  for (Mask m = 0; m < (Mask{1} << d); ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return grade_of(a) < grade_of(b); });
  for (Mask start : order) {
    Form phi = Form::basis(d, start, Complex(1));
    for (auto it = gens.rbegin(); it != gens.rend() && !phi.is_zero(); ++it) phi = clifford_act(*it, phi);
    if (phi.is_zero()) continue;
    DiracBasis ann = annihilator(phi);
    if (ann.size() != d || !same_span(ann, l)) {
      throw std::domain_error("spinor_from_gacs: annihilator does not match the Dirac structure");
    }
    return normalized(phi);
  }
  throw std::domain_error("spinor_from_gacs: no spinor found");
}

}  // namespace gctk
