#include "gctk/matrix.hpp"

namespace gctk {

CMatrix complexify(const RMatrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = Complex(m(i, j));
  return c;
}

CMatrix conj(const CMatrix& m) {
  CMatrix c = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).conj();
  return c;
}

CMatrix conj_transpose(const CMatrix& m) { return conj(m).transpose(); }

RMatrix real_matrix(const CMatrix& m) {
  RMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real()) throw std::domain_error("matrix has a non-real entry");
      r(i, j) = m(i, j).re();
    }
  return r;
}

Inertia inertia(const RMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw std::invalid_argument("inertia of a non-square matrix");
  RMatrix a = symmetric;
  std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw std::invalid_argument("inertia of a non-symmetric matrix");

  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
  };

  Inertia out;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: fold an off-diagonal one onto the diagonal.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
          for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
          found = true;
        }
      if (!found) {
        out.zero += static_cast<int>(n - k);
        break;
      }
      continue;
    }
    swap_index(p, k);
    Rational d = a(k, k);
    (sgn(d) > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      Rational f = a(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
    ++k;
  }
  return out;
}

std::string matrix_str(const RMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += rational_str(m(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace gctk
