#include "toda2/matrix.hpp"

namespace toda2 {

Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<Scalar> num = m.scaled_numerators(Scalar(1L));
  num.set_den(Scalar(1L));
  auto [det, det_den] = det_comm(num);
  if (det.is_zero()) throw std::domain_error("singular matrix");

  Matrix<Scalar> adj(n, n, Scalar());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (n == 1) {
        adj(0, 0) = Scalar(1L);
        continue;
      }
      Matrix<Scalar> minor(n - 1, n - 1, Scalar());
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = num(r, c);
        }
        ++mr;
      }
      Scalar d = det_comm(minor).first;
      adj(i, j) = (i + j) % 2 ? -d : d;
    }
  // (N/d)^{-1} = d adj(N) / det(N)
  Matrix<Scalar> r = m.den() * adj;
  if (det.is_monomial()) {
    r = det.pow(-1) * r;
  } else {
    r.set_den(det);
  }
  return r;
}

Matrix<WeylOp> lift(const Matrix<Scalar>& m, Lattice lat) {
  Matrix<WeylOp> r = m.map([&](const Scalar& x) { return WeylOp(lat, x); });
  return r;
}

}  // namespace toda2
