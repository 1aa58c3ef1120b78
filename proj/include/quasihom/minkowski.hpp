#pragma once

#include "quasihom/linalg.hpp"

namespace quasihom {

/// The form I with unit antidiagonal: in the basis (e, h, f),
/// <e, f> = <h, h> = 1 and every other pairing vanishes.
inline Matrix minkowski_form() { return Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}; }

/// Generators of o(2,1) in the basis (e, h, f): E e = 0, E h = -e, E f = h;
/// H = diag(1, 0, -1); F e = -h, F h = f, F f = 0.
inline Matrix gen_e() { return Matrix{{0, -1, 0}, {0, 0, 1}, {0, 0, 0}}; }
inline Matrix gen_h() { return Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}; }
inline Matrix gen_f() { return Matrix{{0, 0, 0}, {-1, 0, 0}, {0, 1, 0}}; }

/// M I + I M^T = 0, i.e. M is skew for the form I.
inline bool in_o21(const Matrix& m) {
  const Matrix i = minkowski_form();
  return m.rows() == 3 && m.cols() == 3 && (m * i + i * m.transpose()).is_zero();
}

/// I M = M^T I, i.e. M is self-adjoint for the form I.
inline bool is_i_symmetric(const Matrix& m) {
  const Matrix i = minkowski_form();
  return m.rows() == 3 && m.cols() == 3 && i * m == m.transpose() * i;
}

}  // namespace quasihom
