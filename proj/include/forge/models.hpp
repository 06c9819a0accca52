#pragma once

#include <functional>

#include "forge/entwining.hpp"

// Small structure-constant builders for the named model structures used by
// the builtin fixture library and the test suites.

namespace forge::models {

inline Algebra algebra_from_table(const Field& f, std::size_t n, const Vec& unit,
                                  const std::function<Vec(std::size_t, std::size_t)>& prod) {
  Matrix mul(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul.set_col(tensor_index(i, j, n), prod(i, j));
  return {f, n, mul, unit};
}

// Group algebra of Z/n with basis 1, g, g^2, ...
inline Algebra cyclic_group_algebra(const Field& f, std::size_t n) {
  return algebra_from_table(f, n, unit_vec(n, 0),
                            [n](std::size_t i, std::size_t j) { return unit_vec(n, (i + j) % n); });
}

// k[x]/(x^2) with basis {1, x}.
inline Algebra dual_numbers_algebra(const Field& f) {
  return algebra_from_table(f, 2, unit_vec(2, 0), [&](std::size_t i, std::size_t j) {
    return i + j < 2 ? unit_vec(2, i + j) : zero_vec(2);
  });
}

// Full matrix algebra M_n(k), basis e_{ij} at index i*n+j; e_ij e_kl = [j==k] e_il.
inline Algebra matrix_algebra(const Field& f, std::size_t n) {
  Vec unit = zero_vec(n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
  return algebra_from_table(f, n * n, unit, [n, &f](std::size_t a, std::size_t b) {
    std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
    return j == k ? unit_vec(n * n, i * n + l) : zero_vec(n * n);
  });
}

// Four-dimensional algebra with basis {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx.
inline Algebra anticommuting_pair_algebra(const Field& f) {
  // Index elements as pairs (e, d): basis g^e x^d at index 2*e + d.
  return algebra_from_table(f, 4, unit_vec(4, 0), [&](std::size_t a, std::size_t b) {
    std::size_t e1 = a / 2, d1 = a % 2, e2 = b / 2, d2 = b % 2;
    if (d1 + d2 > 1) return zero_vec(4);  // x^2 = 0
    // g^e1 x^d1 g^e2 x^d2 = (-1)^(d1*e2) g^(e1+e2) x^(d1+d2)
    Vec v = zero_vec(4);
    Scalar sign = (d1 * e2) % 2 == 1 ? f.from_int(-1) : f.one();
    v[2 * ((e1 + e2) % 2) + d1 + d2] = sign;
    return v;
  });
}

// Row vectors k^n as a right M_n(k)-module under r . A = rA.
inline AModule row_module(const Algebra& mat, std::size_t n) {
  const Field& f = mat.field;
  Matrix act(f, n, n * n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t a = 0; a < n * n; ++a) {
      std::size_t i = a / n, j = a % n;
      act.set_col(tensor_index(r, a, n * n), r == i ? unit_vec(n, j) : zero_vec(n));
    }
  return {mat, Side::right, n, act};
}

// Column vectors k^n as a left M_n(k)-module under A . c = Ac.
inline AModule col_module(const Algebra& mat, std::size_t n) {
  const Field& f = mat.field;
  Matrix act(f, n, n * n * n);
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t i = a / n, j = a % n;
      act.set_col(tensor_index(a, c, n), j == c ? unit_vec(n, i) : zero_vec(n));
    }
  return {mat, Side::left, n, act};
}

// Dual of k[x]/(x^2): c_0 group-like, comul(c_1) = c_0 (x) c_1 + c_1 (x) c_0.
inline Coalgebra dual_numbers_coalgebra(const Field& f) {
  Coalgebra c{f, 2, Matrix(f, 4, 2), Matrix(f, 1, 2)};
  c.comul.set(tensor_index(0, 0, 2), 0, f.one());
  c.comul.set(tensor_index(0, 1, 2), 1, f.one());
  c.comul.set(tensor_index(1, 0, 2), 1, f.one());
  c.counit.set(0, 0, f.one());
  return c;
}

// Group Hopf algebra of Z/n: antipode inverts the group, so it is involutive.
inline HopfAlgebra group_hopf(const Field& f, std::size_t n) {
  Matrix s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) s.set((n - i) % n, i, f.one());
  return {cyclic_group_algebra(f, n), grouplike_coalgebra(f, n), s, s};
}

// The four-dimensional Hopf algebra on {1, x, g, gx} (the index order of
// anticommuting_pair_algebra): comul(g) = g (x) g, comul(x) = x (x) 1 +
// g (x) x, antipode g -> g, x -> -gx (not involutive).
inline HopfAlgebra small_quantum_hopf(const Field& f) {
  Algebra a = anticommuting_pair_algebra(f);
  Matrix cm(f, 16, 4), eps(f, 1, 4);
  cm.set(tensor_index(0, 0, 4), 0, f.one());  // 1 -> 1 (x) 1
  cm.set(tensor_index(1, 0, 4), 1, f.one());  // x -> x (x) 1 + g (x) x
  cm.set(tensor_index(2, 1, 4), 1, f.one());
  cm.set(tensor_index(2, 2, 4), 2, f.one());  // g -> g (x) g
  cm.set(tensor_index(3, 2, 4), 3, f.one());  // gx -> gx (x) g + 1 (x) gx
  cm.set(tensor_index(0, 3, 4), 3, f.one());
  eps.set(0, 0, f.one());
  eps.set(0, 2, f.one());
  Matrix s(f, 4, 4), si(f, 4, 4);
  s.set(0, 0, f.one());
  s.set(3, 1, f.from_int(-1));  // S(x) = -gx
  s.set(2, 2, f.one());         // S(g) = g
  s.set(1, 3, f.one());         // S(gx) = x
  si.set(0, 0, f.one());
  si.set(3, 1, f.one());         // Sinv(x) = gx
  si.set(2, 2, f.one());         // Sinv(g) = g
  si.set(1, 3, f.from_int(-1));  // Sinv(gx) = -x
  return {a, {f, 4, cm, eps}, s, si};
}

// H coacting on itself by its comultiplication, with C = H and pi = id.
inline DoiKoppinenData self_dk(const HopfAlgebra& h) {
  return {h,
          {h.algebra, h.coalgebra.comul},
          h.coalgebra,
          Matrix::identity(h.algebra.field, h.algebra.dim),
          h.algebra.mul};
}

// The small quantum Hopf algebra coacting on itself, projected onto its
// group-like quotient k[Z/2] (x, gx -> 0). pi is a Hopf projection, so C
// becomes a right H-module along it.
inline DoiKoppinenData quantum_projection_dk(const Field& f) {
  HopfAlgebra h = small_quantum_hopf(f);
  Coalgebra c = grouplike_coalgebra(f, 2);
  Matrix pi(f, 2, 4);
  pi.set(0, 0, f.one());
  pi.set(1, 2, f.one());
  Matrix c_act = cyclic_group_algebra(f, 2).mul * Matrix::identity(f, 2).kron(pi);
  return {h, {h.algebra, h.coalgebra.comul}, c, pi, c_act};
}

}  // namespace forge::models
