#pragma once

#include <Eigen/Core>
#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "nacech/error.hpp"

namespace nacech {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

template <std::integral Scalar>
Scalar checked_axpy(Scalar a, Scalar q, Scalar b) {  // a - q*b
  Scalar p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r))
    throw Error(ErrorKind::Overflow, "integer overflow in Smith normal form");
  return r;
}

template <std::integral Scalar>
Scalar abs_value(Scalar a) {
  return a < 0 ? -a : a;
}

}  // namespace detail

// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
template <std::integral Scalar>
struct SmithForm {
  IntMatrix<Scalar> D;
  IntMatrix<Scalar> U;  // empty unless requested
  IntMatrix<Scalar> V;  // empty unless requested
  std::vector<Scalar> diagonal;  // the nonzero invariant factors, positive
  int rank() const { return static_cast<int>(diagonal.size()); }
};

template <std::integral Scalar>
SmithForm<Scalar> smith_normal_form(const IntMatrix<Scalar>& M, bool want_u = false,
                                    bool want_v = false) {
  using detail::abs_value;
  using detail::checked_axpy;
  const Eigen::Index m = M.rows(), n = M.cols();
  SmithForm<Scalar> out;
  IntMatrix<Scalar> A = M;
  IntMatrix<Scalar> U, V;
  if (want_u) U = IntMatrix<Scalar>::Identity(m, m);
  if (want_v) V = IntMatrix<Scalar>::Identity(n, n);

  auto row_op = [&](Eigen::Index dst, Eigen::Index src, Scalar q) {  // row dst -= q row src
    for (Eigen::Index c = 0; c < n; ++c) A(dst, c) = checked_axpy(A(dst, c), q, A(src, c));
    if (want_u)
      for (Eigen::Index c = 0; c < m; ++c) U(dst, c) = checked_axpy(U(dst, c), q, U(src, c));
  };
  auto col_op = [&](Eigen::Index dst, Eigen::Index src, Scalar q) {
    for (Eigen::Index r = 0; r < m; ++r) A(r, dst) = checked_axpy(A(r, dst), q, A(r, src));
    if (want_v)
      for (Eigen::Index r = 0; r < n; ++r) V(r, dst) = checked_axpy(V(r, dst), q, V(r, src));
  };
  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    A.row(a).swap(A.row(b));
    if (want_u) U.row(a).swap(U.row(b));
  };
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    A.col(a).swap(A.col(b));
    if (want_v) V.col(a).swap(V.col(b));
  };

  const Eigen::Index lim = std::min(m, n);
  Eigen::Index t = 0;
  for (; t < lim; ++t) {
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index c = t; c < n; ++c)
      for (Eigen::Index r = t; r < m; ++r)
        if (A(r, c) != 0 && (pr < 0 || abs_value(A(r, c)) < abs_value(A(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (Eigen::Index r = t + 1; r < m; ++r)
        if (A(r, t) != 0) {
          row_op(r, t, A(r, t) / A(t, t));
          if (A(r, t) != 0) clean = false;
        }
      for (Eigen::Index c = t + 1; c < n; ++c)
        if (A(t, c) != 0) {
          col_op(c, t, A(t, c) / A(t, t));
          if (A(t, c) != 0) clean = false;
        }
      if (!clean) {
        // Some remainder is smaller than the pivot; bring the smallest in.
        Eigen::Index br = t, bc = t;
        for (Eigen::Index r = t + 1; r < m; ++r)
          if (A(r, t) != 0 && abs_value(A(r, t)) < abs_value(A(br, bc))) { br = r; bc = t; }
        for (Eigen::Index c = t + 1; c < n; ++c)
          if (A(t, c) != 0 && abs_value(A(t, c)) < abs_value(A(br, bc))) { br = t; bc = c; }
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      Eigen::Index bad = -1;
      for (Eigen::Index r = t + 1; r < m && bad < 0; ++r)
        for (Eigen::Index c = t + 1; c < n; ++c)
          if (A(r, c) % A(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, Scalar(-1));
    }
    if (A(t, t) < 0) {
      for (Eigen::Index c = 0; c < n; ++c) A(t, c) = -A(t, c);
      if (want_u)
        for (Eigen::Index c = 0; c < m; ++c) U(t, c) = -U(t, c);
    }
    out.diagonal.push_back(A(t, t));
  }
  out.D = std::move(A);
  out.U = std::move(U);
  out.V = std::move(V);
  return out;
}

}  // namespace nacech
