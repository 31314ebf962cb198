#pragma once

#include <utility>
#include <vector>

#include "semiq/types.hpp"

namespace semiq {

// Minimal row-major dense matrix for exact scalars (cpp_int, cpp_rational).
// Only what the elimination routines need; domain-level integer linear
// algebra stays on Eigen types.
template <typename Scalar>
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
  }
  const Scalar& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
  }

  void swap_rows(int a, int b) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(int a, int b) {
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

// Fraction-free (Bareiss) elimination on an integral-domain scalar. Every
// division in the update is exact, so intermediate entries stay bounded by
// minors of the input. Returns the rank; consumes the matrix.
template <typename Scalar>
int bareiss_rank(DenseMat<Scalar> m) {
  const int rows = m.rows(), cols = m.cols();
  Scalar prev(1);
  int rank = 0;
  for (int k = 0; rank < rows && k < cols; ++k) {
    int pr = -1;
    for (int r = rank; r < rows && pr < 0; ++r) {
      if (m(r, k) != 0) pr = r;
    }
    if (pr < 0) continue;
    if (pr != rank) m.swap_rows(pr, rank);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = k + 1; c < cols; ++c) {
        m(r, c) = (m(rank, k) * m(r, c) - m(r, k) * m(rank, c)) / prev;
      }
      m(r, k) = 0;
    }
    prev = m(rank, k);
    ++rank;
  }
  return rank;
}

// Bareiss determinant of a square matrix; the final pivot is the determinant
// up to the tracked row-swap sign.
template <typename Scalar>
Scalar bareiss_det(DenseMat<Scalar> m) {
  const int n = m.rows();
  if (n != m.cols()) throw InputError("bareiss_det: matrix not square");
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pr = -1;
    for (int r = k; r < n && pr < 0; ++r) {
      if (m(r, k) != 0) pr = r;
    }
    if (pr < 0) return Scalar(0);
    if (pr != k) {
      m.swap_rows(pr, k);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        m(r, c) = (m(k, k) * m(r, c) - m(r, k) * m(k, c)) / prev;
      }
      m(r, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? prev : Scalar(-prev);
}

// Clears denominators row by row; returns the integer matrix together with
// the product of the row scale factors (needed to undo the scaling in
// determinants; ranks are unaffected).
inline std::pair<DenseMat<BigInt>, BigInt> clear_denominators(const DenseMat<Rat>& m) {
  DenseMat<BigInt> out(m.rows(), m.cols());
  BigInt total(1);
  for (int r = 0; r < m.rows(); ++r) {
    BigInt l(1);
    for (int c = 0; c < m.cols(); ++c) l = boost::multiprecision::lcm(l, denominator(m(r, c)));
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& x = m(r, c);
      out(r, c) = numerator(x) * (l / denominator(x));
    }
    total *= l;
  }
  return {std::move(out), std::move(total)};
}

inline int rank_of(const DenseMat<Rat>& m) {
  return bareiss_rank(clear_denominators(m).first);
}

inline Rat det_of(const DenseMat<Rat>& m) {
  auto [im, scale] = clear_denominators(m);
  return Rat(bareiss_det(std::move(im)), scale);
}

}  // namespace semiq
