#ifndef RTSSS_LINALG_HPP
#define RTSSS_LINALG_HPP

// Dense matrices and Gaussian elimination, generic over a field type F that
// provides: typename F::Element, zero(), one(), add, sub, mul, neg, inv,
// is_zero. Everything is exact; pivots are chosen as the first nonzero entry
// scanning top to bottom, which makes all results deterministic.

#include <cstddef>
#include <optional>
#include <vector>

#include "rtsss/errors.hpp"

namespace rtsss {

template <typename T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const T& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> cells_;
};

template <class F>
using Mat = Matrix<typename F::Element>;

template <class F>
Mat<F> make_matrix(const F& f, std::size_t rows, std::size_t cols) {
  return Mat<F>(rows, cols, f.zero());
}

template <class F>
Mat<F> identity_matrix(const F& f, std::size_t n) {
  Mat<F> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.rows() == 0 || a.cols() == 0) {
    // preserve shape for empty matrices
    std::vector<T> none;
    Matrix<T> t(a.cols(), a.rows(), T{});
    return t;
  }
  Matrix<T> t(a.cols(), a.rows(), a.at(0, 0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t.at(c, r) = a.at(r, c);
  return t;
}

template <class F>
Mat<F> matmul(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows())
    fail(Errc::kDimensionMismatch, "matmul: inner dimensions disagree");
  Mat<F> out = make_matrix(f, a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t i = 0; i < a.cols(); ++i) {
      if (f.is_zero(a.at(r, i))) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        out.at(r, c) = f.add(out.at(r, c), f.mul(a.at(r, i), b.at(i, c)));
    }
  return out;
}

template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) fail(Errc::kDimensionMismatch, "hstack: row counts disagree");
  Matrix<T> out(a.rows(), a.cols() + b.cols(), a.rows() && a.cols() ? a.at(0, 0) : (b.rows() && b.cols() ? b.at(0, 0) : T{}));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
  }
  return out;
}

namespace detail {

// Reduces [A | B] to reduced row echelon form in place. Returns pivot column
// indices of A (their count is rank(A)).
template <class F>
std::vector<std::size_t> rref(const F& f, Mat<F>& a, Mat<F>* b) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pr = row;
    while (pr < a.rows() && f.is_zero(a.at(pr, col))) ++pr;
    if (pr == a.rows()) continue;
    a.swap_rows(row, pr);
    if (b) b->swap_rows(row, pr);
    auto scale = f.inv(a.at(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) = f.mul(a.at(row, c), scale);
    if (b)
      for (std::size_t c = 0; c < b->cols(); ++c) b->at(row, c) = f.mul(b->at(row, c), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || f.is_zero(a.at(r, col))) continue;
      auto factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(row, c)));
      if (b)
        for (std::size_t c = 0; c < b->cols(); ++c)
          b->at(r, c) = f.sub(b->at(r, c), f.mul(factor, b->at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class F>
std::vector<std::size_t> pivot_columns(const F& f, Mat<F> a) {
  return detail::rref(f, a, static_cast<Mat<F>*>(nullptr));
}

template <class F>
std::size_t matrix_rank(const F& f, Mat<F> a) {
  return detail::rref(f, a, static_cast<Mat<F>*>(nullptr)).size();
}

enum class SolveStatus { kUnique, kUnderdetermined, kNoSolution };

template <class F>
struct SolveResult {
  SolveStatus status;
  Mat<F> solution;  // particular solution (free variables zero); meaningless when kNoSolution
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Solves A*X = B column-wise for X. Inconsistent systems report kNoSolution;
// consistent systems with free variables report kUnderdetermined together
// with the particular solution whose free variables are zero.
template <class F>
SolveResult<F> solve_linear(const F& f, Mat<F> a, Mat<F> b) {
  if (a.rows() != b.rows())
    fail(Errc::kDimensionMismatch, "solve_linear: A and B row counts disagree");
  const std::size_t unknowns = a.cols();
  auto pivots = detail::rref(f, a, &b);
  const std::size_t rank = pivots.size();

  SolveResult<F> res{SolveStatus::kUnique, make_matrix(f, unknowns, b.cols()), rank, pivots};
  for (std::size_t r = rank; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (!f.is_zero(b.at(r, c))) {
        res.status = SolveStatus::kNoSolution;
        return res;
      }
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) res.solution.at(pivots[i], c) = b.at(i, c);
  if (rank < unknowns) res.status = SolveStatus::kUnderdetermined;
  return res;
}

template <class F>
std::optional<Mat<F>> inverse(const F& f, const Mat<F>& a) {
  if (a.rows() != a.cols()) fail(Errc::kDimensionMismatch, "inverse: matrix not square");
  auto res = solve_linear(f, a, identity_matrix(f, a.rows()));
  if (res.status != SolveStatus::kUnique) return std::nullopt;
  return res.solution;
}

}  // namespace rtsss

#endif  // RTSSS_LINALG_HPP
