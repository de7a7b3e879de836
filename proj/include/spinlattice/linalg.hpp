#pragma once

// Small dense real matrices and a cyclic Jacobi eigensolver. Every matrix in
// this project is at most a few hundred rows, so nothing here is blocked or
// vectorised.

#include <cstddef>
#include <span>
#include <vector>

namespace spinlattice {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<double> column(std::size_t c) const;

  std::span<const double> data() const noexcept { return data_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;  // row-major
};

DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);

// Q^T A Q for a column-orthonormal Q.
DenseMatrix congruence(const DenseMatrix& a, const DenseMatrix& q);

double max_abs(const DenseMatrix& a);
double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);
double trace(const DenseMatrix& a);

// Largest |a(i,j) - a(j,i)|; zero means exactly symmetric.
double asymmetry(const DenseMatrix& a);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

struct Eigensystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k pairs with values[k]
};

// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
// Eigenvector signs are fixed so the first component of largest magnitude is
// positive, which makes results reproducible across runs.
// Throws Error(NonSymmetric) when asymmetry exceeds a few ulps of max_abs.
Eigensystem symmetric_eigen(const DenseMatrix& a);

}  // namespace spinlattice
