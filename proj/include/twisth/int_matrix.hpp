#ifndef TWISTH_INT_MATRIX_HPP_
#define TWISTH_INT_MATRIX_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twisth {

using Int = boost::multiprecision::cpp_int;

/// Dense arbitrary-precision integer matrix, row-major.
/// Matrices act on column vectors throughout.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  std::vector<Int> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Int>& v);

  bool is_zero() const;
  bool is_identity() const;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Exact determinant (square only), fraction-free Bareiss elimination.
  Int det() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> e_;
};

/// Horizontal concatenation [a | b]; row counts must agree.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

}  // namespace twisth

#endif  // TWISTH_INT_MATRIX_HPP_
