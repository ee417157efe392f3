#include "twisth/int_matrix.hpp"

#include <sstream>

namespace twisth {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) {
    throw std::invalid_argument("entry count does not match dimensions");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, const std::vector<Int>& v) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool IntMatrix::is_zero() const {
  for (const Int& x : e_) {
    if (x != 0) return false;
  }
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("vector length does not match column count");
  }
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Int s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("dimension mismatch in matrix product");
  }
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("dimension mismatch in matrix sum");
  }
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("dimension mismatch in matrix difference");
  }
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
  return out;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("determinant of non-square matrix");
  }
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) =
            (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("row count mismatch in hstack");
  }
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      out.at(r, a.cols() + c) = b.at(r, c);
    }
  }
  return out;
}

}  // namespace twisth
