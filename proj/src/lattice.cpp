#include "twisth/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace twisth {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division, used to reduce entries above a positive pivot
// into [0, pivot).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    m.at(dst, c) -= f * m.at(src, c);
  }
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    m.at(r, dst) -= f * m.at(r, src);
  }
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

void col_negate(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = -m.at(r, c);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Eliminate below until one nonzero entry remains in column c.
    for (;;) {
      std::size_t pivot = h.rows();
      std::size_t nonzero = 0;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        ++nonzero;
        if (pivot == h.rows() ||
            abs_int(h.at(i, c)) < abs_int(h.at(pivot, c))) {
          pivot = i;
        }
      }
      if (nonzero == 0 || nonzero == 1) {
        if (nonzero == 1) {
          row_swap(h, r, pivot);
          row_swap(u, r, pivot);
        }
        break;
      }
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (i == pivot || h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(pivot, c);
        row_axpy(h, i, pivot, q);
        row_axpy(u, i, pivot, q);
      }
    }
    if (h.at(r, c) == 0) continue;  // no pivot in this column
    if (h.at(r, c) < 0) {
      row_negate(h, r);
      row_negate(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

ColHnfResult column_hnf(const IntMatrix& a) {
  HnfResult r = hnf(a.transpose());
  return {r.h.transpose(), r.u.transpose()};
}

SnfResult snf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix, ties by
      // lowest (row, col).
      std::size_t pr = h.rows(), pc = h.cols();
      for (std::size_t i = t; i < h.rows(); ++i) {
        for (std::size_t j = t; j < h.cols(); ++j) {
          if (h.at(i, j) == 0) continue;
          if (pr == h.rows() ||
              abs_int(h.at(i, j)) < abs_int(h.at(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == h.rows()) {
        t = n;  // trailing submatrix is zero
        break;
      }
      row_swap(h, t, pr);
      row_swap(u, t, pr);
      col_swap(h, t, pc);
      col_swap(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < h.rows(); ++i) {
        if (h.at(i, t) == 0) continue;
        Int q = h.at(i, t) / h.at(t, t);
        row_axpy(h, i, t, q);
        row_axpy(u, i, t, q);
        if (h.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < h.cols(); ++j) {
        if (h.at(t, j) == 0) continue;
        Int q = h.at(t, j) / h.at(t, t);
        col_axpy(h, j, t, q);
        col_axpy(v, j, t, q);
        if (h.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility fix: fold in a row containing an entry the pivot
      // does not divide, then re-eliminate.
      bool fixed = true;
      for (std::size_t i = t + 1; i < h.rows() && fixed; ++i) {
        for (std::size_t j = t + 1; j < h.cols(); ++j) {
          if (h.at(i, j) % h.at(t, t) != 0) {
            row_axpy(h, t, i, Int(-1));
            row_axpy(u, t, i, Int(-1));
            fixed = false;
            break;
          }
        }
      }
      if (fixed) break;
    }
    if (t >= n) break;
    if (h.at(t, t) < 0) {
      row_negate(h, t);
      row_negate(u, t);
    }
  }

  SnfResult out;
  out.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.d[i] = h.at(i, i);
  out.u = std::move(u);
  out.v = std::move(v);

  // Internal verification: multiply back.
  IntMatrix check = out.u * a * out.v;
  for (std::size_t i = 0; i < check.rows(); ++i) {
    for (std::size_t j = 0; j < check.cols(); ++j) {
      Int want = (i == j && i < n) ? out.d[i] : Int(0);
      if (check.at(i, j) != want) {
        throw std::logic_error("SNF verification failed");
      }
    }
  }
  return out;
}

IntMatrix kernel_lattice(const IntMatrix& a) {
  ColHnfResult ch = column_hnf(a);
  std::vector<std::size_t> zero_cols;
  for (std::size_t c = 0; c < ch.h.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < ch.h.rows(); ++r) {
      if (ch.h.at(r, c) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) zero_cols.push_back(c);
  }
  IntMatrix basis(a.cols(), zero_cols.size());
  for (std::size_t k = 0; k < zero_cols.size(); ++k) {
    for (std::size_t r = 0; r < a.cols(); ++r) {
      basis.at(r, k) = ch.v.at(r, zero_cols[k]);
    }
  }
  if (basis.cols() == 0) return basis;
  // Canonical form for reproducible output.
  ColHnfResult canon = column_hnf(basis);
  return canon.h;
}

namespace {

AbelianGroup group_from_diag(const std::vector<Int>& d, std::size_t rows) {
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (const Int& x : d) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) g.torsion.push_back(x);
  }
  g.free_rank = rows - nonzero;
  return g;
}

}  // namespace

AbelianGroup cokernel(const IntMatrix& a) {
  if (a.cols() == 0 || a.rows() == 0) {
    return AbelianGroup{a.rows(), {}};
  }
  SnfResult s = snf(a);
  return group_from_diag(s.d, a.rows());
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("rhs length does not match row count");
  }
  std::vector<Int> residual = b;
  if (a.cols() == 0) {
    for (const Int& x : residual) {
      if (x != 0) return std::nullopt;
    }
    return std::vector<Int>{};
  }
  ColHnfResult ch = column_hnf(a);
  std::vector<Int> y(a.cols());
  for (std::size_t j = 0; j < ch.h.cols(); ++j) {
    std::size_t pr = ch.h.rows();
    for (std::size_t r = 0; r < ch.h.rows(); ++r) {
      if (ch.h.at(r, j) != 0) {
        pr = r;
        break;
      }
    }
    if (pr == ch.h.rows()) break;  // zero columns are rightmost
    if (residual[pr] % ch.h.at(pr, j) != 0) return std::nullopt;
    y[j] = residual[pr] / ch.h.at(pr, j);
    if (y[j] != 0) {
      for (std::size_t r = 0; r < ch.h.rows(); ++r) {
        residual[r] -= y[j] * ch.h.at(r, j);
      }
    }
  }
  for (const Int& x : residual) {
    if (x != 0) return std::nullopt;
  }
  return ch.v.apply(y);
}

QuotientResult quotient_in_sublattice(const IntMatrix& k,
                                      const std::vector<std::vector<Int>>& l) {
  IntMatrix coords(k.cols(), l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    auto x = solve_integer(k, l[i]);
    if (!x) {
      throw MembershipError("vector " + std::to_string(i) +
                            " is not an integer combination of the basis");
    }
    coords.set_column(i, *x);
  }
  QuotientResult out;
  out.coords = coords;
  if (coords.cols() == 0 || coords.rows() == 0) {
    out.group = AbelianGroup{coords.rows(), {}};
    out.coord_snf = SnfResult{{}, IntMatrix::identity(coords.rows()),
                              IntMatrix::identity(coords.cols())};
    return out;
  }
  out.coord_snf = snf(coords);
  out.group = group_from_diag(out.coord_snf.d, coords.rows());
  return out;
}

}  // namespace twisth
