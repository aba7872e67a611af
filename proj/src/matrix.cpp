#include "curvecal/matrix.hpp"

#include <limits>
#include <utility>

#include "curvecal/checked.hpp"
#include "curvecal/error.hpp"

namespace curvecal {

namespace {

__extension__ using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw LimitError("integer overflow in matrix arithmetic");
  }
  return static_cast<std::int64_t>(v);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row[dst] -= q * row[src]
void sub_multiple(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    m(dst, c) = checked::sub(m(dst, c), checked::mul(q, m(src, c)));
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch in product");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = checked::add(acc, checked::mul(a(i, k), b(k, j)));
      }
      r(i, j) = acc;
    }
  }
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

std::int64_t determinant(const IntMatrix& in) {
  if (!in.square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = in.rows();
  if (n == 0) return 1;
  IntMatrix a = in;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division: Sylvester's identity guarantees divisibility.
        Wide num = static_cast<Wide>(a(i, j)) * a(k, k) -
                       static_cast<Wide>(a(i, k)) * a(k, j);
        a(i, j) = narrow(num / prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& in) {
  if (!in.square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = in.rows();
  IntMatrix a = in;
  IntMatrix inv = IntMatrix::identity(n);

  // Forward pass: Euclid on each column until only the pivot row is nonzero.
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = k; i < n; ++i) {
        if (a(i, k) != 0 && (best == n || checked::abs(a(i, k)) < checked::abs(a(best, k)))) {
          best = i;
        }
      }
      if (best == n) return std::nullopt;
      if (best != k) {
        swap_rows(a, k, best);
        swap_rows(inv, k, best);
      }
      bool done = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        std::int64_t q = a(i, k) / a(k, k);
        sub_multiple(a, i, k, q);
        sub_multiple(inv, i, k, q);
        if (a(i, k) != 0) done = false;
      }
      if (done) break;
    }
    if (a(k, k) != 1 && a(k, k) != -1) return std::nullopt;
    if (a(k, k) == -1) {
      for (std::size_t c = 0; c < n; ++c) {
        a(k, c) = checked::neg(a(k, c));
        inv(k, c) = checked::neg(inv(k, c));
      }
    }
  }
  // Back substitution with unit pivots.
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t q = a(i, k);
      sub_multiple(a, i, k, q);
      sub_multiple(inv, i, k, q);
    }
  }
  return inv;
}

}  // namespace curvecal
