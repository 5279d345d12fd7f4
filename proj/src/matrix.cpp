#include "bott/matrix.hpp"

#include <limits>
#include <utility>

namespace bott {

namespace {

Int narrow(__int128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError("integer overflow in determinant");
  return static_cast<Int>(v);
}

void require_square(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("matrix is not square");
}

// Gauss-Jordan on [m | rhs] over the rationals. Returns false when singular.
bool eliminate(RationalMatrix& a, RationalMatrix& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).sign() == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(pivot, c), rhs(col, c));
    }
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).sign() == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(col, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) -= f * rhs(col, c);
    }
  }
  return true;
}

}  // namespace

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

Int determinant(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(a(i, j)) * a(k, k) - static_cast<__int128>(a(i, k)) * a(k, j);
        a(i, j) = narrow(num / prev);  // exact by Sylvester's identity
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

std::optional<std::vector<Rational>> solve(const IntMatrix& m, std::span<const Int> rhs) {
  require_square(m);
  if (rhs.size() != m.rows()) throw InputError("right-hand side has wrong length");
  RationalMatrix a = to_rational(m);
  RationalMatrix b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = Rational(rhs[i]);
  if (!eliminate(a, b)) return std::nullopt;
  std::vector<Rational> x(rhs.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = b(i, 0);
  return x;
}

std::optional<RationalMatrix> inverse(const IntMatrix& m) {
  require_square(m);
  RationalMatrix a = to_rational(m);
  RationalMatrix inv = RationalMatrix::identity(m.rows());
  if (!eliminate(a, inv)) return std::nullopt;
  return inv;
}

std::vector<Int> multiply(const IntMatrix& m, std::span<const Int> v) {
  if (v.size() != m.cols()) throw InputError("vector has wrong length");
  std::vector<Int> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] = checked_add(out[r], checked_mul(m(r, c), v[c]));
  return out;
}

}  // namespace bott
