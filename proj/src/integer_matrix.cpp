#include "strateuler/integer_matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace strateuler {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

bool is_upper_unitriangular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

IntMatrix invert_upper_unitriangular(const IntMatrix& m) {
  if (!is_upper_unitriangular(m)) {
    throw NotUnitriangular("matrix is not upper unitriangular");
  }
  const std::size_t n = m.rows();
  IntMatrix inv = IntMatrix::identity(n);
  // Column j of the inverse solves m x = e_j; rows above j by back
  // substitution, rows below j stay zero.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j; ii-- > 0;) {
      Int acc = 0;
      for (std::size_t k = ii + 1; k <= j; ++k) {
        acc = checked_add(acc, checked_mul(m(ii, k), inv(k, j)));
      }
      inv(ii, j) = checked_sub(0, acc);
    }
  }
  return inv;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Int num = checked_sub(checked_mul(a(i, j), a(k, k)),
                                    checked_mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;  // exact by Sylvester's identity
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << "]\n";
  }
  return os;
}

}  // namespace strateuler
