#include <algorithm>

#include "scalc/fpgroup.hpp"
#include "scalc/matrix.hpp"

namespace scalc {

BigInt determinant(const BigMatrix& input) {
  if (!input.square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  BigMatrix a = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

using boost::multiprecision::abs;

// Locates the nonzero entry of least absolute value in the trailing block.
bool find_pivot(const BigMatrix& a, std::size_t t, std::size_t& row, std::size_t& col) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      const BigInt v = abs(a(i, j));
      if (!found || v < best) {
        best = v;
        row = i;
        col = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<std::int64_t> smith_normal_form(const IntMatrix& m) {
  BigMatrix a = to_big(m);
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::vector<BigInt> diag;

  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    a.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const BigInt q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) dirty = true;
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const BigInt q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // Enforce divisibility of the remaining block by the pivot.
        std::size_t bad_row = a.rows();
        for (std::size_t i = t + 1; i < a.rows() && bad_row == a.rows(); ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a(i, j) % a(t, t) != 0) {
              bad_row = i;
              break;
            }
        if (bad_row == a.rows()) break;
        for (std::size_t j = t; j < a.cols(); ++j) a(t, j) += a(bad_row, j);
      }
      // A smaller remainder appeared in row/column t: make it the pivot.
      std::size_t r = t, c = t;
      BigInt best = abs(a(t, t));
      for (std::size_t i = t + 1; i < a.rows(); ++i)
        if (a(i, t) != 0 && abs(a(i, t)) < best) { best = abs(a(i, t)); r = i; c = t; }
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (a(t, j) != 0 && abs(a(t, j)) < best) { best = abs(a(t, j)); r = t; c = j; }
      a.swap_rows(t, r);
      a.swap_cols(t, c);
    }
    diag.push_back(abs(a(t, t)));
  }

  std::vector<std::int64_t> out;
  out.reserve(diag.size());
  for (const auto& d : diag) out.push_back(narrow(d));
  return out;
}

}  // namespace scalc
