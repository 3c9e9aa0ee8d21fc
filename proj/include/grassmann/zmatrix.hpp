#pragma once
// Dense integer matrices with arbitrary-precision entries, just enough for
// coboundary bookkeeping and Smith normal form.

#include <gmpxx.h>

#include <vector>

namespace gr {

struct ZMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> a;  // row-major

  ZMatrix() = default;
  ZMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  mpz_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }
};

ZMatrix multiply(const ZMatrix& A, const ZMatrix& B);

}  // namespace gr
