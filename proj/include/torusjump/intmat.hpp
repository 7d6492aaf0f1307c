#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace torusjump {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;  // row-major, rows*cols entries

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
};

// Nonzero elementary divisors d1 | d2 | ... of the Smith normal form.
std::vector<mpz_class> smith_divisors(IntMatrix m);

std::size_t rank(const IntMatrix& m);

}  // namespace torusjump
