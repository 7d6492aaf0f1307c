#include "torusjump/intmat.hpp"

#include <algorithm>

namespace torusjump {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// Euclid-style clearing of column t and row t against the pivot at (t,t);
// returns true once both are zero outside the pivot.
void clear_cross(IntMatrix& m, std::size_t t) {
  while (true) {
    bool swapped = false;
    for (std::size_t i = t + 1; i < m.rows; ++i) {
      while (m.at(i, t) != 0) {
        mpz_class q = m.at(i, t) / m.at(t, t);
        if (q != 0)
          for (std::size_t j = 0; j < m.cols; ++j)
            m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {
          swap_rows(m, i, t);
          swapped = true;
        }
      }
    }
    for (std::size_t j = t + 1; j < m.cols; ++j) {
      while (m.at(t, j) != 0) {
        mpz_class q = m.at(t, j) / m.at(t, t);
        if (q != 0)
          for (std::size_t i = 0; i < m.rows; ++i)
            m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          swap_cols(m, j, t);
          swapped = true;
        }
      }
    }
    if (!swapped) return;
  }
}

}  // namespace

std::vector<mpz_class> smith_divisors(IntMatrix m) {
  std::vector<mpz_class> divs;
  std::size_t t = 0;
  while (t < m.rows && t < m.cols) {
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (!found || cmp(abs(m.at(i, j)), abs(m.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(m, pi, t);
    swap_cols(m, pj, t);
    while (true) {
      clear_cross(m, t);
      bool fixed = true;
      for (std::size_t i = t + 1; i < m.rows && fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols && fixed; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (std::size_t c = 0; c < m.cols; ++c)
              m.at(t, c) += m.at(i, c);
            fixed = false;
          }
      if (fixed) break;
    }
    divs.push_back(abs(m.at(t, t)));
    ++t;
  }
  return divs;
}

std::size_t rank(const IntMatrix& m) {
  return smith_divisors(m).size();
}

}  // namespace torusjump
