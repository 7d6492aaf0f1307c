#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "torusjump/groebner.hpp"
#include "torusjump/polynomial.hpp"

namespace torusjump {

// Dense matrix of polynomials; 0-row or 0-column shapes are legal (they are
// the empty differentials at complex boundaries).
class PolyMatrix {
public:
  PolyMatrix(LaurentRing ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(const LaurentRing& ring, std::size_t n);

  const LaurentRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t i, std::size_t j) const;
  Polynomial& at(std::size_t i, std::size_t j);

  bool is_zero() const;
  bool operator==(const PolyMatrix& other) const;

  PolyMatrix reduce_coefficients(const CoeffDomain& target) const;
  PolyMatrix scale_vars(std::span<const mpq_class> lambda) const;

private:
  LaurentRing ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

PolyMatrix transpose(const PolyMatrix& a);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);

// Rank over the fraction field k(t1..tN) by fraction-free elimination;
// integer matrices are reduced to rational coefficients first.
std::size_t rank(const PolyMatrix& a, const Caps& caps = {});

// Ideal of all k x k minors; I_0 = <1>, and k beyond the shape gives <0>.
Ideal determinantal_ideal(const PolyMatrix& a, std::size_t k,
                          const Caps& caps = {});

// Determinant of the square submatrix on the given index sets.
Polynomial minor_det(const PolyMatrix& a, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols);

}  // namespace torusjump
