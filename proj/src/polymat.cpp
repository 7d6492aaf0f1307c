#include "torusjump/polymat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "torusjump/errors.hpp"

namespace torusjump {

PolyMatrix::PolyMatrix(LaurentRing ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(const LaurentRing& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::one(ring);
  return m;
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw std::out_of_range("matrix index out of range");
  return entries_[i * cols_ + j];
}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_)
    throw std::out_of_range("matrix index out of range");
  return entries_[i * cols_ + j];
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return ring_ == other.ring_ && rows_ == other.rows_ &&
         cols_ == other.cols_ && entries_ == other.entries_;
}

PolyMatrix PolyMatrix::reduce_coefficients(const CoeffDomain& target) const {
  PolyMatrix r(ring_.with_coeff(target), rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k].reduce_coefficients(target);
  return r;
}

PolyMatrix PolyMatrix::scale_vars(std::span<const mpq_class> lambda) const {
  PolyMatrix r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k].scale_vars(lambda);
  return r;
}

PolyMatrix transpose(const PolyMatrix& a) {
  PolyMatrix r(a.ring(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.ring() != b.ring()) throw RingMismatchError("matrix product across rings");
  if (a.cols() != b.rows())
    throw ShapeError("inner dimensions disagree: " + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()));
  PolyMatrix r(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial s(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k)
        s = s + a.at(i, k) * b.at(k, j);
      r.at(i, j) = std::move(s);
    }
  return r;
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.ring() != b.ring()) throw RingMismatchError("stack across rings");
  if (a.rows() != b.rows()) throw ShapeError("row counts disagree");
  PolyMatrix r(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.ring() != b.ring())
    throw RingMismatchError("block diagonal across rings");
  PolyMatrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

std::size_t rank(const PolyMatrix& a, const Caps& caps) {
  PolyMatrix m = a.ring().coeff().kind() == CoeffKind::Integer
                     ? a.reduce_coefficients(CoeffDomain::rationals())
                     : a;
  std::size_t steps = std::min(m.rows(), m.cols());
  // Bareiss: after step k every entry is a (k+1)-minor of the permuted input,
  // so division by the previous pivot is exact.
  Polynomial prev = Polynomial::one(m.ring());
  std::size_t r = 0;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t pi = s, pj = s;
    bool found = false;
    for (std::size_t i = s; i < m.rows(); ++i)
      for (std::size_t j = s; j < m.cols(); ++j) {
        const Polynomial& e = m.at(i, j);
        if (e.is_zero()) continue;
        if (!found ||
            e.term_count() < m.at(pi, pj).term_count() ||
            (e.term_count() == m.at(pi, pj).term_count() &&
             e.degree() < m.at(pi, pj).degree())) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != s)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(s, j), m.at(pi, j));
    if (pj != s)
      for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, s), m.at(i, pj));
    ++r;
    for (std::size_t i = s + 1; i < m.rows(); ++i) {
      for (std::size_t j = s + 1; j < m.cols(); ++j) {
        Polynomial num = m.at(s, s) * m.at(i, j) - m.at(i, s) * m.at(s, j);
        m.at(i, j) = num.is_zero() ? std::move(num) : num.exact_div(prev);
        if (m.at(i, j).degree() > caps.max_degree)
          throw ResourceLimitError("degree cap exceeded during rank elimination");
      }
      m.at(i, s) = Polynomial::zero(m.ring());
    }
    prev = m.at(s, s);
  }
  return r;
}

namespace {

// Binomial with saturation at `cap` to keep the overflow guard cheap.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (n - k + i) / i;
  }
  return r;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Polynomial minor_det(const PolyMatrix& a, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols) {
  if (rows.size() != cols.size())
    throw ShapeError("minor needs equally many rows and columns");
  std::size_t k = rows.size();
  if (k == 0) return Polynomial::one(a.ring());
  // Expansion along successive rows: level j of the table holds determinants
  // of rows[0..j) against each j-subset of the chosen columns.
  std::vector<Polynomial> table(std::size_t{1} << k, Polynomial(a.ring()));
  table[0] = Polynomial::one(a.ring());
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    std::size_t j = static_cast<std::size_t>(std::popcount(mask));
    Polynomial det(a.ring());
    std::size_t pos = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if (!(mask & (std::size_t{1} << b))) continue;
      const Polynomial& entry = a.at(rows[j - 1], cols[b]);
      if (!entry.is_zero()) {
        Polynomial part = entry * table[mask ^ (std::size_t{1} << b)];
        det = ((j - 1 + pos) % 2 == 0) ? det + part : det - part;
      }
      ++pos;
    }
    table[mask] = std::move(det);
  }
  return table[table.size() - 1];
}

Ideal determinantal_ideal(const PolyMatrix& a, std::size_t k,
                          const Caps& caps) {
  if (k == 0) return Ideal::unit(a.ring());
  if (k > a.rows() || k > a.cols()) return Ideal::zero(a.ring());
  std::size_t nrow = binomial_capped(a.rows(), k, caps.max_minors);
  std::size_t ncol = binomial_capped(a.cols(), k, caps.max_minors);
  if (nrow > caps.max_minors || ncol > caps.max_minors ||
      nrow > caps.max_minors / ncol)
    throw ResourceLimitError("minor count exceeds cap " +
                             std::to_string(caps.max_minors));
  std::vector<Polynomial> gens;
  std::vector<std::size_t> rowsel(k), colsel(k);
  for (std::size_t i = 0; i < k; ++i) rowsel[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) colsel[i] = i;
    do {
      Polynomial m = minor_det(a, rowsel, colsel);
      if (!m.is_zero()) gens.push_back(std::move(m));
    } while (next_combination(colsel, a.cols()));
  } while (next_combination(rowsel, a.rows()));
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace torusjump
