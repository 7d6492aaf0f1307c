#include "torusjump/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace torusjump {

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  if (e_.size() != m.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
  return r;
}

Monomial Monomial::quotient_by(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i)
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exponents().size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

std::uint64_t degree_range(const Monomial& m, std::size_t lo, std::size_t hi) {
  std::uint64_t d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m[i];
  return d;
}

// Graded reverse lexicographic on the variable slice [lo, hi).
int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                    std::size_t hi) {
  std::uint64_t da = degree_range(a, lo, hi), db = degree_range(b, lo, hi);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::size_t n = a.nvars();
  if (n != b.nvars())
    throw std::logic_error("comparing monomials with different variable counts");
  switch (kind) {
    case Kind::DegRevLex:
      return degrevlex_range(a, b, 0, n);
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Elimination: {
      std::size_t split = n - static_cast<std::size_t>(block);
      if (int c = degrevlex_range(a, b, split, n)) return c;
      return degrevlex_range(a, b, 0, split);
    }
  }
  return 0;
}

}  // namespace torusjump
