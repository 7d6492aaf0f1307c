#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace torusjump {

// Exponent vector; all exponents non-negative.  Laurent behavior enters only
// through saturation at the product of the variables, never through negative
// exponents.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // Quotient this / m; caller guarantees m.divides(*this).
  Monomial quotient_by(const Monomial& m) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<std::uint32_t> e_;
};

struct MonomialOrder {
  enum class Kind { DegRevLex, Lex, Elimination };
  Kind kind = Kind::DegRevLex;
  // Elimination only: the trailing `block` variables dominate.
  int block = 0;

  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(int trailing) {
    return {Kind::Elimination, trailing};
  }

  // Sign of a - b in the order: negative, zero, positive.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace torusjump
