#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torusjump {

// F_{p^r} with a deterministic irreducible modulus: the first monic degree-r
// polynomial, in base-p counting order of its lower coefficients, that passes
// the Frobenius irreducibility test.  Elements are coefficient vectors of
// length r with entries in [0, p).
class GFExt {
public:
  using Elem = std::vector<long>;

  GFExt(long p, int r);

  long p() const { return p_; }
  int r() const { return r_; }
  const std::vector<long>& modulus() const { return mod_; }

  Elem zero() const { return Elem(static_cast<std::size_t>(r_), 0); }
  Elem one() const { return from_int(1); }
  Elem from_int(long v) const;
  // Reduce arbitrary coefficients into canonical form (mod p, length r).
  Elem make(std::vector<long> coeffs) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::uint64_t e) const;

  std::string to_string(const Elem& a) const;

private:
  long p_;
  int r_;
  std::vector<long> mod_;
};

}  // namespace torusjump
