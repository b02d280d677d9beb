#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace knotoid {

// Exact integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  static LaurentPoly constant(Coeff c) { return monomial(0, c); }
  static LaurentPoly monomial(int exp, Coeff c);

  Coeff coeff(int exp) const;
  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& add_term(int exp, Coeff c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(Coeff k);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, Coeff k) { return a *= k; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return *this * -1; }

  bool operator==(const LaurentPoly&) const = default;

  // Human form, highest degree first: "t^2 - 2t", "0".
  std::string to_string() const;
  // Compact deterministic form "exp:coef,..." in increasing exponent, "0" for zero.
  std::string key() const;

 private:
  std::map<int, Coeff> terms_;
};

}  // namespace knotoid
