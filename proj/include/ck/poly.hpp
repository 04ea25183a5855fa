#pragma once
// Exact Laurent polynomials over Z in one variable (t) and in two (s, t).
// Zero coefficients are never stored; the zero polynomial has an empty map.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ck/arith.hpp"

namespace ck {

struct LaurentPoly {
  std::map<Z, Z> c;  // exponent -> nonzero coefficient

  static LaurentPoly zero();
  static LaurentPoly one();
  static LaurentPoly monomial(Z coeff, Z exp);

  Z coeff(Z exp) const;
  void add_term(Z coeff, Z exp);
  bool is_zero() const;
  Z min_deg() const;  // nonzero polynomials only
  Z max_deg() const;
  Z eval(Z x) const;  // x must be +1 or -1 so t^-k stays integral
  LaurentPoly shifted(Z k) const;  // multiply by t^k
  LaurentPoly mirrored() const;    // t -> 1/t
  bool symmetric() const;          // equal to its mirror

  bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(Z k, const LaurentPoly& a);

// 1 + t + ... + t^(n-1), n >= 1.
LaurentPoly geometric_sum(Z n);

// Exact quotient a / b; nullopt when b is zero or the division leaves a
// remainder.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a,
                                        const LaurentPoly& b);

// a == +- t^k b for some integer k.
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

// Increasing exponent order, e.g. "t^-2 - t^-1 + 1 - t + t^2".
std::string to_string(const LaurentPoly& a);

struct LaurentPoly2 {
  std::map<std::pair<Z, Z>, Z> c;  // (s exponent, t exponent) -> coefficient

  static LaurentPoly2 zero();
  static LaurentPoly2 one();
  static LaurentPoly2 monomial(Z coeff, Z es, Z et);

  Z coeff(Z es, Z et) const;
  void add_term(Z coeff, Z es, Z et);
  bool is_zero() const;

  bool operator==(const LaurentPoly2&) const = default;
};

LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b);
LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b);
LaurentPoly2 operator-(const LaurentPoly2& a);
LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);

// Substitute s -> t^a, t -> t^b.
LaurentPoly specialize(const LaurentPoly2& f, Z a, Z b);

// Exact quotient f / (s - 1); nullopt when the division leaves a remainder.
std::optional<LaurentPoly2> divide_by_s_minus_one(const LaurentPoly2& f);

// a == +- s^j t^k b for some integers j, k.
bool unit_equivalent(const LaurentPoly2& a, const LaurentPoly2& b);

std::string to_string(const LaurentPoly2& a);

}  // namespace ck
