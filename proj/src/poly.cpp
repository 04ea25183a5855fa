// Exact Laurent polynomial arithmetic; see ck/poly.hpp.

#include "ck/poly.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ck {

LaurentPoly LaurentPoly::zero() { return {}; }

LaurentPoly LaurentPoly::one() { return monomial(1, 0); }

LaurentPoly LaurentPoly::monomial(Z coeff, Z exp) {
  LaurentPoly p;
  p.add_term(coeff, exp);
  return p;
}

Z LaurentPoly::coeff(Z exp) const {
  auto it = c.find(exp);
  return it == c.end() ? 0 : it->second;
}

void LaurentPoly::add_term(Z coeff, Z exp) {
  if (coeff == 0) return;
  auto [it, fresh] = c.try_emplace(exp, coeff);
  if (!fresh && (it->second += coeff) == 0) c.erase(it);
}

bool LaurentPoly::is_zero() const { return c.empty(); }

Z LaurentPoly::min_deg() const {
  if (c.empty()) throw std::logic_error("degree of zero polynomial");
  return c.begin()->first;
}

Z LaurentPoly::max_deg() const {
  if (c.empty()) throw std::logic_error("degree of zero polynomial");
  return c.rbegin()->first;
}

Z LaurentPoly::eval(Z x) const {
  if (x != 1 && x != -1) throw std::invalid_argument("eval expects +-1");
  Z s = 0;
  for (auto& [e, v] : c) s += (x == 1 || mod(e, 2) == 0) ? v : -v;
  return s;
}

LaurentPoly LaurentPoly::shifted(Z k) const {
  LaurentPoly r;
  for (auto& [e, v] : c) r.c.emplace(e + k, v);
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (auto& [e, v] : c) r.c.emplace(-e, v);
  return r;
}

bool LaurentPoly::symmetric() const { return *this == mirrored(); }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, v] : b.c) r.add_term(v, e);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, v] : b.c) r.add_term(-v, e);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (auto& [e, v] : a.c) r.c.emplace(e, -v);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto& [ea, va] : a.c)
    for (auto& [eb, vb] : b.c) r.add_term(va * vb, ea + eb);
  return r;
}

LaurentPoly operator*(Z k, const LaurentPoly& a) {
  LaurentPoly r;
  if (k != 0)
    for (auto& [e, v] : a.c) r.c.emplace(e, k * v);
  return r;
}

LaurentPoly geometric_sum(Z n) {
  if (n < 1) throw std::invalid_argument("geometric_sum expects n >= 1");
  LaurentPoly r;
  for (Z e = 0; e < n; ++e) r.c.emplace(e, 1);
  return r;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a,
                                        const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly::zero();
  // Shift both to ordinary polynomials and long-divide from the top.
  LaurentPoly num = a.shifted(-a.min_deg());
  LaurentPoly den = b.shifted(-b.min_deg());
  Z lead = den.c.rbegin()->second;
  LaurentPoly q;
  while (!num.is_zero() && num.max_deg() >= den.max_deg()) {
    Z top = num.c.rbegin()->second;
    if (top % lead != 0) return std::nullopt;
    Z qc = top / lead, qe = num.max_deg() - den.max_deg();
    q.add_term(qc, qe);
    num = num - LaurentPoly::monomial(qc, qe) * den;
  }
  if (!num.is_zero()) return std::nullopt;
  return q.shifted(a.min_deg() - b.min_deg());
}

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Z k = a.min_deg() - b.min_deg();
  LaurentPoly s = b.shifted(k);
  return a == s || a == -s;
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto& [e, v] : a.c) {
    Z m = std::abs(v);
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    if (m != 1 || e == 0) out += std::to_string(m);
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly2 LaurentPoly2::zero() { return {}; }

LaurentPoly2 LaurentPoly2::one() { return monomial(1, 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(Z coeff, Z es, Z et) {
  LaurentPoly2 p;
  p.add_term(coeff, es, et);
  return p;
}

Z LaurentPoly2::coeff(Z es, Z et) const {
  auto it = c.find({es, et});
  return it == c.end() ? 0 : it->second;
}

void LaurentPoly2::add_term(Z coeff, Z es, Z et) {
  if (coeff == 0) return;
  auto [it, fresh] = c.try_emplace({es, et}, coeff);
  if (!fresh && (it->second += coeff) == 0) c.erase(it);
}

bool LaurentPoly2::is_zero() const { return c.empty(); }

LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r = a;
  for (auto& [e, v] : b.c) r.add_term(v, e.first, e.second);
  return r;
}

LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r = a;
  for (auto& [e, v] : b.c) r.add_term(-v, e.first, e.second);
  return r;
}

LaurentPoly2 operator-(const LaurentPoly2& a) {
  LaurentPoly2 r;
  for (auto& [e, v] : a.c) r.c.emplace(e, -v);
  return r;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (auto& [ea, va] : a.c)
    for (auto& [eb, vb] : b.c)
      r.add_term(va * vb, ea.first + eb.first, ea.second + eb.second);
  return r;
}

LaurentPoly specialize(const LaurentPoly2& f, Z a, Z b) {
  LaurentPoly r;
  for (auto& [e, v] : f.c) r.add_term(v, a * e.first + b * e.second);
  return r;
}

std::optional<LaurentPoly2> divide_by_s_minus_one(const LaurentPoly2& f) {
  if (f.is_zero()) return LaurentPoly2::zero();
  // Split into s-layers f = sum_i s^i A_i(t); the quotient layers are the
  // negated partial sums -(A_0 + ... + A_i), and the division is exact iff
  // the total sum vanishes (i.e. f(1, t) = 0).
  Z smin = f.c.begin()->first.first;
  std::map<Z, LaurentPoly> layers;
  for (auto& [e, v] : f.c) layers[e.first - smin].add_term(v, e.second);
  Z smax = layers.rbegin()->first;
  LaurentPoly partial;
  LaurentPoly2 q;
  for (Z i = 0; i < smax; ++i) {
    if (auto it = layers.find(i); it != layers.end())
      partial = partial + it->second;
    for (auto& [et, v] : partial.c) q.add_term(-v, i + smin, et);
  }
  partial = partial + layers.rbegin()->second;
  if (!partial.is_zero()) return std::nullopt;
  return q;
}

bool unit_equivalent(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto ea = a.c.begin()->first, eb = b.c.begin()->first;
  Z ds = ea.first - eb.first, dt = ea.second - eb.second;
  LaurentPoly2 s;
  for (auto& [e, v] : b.c) s.c.emplace(std::pair{e.first + ds, e.second + dt}, v);
  return a == s || a == -s;
}

std::string to_string(const LaurentPoly2& a) {
  if (a.is_zero()) return "0";
  std::string out;
  auto var = [](const char* name, Z e) -> std::string {
    if (e == 0) return "";
    std::string r = name;
    if (e != 1) r += "^" + std::to_string(e);
    return r;
  };
  for (auto& [e, v] : a.c) {
    Z m = std::abs(v);
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    std::string vars = var("s", e.first) + var("t", e.second);
    if (m != 1 || vars.empty()) out += std::to_string(m);
    out += vars;
  }
  return out;
}

}  // namespace ck
