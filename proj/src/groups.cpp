// Word arithmetic in the free group on s, t; the standard relator built from
// the structure words s_*, t_*; rewriting maps driven by continued fractions;
// the isomorphism verification for l in {2, p}; restricted Fox calculus.

#include "ck/groups.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace ck {

namespace {

// Letters cancel exactly when they are negatives of each other.
void push_letter(std::vector<int>& a, int x) {
  if (!a.empty() && a.back() == -x) {
    a.pop_back();
  } else {
    a.push_back(x);
  }
}

void push_word(std::vector<int>& a, const std::vector<int>& b) {
  for (int x : b) push_letter(a, x);
}

Word from_letters(std::vector<int> a) {
  Word w;
  w.a = std::move(a);
  return w;
}

}  // namespace

Word word(const std::string& letters) {
  std::vector<int> a;
  for (char ch : letters) {
    int x = 0;
    switch (ch) {
      case 's': x = 1; break;
      case 'S': x = -1; break;
      case 't': x = 2; break;
      case 'T': x = -2; break;
      default:
        throw InvalidParameters("word letters must be one of s, S, t, T");
    }
    push_letter(a, x);
  }
  return from_letters(std::move(a));
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.a.size());
  for (int x : w.a) {
    switch (x) {
      case 1: out += 's'; break;
      case -1: out += 'S'; break;
      case 2: out += 't'; break;
      case -2: out += 'T'; break;
    }
  }
  return out;
}

Word concat(const Word& x, const Word& y) {
  std::vector<int> a = x.a;
  push_word(a, y.a);
  return from_letters(std::move(a));
}

Word inverse(const Word& x) {
  std::vector<int> a;
  a.reserve(x.a.size());
  for (auto it = x.a.rbegin(); it != x.a.rend(); ++it) a.push_back(-*it);
  return from_letters(std::move(a));
}

Word power(const Word& x, Z n) {
  Word base = n < 0 ? inverse(x) : x;
  Z reps = n < 0 ? -n : n;
  std::vector<int> a;
  for (Z i = 0; i < reps; ++i) push_word(a, base.a);
  return from_letters(std::move(a));
}

std::pair<Z, Z> exponent_sums(const Word& w) {
  Z es = 0, et = 0;
  for (int x : w.a) {
    if (x == 1) ++es;
    if (x == -1) --es;
    if (x == 2) ++et;
    if (x == -2) --et;
  }
  return {es, et};
}

Word substitute(const Word& w, const Word& img_s, const Word& img_t) {
  const Word inv_s = inverse(img_s);
  const Word inv_t = inverse(img_t);
  std::vector<int> a;
  for (int x : w.a) {
    switch (x) {
      case 1: push_word(a, img_s.a); break;
      case -1: push_word(a, inv_s.a); break;
      case 2: push_word(a, img_t.a); break;
      case -2: push_word(a, inv_t.a); break;
    }
  }
  return from_letters(std::move(a));
}

Word cyclic_reduce(const Word& w) {
  size_t lo = 0, hi = w.a.size();
  while (hi - lo >= 2 && w.a[lo] == -w.a[hi - 1]) {
    ++lo;
    --hi;
  }
  return from_letters(std::vector<int>(w.a.begin() + lo, w.a.begin() + hi));
}

bool cyclic_equal(const Word& x, const Word& y) {
  Word cx = cyclic_reduce(x);
  Word cy = cyclic_reduce(y);
  if (cx.a.size() != cy.a.size()) return false;
  if (cx.a.empty()) return true;
  std::vector<int> doubled = cx.a;
  doubled.insert(doubled.end(), cx.a.begin(), cx.a.end());
  return std::search(doubled.begin(), doubled.end(), cy.a.begin(),
                     cy.a.end()) != doubled.end();
}

std::vector<int> theta_vector(Z p, Z q, Z l) {
  if (p < 1 || l < 1 || l > p) {
    throw InvalidParameters("theta_vector needs p >= 1 and l in [1, p]");
  }
  Z k = mod((l - 1) * q, p) + 1;
  std::vector<int> theta(static_cast<size_t>(p));
  for (Z i = 0; i < p; ++i) {
    theta[static_cast<size_t>(i)] = mod(i * q, p) < k ? 1 : 0;
  }
  return theta;
}

Word s_star(Z p, Z q, Z l) {
  std::vector<int> theta = theta_vector(p, q, l);
  std::vector<int> a{1};
  for (Z j = l; j < p; ++j) {
    if (theta[static_cast<size_t>(j)]) push_letter(a, 2);
    push_letter(a, 1);
  }
  return from_letters(std::move(a));
}

Word t_star(Z p, Z q, Z l) {
  std::vector<int> theta = theta_vector(p, q, l);
  std::vector<int> a;
  if (theta[0]) push_letter(a, 2);
  for (Z j = 1; j < l; ++j) {
    push_letter(a, 1);
    if (theta[static_cast<size_t>(j)]) push_letter(a, 2);
  }
  return from_letters(std::move(a));
}

Word standard_relation(const Constrained& k) {
  const Z qp = inverse_q(k);
  const Word s_word = s_star(k.p, qp, k.l);
  const Word t_word = t_star(k.p, qp, k.l);
  // eps_i = (-1)^floor(i v / u); the formula extends past i = 2u, so the
  // neighbour signs at the seam need no special casing.
  auto eps = [&](Z i) { return (i * k.v / k.u) % 2 == 0 ? 1 : -1; };
  std::vector<int> a;
  for (Z i = 1; i <= 2 * k.u; ++i) {
    if (i % 2 == 1) {
      push_word(a, power(s_word, eps(i)).a);
    } else if (eps(i - 1) == -eps(i + 1)) {
      push_letter(a, eps(i) == 1 ? 2 : -2);
    } else {
      push_word(a, power(t_word, eps(i)).a);
    }
  }
  return from_letters(std::move(a));
}

Word apply_primitive(const MapPrimitive& m, const Word& w) {
  const Word s1 = word("s");
  const Word t1 = word("t");
  switch (m.kind) {
    case MapKind::F1: return substitute(w, s1, concat(power(s1, m.n), t1));
    case MapKind::F2: return substitute(w, concat(power(t1, m.n), s1), t1);
    case MapKind::G1: return substitute(w, s1, concat(t1, power(s1, m.n)));
    case MapKind::G2: return substitute(w, concat(s1, power(t1, m.n)), t1);
    case MapKind::H0: return substitute(w, t1, s1);
    case MapKind::H1: return substitute(w, t1, inverse(s1));
    case MapKind::H2: return substitute(w, inverse(s1), inverse(t1));
  }
  throw InvalidParameters("unknown map primitive");
}

Word apply_map(const RewriteMap& m, const Word& w) {
  Word out = w;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    out = apply_primitive(*it, out);
  }
  return out;
}

namespace {

// The chain for [a_0; a_1, ..., a_m] applies f_0^{-a_0} first, so it sits at
// the back of the composition vector.
RewriteMap rewrite_chain(const Fraction& x, MapKind odd, MapKind even) {
  std::vector<Z> cf = continued_fraction(x).a;
  RewriteMap m;
  for (size_t i = cf.size(); i-- > 0;) {
    Z n = -cf[i];
    if (i + 1 == cf.size()) n += 1;
    m.push_back({i % 2 == 1 ? odd : even, n});
  }
  return m;
}

}  // namespace

RewriteMap rewrite_f(const Fraction& x) {
  return rewrite_chain(x, MapKind::F1, MapKind::F2);
}

RewriteMap rewrite_F(const Fraction& x) {
  RewriteMap m{{MapKind::F1, 1}, {MapKind::F2, -1}};
  RewriteMap tail = rewrite_f(x);
  m.insert(m.end(), tail.begin(), tail.end());
  return m;
}

RewriteMap rewrite_g(const Fraction& x) {
  return rewrite_chain(x, MapKind::G1, MapKind::G2);
}

RewriteMap rewrite_G(const Fraction& x) {
  RewriteMap m{{MapKind::G1, 1}, {MapKind::G2, -1}};
  RewriteMap tail = rewrite_g(x);
  m.insert(m.end(), tail.begin(), tail.end());
  return m;
}

Mat2 apply_columns(const RewriteMap& m, Mat2 mat) {
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    switch (it->kind) {
      case MapKind::F1:
        mat.a += it->n * mat.b;
        mat.c += it->n * mat.d;
        break;
      case MapKind::F2:
        mat.b += it->n * mat.a;
        mat.d += it->n * mat.c;
        break;
      default:
        throw InvalidParameters("only F1 and F2 act by column operations");
    }
  }
  return mat;
}

bool verify_isomorphism(Z p, Z q, Z l, Z u, Z v) {
  if (p < 2) throw InvalidRange("verify_isomorphism needs p > 1");
  q = mod(q, p);
  if (q == 0 || gcdz(p, q) != 1) {
    throw InvalidRange("verify_isomorphism needs q invertible mod p");
  }
  if (l != 2 && l != p) throw InvalidRange("verify_isomorphism needs l in {2, p}");
  if (u % 2 == 0 || v <= 0 || 2 * v >= u || gcdz(u, v) != 1) {
    throw InvalidRange("verify_isomorphism needs odd u > 2v > 0 coprime");
  }
  const Z qp = mod_inverse(q, p);
  const Word ts = word("ts");
  const Word st = word("st");
  const Word sq = s_star(p, q, 2);

  bool ok = true;
  // Word identities feeding the main computation.
  RewriteMap f = rewrite_f(frac(q, p));
  RewriteMap g = rewrite_g(frac(q, p));
  ok = ok && apply_map(f, concat(sq, ts)) == ts;
  ok = ok && apply_map(f, concat(sq, st)) == st;
  ok = ok && apply_map(g, concat(ts, sq)) == ts;
  ok = ok && apply_map(g, concat(st, sq)) == st;

  const Word sqp = s_star(p, qp, 2);
  const MapPrimitive h0{MapKind::H0, 1};
  ok = ok && apply_map(rewrite_F(frac(q, p)), word("t")) ==
                 apply_primitive(h0, concat(sqp, ts));
  ok = ok && apply_map(rewrite_G(frac(q, p)), word("t")) ==
                 apply_primitive(h0, concat(st, sqp));

  // The relator of C(p, q', l, u, v) maps to the relator of C(p, q, l, u, v)
  // up to circular permutation, inverted generators when v is odd.
  const Word omega_qp = standard_relation(validate_constrained(p, qp, l, u, v));
  const Word omega_q = standard_relation(validate_constrained(p, q, l, u, v));
  Word lhs;
  if (l == 2) {
    lhs = apply_primitive(h0, apply_map(rewrite_F(frac(q, p)), omega_qp));
  } else {
    lhs = apply_primitive(h0, apply_map(rewrite_G(frac(p - q, p)), omega_qp));
  }
  Word rhs = v % 2 == 1 ? apply_primitive({MapKind::H2, 1}, omega_q) : omega_q;
  ok = ok && cyclic_equal(lhs, rhs);

  // Column-operation identity for the intersection matrix.
  Mat2 start{p, q, 0, 1};
  Mat2 expect{1, 0, qp, p};
  ok = ok && apply_columns(rewrite_F(frac(q, p)), start) == expect;
  return ok;
}

namespace {

// phi(d w / d x) where phi sends a word with prefix sums (es, et) to
// t^{alpha es + beta et}; x is t when by_t, else s.
LaurentPoly fox_one(const Word& w, Z alpha, Z beta, bool by_t) {
  LaurentPoly out = LaurentPoly::zero();
  Z es = 0, et = 0;
  const int pos = by_t ? 2 : 1;
  for (int x : w.a) {
    if (x == pos) out.add_term(1, alpha * es + beta * et);
    if (x == 1) ++es;
    if (x == -1) --es;
    if (x == 2) ++et;
    if (x == -2) --et;
    if (x == -pos) out.add_term(-1, alpha * es + beta * et);
  }
  return out;
}

LaurentPoly2 fox_two(const Word& w) {
  LaurentPoly2 out = LaurentPoly2::zero();
  Z es = 0, et = 0;
  for (int x : w.a) {
    if (x == 2) out.add_term(1, es, et);
    if (x == 1) ++es;
    if (x == -1) --es;
    if (x == 2) ++et;
    if (x == -2) --et;
    if (x == -2) out.add_term(-1, es, et);
  }
  return out;
}

}  // namespace

LaurentPoly fox_alexander(const Word& relator, Z alpha, Z beta) {
  if (alpha == 0 && beta == 0) {
    throw InvalidParameters("fox_alexander needs a nontrivial abelianization");
  }
  if (gcdz(std::llabs(alpha), std::llabs(beta)) != 1) {
    throw InvalidParameters("fox_alexander needs gcd(alpha, beta) = 1");
  }
  auto [es, et] = exponent_sums(relator);
  if (alpha * es + beta * et != 0) {
    throw InvalidParameters("relator does not abelianize to zero");
  }
  // Divide out the denominator coming from the differentiated generator:
  // the quotient phi(dw/dt) (t - 1) / (t^alpha - 1) is the polynomial.
  const bool by_t = alpha != 0;
  const Z denom_exp = by_t ? alpha : beta;
  LaurentPoly numer =
      fox_one(relator, alpha, beta, by_t) * (LaurentPoly::monomial(1, 1) -
                                             LaurentPoly::one());
  LaurentPoly denom =
      LaurentPoly::monomial(1, denom_exp) - LaurentPoly::one();
  auto quotient = divide_exact(numer, denom);
  if (!quotient) {
    throw NonExactDivision("Fox quotient is not a Laurent polynomial");
  }
  return *quotient;
}

LaurentPoly2 fox_alexander_st(const Word& relator) {
  auto [es, et] = exponent_sums(relator);
  if (es != 0 || et != 0) {
    throw InvalidParameters("two-variable Fox form needs zero exponent sums");
  }
  auto quotient = divide_by_s_minus_one(fox_two(relator));
  if (!quotient) {
    throw NonExactDivision("Fox quotient is not divisible by s - 1");
  }
  return *quotient;
}

LaurentPoly knot_alexander(const Constrained& k) {
  const Z kp = k_prime_of(k);
  const Z d = kp == 0 ? k.p : gcdz(k.p, std::llabs(kp));
  if (d != 1) {
    throw TorsionTarget("knot_alexander needs torsion-free first homology");
  }
  LaurentPoly delta = fox_alexander(standard_relation(k), -kp, k.p);
  if (delta.is_zero()) return delta;
  // Normalize to the symmetric representative with value 1 at t = 1 when one
  // exists; otherwise anchor the lowest exponent at zero.
  Z lo = delta.min_deg(), hi = delta.max_deg();
  if ((lo + hi) % 2 == 0) {
    LaurentPoly centered = delta.shifted(-(lo + hi) / 2);
    if (centered.symmetric()) {
      if (centered.eval(1) < 0) centered = -centered;
      return centered;
    }
  }
  return delta.shifted(-lo);
}

}  // namespace ck
