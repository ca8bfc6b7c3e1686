#include "cgt/gf.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// dense low-to-high polynomials over Z/p
using Poly = std::vector<u64>;

Poly poly_mod(Poly a, const Poly& m, u64 p) {
  while (a.size() >= m.size()) {
    u64 lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - m.size();
      for (size_t i = 0; i < m.size(); ++i)
        a[shift + i] = (a[shift + i] + (p - lead % p) * m[i]) % p;
    }
    a.pop_back();
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

// trial division by every monic polynomial of degree 1..deg/2
bool poly_irreducible(const Poly& m, u64 p) {
  u32 deg = static_cast<u32>(m.size() - 1);
  for (u32 d = 1; 2 * d <= deg; ++d) {
    u64 count = 1;
    for (u32 i = 0; i < d; ++i) count *= p;
    for (u64 code = 0; code < count; ++code) {
      Poly div(d + 1, 0);
      div[d] = 1;
      u64 c = code;
      for (u32 i = 0; i < d; ++i) {
        div[i] = c % p;
        c /= p;
      }
      Poly rem = poly_mod(m, div, p);
      if (poly_is_zero(rem)) return false;
    }
  }
  return true;
}

}  // namespace

u64 FieldSpec::from_coeffs(const std::vector<u64>& c) const {
  u64 v = 0;
  u64 scale = 1;
  for (u32 i = 0; i < k_; ++i) {
    u64 ci = i < c.size() ? c[i] % p_ : 0;
    v += ci * scale;
    scale *= p_;
  }
  return v;
}

std::vector<u64> FieldSpec::coeffs(u64 a) const {
  std::vector<u64> c(k_);
  for (u32 i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

u64 FieldSpec::add(u64 a, u64 b) const {
  if (k_ == 1) return (a + b) % p_;
  u64 v = 0, scale = 1;
  for (u32 i = 0; i < k_; ++i) {
    v += ((a % p_) + (b % p_)) % p_ * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return v;
}

u64 FieldSpec::neg(u64 a) const {
  if (k_ == 1) return (p_ - a) % p_;
  u64 v = 0, scale = 1;
  for (u32 i = 0; i < k_; ++i) {
    v += (p_ - a % p_) % p_ * scale;
    a /= p_;
    scale *= p_;
  }
  return v;
}

u64 FieldSpec::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FieldSpec::mul_slow(u64 a, u64 b) const {
  Poly pa = coeffs(a), pb = coeffs(b);
  Poly prod = poly_mul(pa, pb, p_);
  prod = poly_mod(prod, modulus_, p_);
  return from_coeffs(prod);
}

u64 FieldSpec::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

u64 FieldSpec::inv(u64 a) const {
  if (a == 0) throw DomainError("division by zero in GF(q)");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

u64 FieldSpec::pow(u64 a, u64 e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[static_cast<u64>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

std::string FieldSpec::to_string(u64 a) const {
  if (k_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::ostringstream out;
  bool first = true;
  for (u32 i = 0; i < k_; ++i) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) out << c[i];
    else if (i == 1) out << c[i] << "*t";
    else out << c[i] << "*t^" << i;
  }
  if (first) out << '0';
  return out.str();
}

u64 FieldSpec::parse(const std::string& text) const {
  // integer, or sum of "c", "c*t", "c*t^i" terms
  std::vector<u64> c(k_, 0);
  size_t pos = 0;
  auto fail = [&](const std::string& why) { throw ParseError("bad field element '" + text + "': " + why); };
  while (pos < text.size()) {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] == '+') { ++pos; continue; }
    if (!isdigit(static_cast<unsigned char>(text[pos]))) fail("expected coefficient");
    u64 coef = 0;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
      coef = coef * 10 + (text[pos++] - '0');
    u32 power = 0;
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size() || text[pos] != 't') fail("expected t");
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        power = 0;
        if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos]))) fail("expected exponent");
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
          power = power * 10 + (text[pos++] - '0');
      }
    }
    if (power >= k_) fail("power exceeds extension degree");
    c[power] = (c[power] + coef) % p_;
  }
  return from_coeffs(c);
}

std::shared_ptr<const FieldSpec> FieldSpec::make(u64 p, u32 k) {
  if (!is_prime_u64(p)) throw DomainError("field characteristic must be prime");
  if (k < 1 || k > 8) throw DomainError("extension degree out of range 1..8");
  u64 q = 1;
  for (u32 i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 20)) throw DomainError("field size exceeds 2^20");
  }
  auto f = std::make_shared<FieldSpec>();
  f->p_ = p;
  f->k_ = k;
  f->q_ = q;
  // lexicographically smallest monic irreducible, constant term first
  if (k == 1) {
    f->modulus_ = {0, 1};  // x
  } else {
    u64 count = q;  // p^k coefficient tuples
    bool found = false;
    std::vector<u64> idx(k, 0);
    for (u64 step = 0; step < count && !found; ++step) {
      Poly m(k + 1, 0);
      m[k] = 1;
      for (u32 i = 0; i < k; ++i) m[i] = idx[i];
      if (poly_irreducible(m, p)) {
        f->modulus_ = m;
        found = true;
        break;
      }
      // odometer with c_{k-1} fastest: lex order on (c_0,...,c_{k-1})
      for (i64 i = k - 1; i >= 0; --i) {
        if (++idx[i] < p) break;
        idx[i] = 0;
      }
    }
    if (!found) throw DomainError("no irreducible modulus found");
  }
  // discrete log tables over the smallest generator
  f->exp_.assign(q - 1, 0);
  f->log_.assign(q, 0);
  for (u64 g = 1; g < q; ++g) {
    u64 x = 1;
    u64 n = 0;
    bool ok = true;
    std::vector<bool> seen(q, false);
    for (n = 0; n < q - 1; ++n) {
      if (seen[x]) { ok = false; break; }
      seen[x] = true;
      f->exp_[n] = x;
      x = f->mul_slow(x, g);
    }
    if (ok && x == 1) {
      f->generator_ = g;
      for (u64 e = 0; e < q - 1; ++e) f->log_[f->exp_[e]] = static_cast<u32>(e);
      return f;
    }
  }
  throw DomainError("no multiplicative generator found");
}

}  // namespace cgt
