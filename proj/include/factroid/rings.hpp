#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "factroid/error.hpp"

namespace factroid {

using std::int64_t;

// ---------------------------------------------------------------------------
// small integer helpers
// ---------------------------------------------------------------------------

inline bool is_prime_i64(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int64_t mod_norm(int64_t a, int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

inline int64_t mod_inverse(int64_t a, int64_t n) {
  int64_t t = 0, nt = 1, r = n, nr = mod_norm(a, n);
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) fail(errc::domain, "element is not invertible");
  return mod_norm(t, n);
}

// distinct prime divisors, ascending
inline std::vector<int64_t> prime_divisors_i64(int64_t n) {
  std::vector<int64_t> ps;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::vector<mpz_class> prime_divisors_mpz(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> ps;
  for (mpz_class d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// ---------------------------------------------------------------------------
// monomials and sparse polynomials over a prime field
// ---------------------------------------------------------------------------

inline constexpr int max_vars = 4;

struct Monomial {
  std::array<std::uint16_t, max_vars> e{};

  int deg() const { return int(e[0]) + e[1] + e[2] + e[3]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// graded lexicographic order, earlier variables ranked higher
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  return a.e < b.e;
}

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

inline bool operator<(const Monomial& a, const Monomial& b) { return grlex_less(a, b); }

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < max_vars; ++i) r.e[i] = std::uint16_t(a.e[i] + b.e[i]);
  return r;
}

inline std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < max_vars; ++i) {
    if (a.e[i] < b.e[i]) return std::nullopt;
    r.e[i] = std::uint16_t(a.e[i] - b.e[i]);
  }
  return r;
}

// nonzero coefficients in [1, p), zero polynomial is the empty map
using Poly = std::map<Monomial, int64_t, GrlexLess>;

inline int poly_deg(const Poly& f) { return f.empty() ? -1 : f.rbegin()->first.deg(); }

inline void poly_add_term(Poly& f, const Monomial& m, int64_t c, int64_t p) {
  auto it = f.find(m);
  int64_t v = mod_norm((it == f.end() ? 0 : it->second) + c, p);
  if (v == 0) {
    if (it != f.end()) f.erase(it);
  } else if (it == f.end()) {
    f.emplace(m, v);
  } else {
    it->second = v;
  }
}

inline Poly poly_add(int64_t p, const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b) poly_add_term(r, m, c, p);
  return r;
}

inline Poly poly_neg(int64_t p, const Poly& a) {
  Poly r;
  for (const auto& [m, c] : a) r.emplace(m, p - c);
  return r;
}

inline Poly poly_scale(int64_t p, const Poly& a, int64_t c) {
  c = mod_norm(c, p);
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : a) r.emplace(m, mod_norm(k * c, p));
  return r;
}

// a * (c * m)
inline Poly poly_mul_term(int64_t p, const Poly& a, const Monomial& m, int64_t c) {
  c = mod_norm(c, p);
  Poly r;
  if (c == 0) return r;
  for (const auto& [ma, ca] : a) r.emplace(mono_mul(ma, m), mod_norm(ca * c, p));
  return r;
}

inline Poly poly_mul(int64_t p, const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [mb, cb] : b)
    for (const auto& [ma, ca] : a) poly_add_term(r, mono_mul(ma, mb), ca * cb, p);
  return r;
}

inline Poly poly_const(int64_t p, int64_t c) {
  Poly r;
  c = mod_norm(c, p);
  if (c != 0) r.emplace(Monomial{}, c);
  return r;
}

inline bool poly_is_monic(const Poly& f) { return !f.empty() && f.rbegin()->second == 1; }

// scale so the graded-lex leading coefficient becomes 1
inline Poly poly_monic(int64_t p, const Poly& f) {
  if (f.empty()) return f;
  return poly_scale(p, f, mod_inverse(f.rbegin()->second, p));
}

// exact division; nullopt when b does not divide a
inline std::optional<Poly> poly_divide_exact(int64_t p, Poly a, const Poly& b) {
  if (b.empty()) return std::nullopt;
  const Monomial lm = b.rbegin()->first;
  const int64_t lcinv = mod_inverse(b.rbegin()->second, p);
  Poly q;
  while (!a.empty()) {
    auto la = *a.rbegin();
    auto m = mono_div(la.first, lm);
    if (!m) return std::nullopt;
    int64_t c = mod_norm(la.second * lcinv, p);
    q.emplace(*m, c);
    Poly sub = poly_mul_term(p, b, *m, c);
    for (const auto& [ms, cs] : sub) poly_add_term(a, ms, p - cs, p);
  }
  return q;
}

// all monomials in nvars variables of exact total degree k,
// graded-lex descending (x^k first)
inline void monomials_of_degree(int nvars, int k, std::vector<Monomial>& out) {
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      m.e[var] = std::uint16_t(left);
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.e[var] = std::uint16_t(e);
      rec(var + 1, left - e);
    }
    m.e[var] = 0;
  };
  if (nvars == 0) {
    if (k == 0) out.push_back(m);
    return;
  }
  rec(0, k);
}

// degree ascending, graded-lex descending inside each degree block
inline std::vector<Monomial> monomials_up_to(int nvars, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) monomials_of_degree(nvars, k, out);
  return out;
}

// ---------------------------------------------------------------------------
// rings
// ---------------------------------------------------------------------------

enum class RingKind { integers, integers_mod, prime_field, poly_ring, product };

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
  RingKind kind;
  int64_t n = 0;                  // modulus of Z/n; p of GF(p) and GF(p)[vars]
  std::vector<std::string> vars;  // poly_ring only
  RingPtr left, right;            // product only

  bool graded() const { return kind == RingKind::poly_ring; }
  bool residue_based() const {
    return kind == RingKind::integers_mod || kind == RingKind::prime_field;
  }
  int nvars() const { return int(vars.size()); }
};

inline RingPtr make_integers() {
  auto r = std::make_shared<Ring>();
  r->kind = RingKind::integers;
  return r;
}

inline RingPtr make_integers_mod(int64_t n) {
  if (n < 2) fail(errc::domain, "Z/n requires n >= 2");
  auto r = std::make_shared<Ring>();
  r->kind = RingKind::integers_mod;
  r->n = n;
  return r;
}

inline RingPtr make_prime_field(int64_t p) {
  if (!is_prime_i64(p)) fail(errc::domain, "GF(p) requires prime p");
  auto r = std::make_shared<Ring>();
  r->kind = RingKind::prime_field;
  r->n = p;
  return r;
}

inline RingPtr make_poly_ring(int64_t p, std::vector<std::string> vars) {
  if (!is_prime_i64(p)) fail(errc::domain, "polynomial coefficients require a prime field");
  if (vars.empty() || int(vars.size()) > max_vars)
    fail(errc::domain, "polynomial rings support 1 to 4 variables");
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) fail(errc::domain, "duplicate variable name");
  auto r = std::make_shared<Ring>();
  r->kind = RingKind::poly_ring;
  r->n = p;
  r->vars = std::move(vars);
  return r;
}

inline RingPtr make_product(RingPtr a, RingPtr b) {
  if (!a || !b) fail(errc::internal, "null product factor");
  if (a->kind == RingKind::product || b->kind == RingKind::product)
    fail(errc::domain, "product rings do not nest");
  auto r = std::make_shared<Ring>();
  r->kind = RingKind::product;
  r->left = std::move(a);
  r->right = std::move(b);
  return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case RingKind::integers: return true;
    case RingKind::integers_mod:
    case RingKind::prime_field: return a->n == b->n;
    case RingKind::poly_ring: return a->n == b->n && a->vars == b->vars;
    case RingKind::product:
      return same_ring(a->left, b->left) && same_ring(a->right, b->right);
  }
  return false;
}

inline std::string print_ring(const RingPtr& r) {
  switch (r->kind) {
    case RingKind::integers: return "Z";
    case RingKind::integers_mod: return "Z/" + std::to_string(r->n);
    case RingKind::prime_field: return "GF(" + std::to_string(r->n) + ")";
    case RingKind::poly_ring: {
      std::string s = "GF(" + std::to_string(r->n) + ")[";
      for (size_t i = 0; i < r->vars.size(); ++i) {
        if (i) s += ",";
        s += r->vars[i];
      }
      return s + "]";
    }
    case RingKind::product:
      return "(" + print_ring(r->left) + ")x(" + print_ring(r->right) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// elements
// ---------------------------------------------------------------------------

struct Value {
  std::variant<mpz_class, int64_t, Poly, std::vector<Value>> v;
};

inline const mpz_class& as_mpz(const Value& x) { return std::get<mpz_class>(x.v); }
inline int64_t as_res(const Value& x) { return std::get<int64_t>(x.v); }
inline const Poly& as_poly(const Value& x) { return std::get<Poly>(x.v); }
inline const std::vector<Value>& as_pair(const Value& x) {
  return std::get<std::vector<Value>>(x.v);
}

inline bool values_equal(const Value& a, const Value& b);

inline bool pair_equal(const std::vector<Value>& a, const std::vector<Value>& b) {
  return values_equal(a[0], b[0]) && values_equal(a[1], b[1]);
}

inline bool values_equal(const Value& a, const Value& b) {
  if (a.v.index() != b.v.index()) return false;
  if (std::holds_alternative<mpz_class>(a.v)) return as_mpz(a) == as_mpz(b);
  if (std::holds_alternative<int64_t>(a.v)) return as_res(a) == as_res(b);
  if (std::holds_alternative<Poly>(a.v)) return as_poly(a) == as_poly(b);
  return pair_equal(as_pair(a), as_pair(b));
}

inline bool value_less(const Value& a, const Value& b);

inline bool pair_less(const std::vector<Value>& a, const std::vector<Value>& b) {
  if (value_less(a[0], b[0])) return true;
  if (value_less(b[0], a[0])) return false;
  return value_less(a[1], b[1]);
}

inline bool poly_less_total(const Poly& a, const Poly& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (grlex_less(ia->first, ib->first)) return true;
    if (grlex_less(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.end() && ib != b.end();
}

inline bool value_less(const Value& a, const Value& b) {
  if (a.v.index() != b.v.index()) return a.v.index() < b.v.index();
  if (std::holds_alternative<mpz_class>(a.v)) return as_mpz(a) < as_mpz(b);
  if (std::holds_alternative<int64_t>(a.v)) return as_res(a) < as_res(b);
  if (std::holds_alternative<Poly>(a.v)) return poly_less_total(as_poly(a), as_poly(b));
  return pair_less(as_pair(a), as_pair(b));
}

struct ValueLess {
  bool operator()(const Value& a, const Value& b) const { return value_less(a, b); }
};

inline Value make_pair_value(Value a, Value b) {
  std::vector<Value> p;
  p.push_back(std::move(a));
  p.push_back(std::move(b));
  return Value{std::move(p)};
}

inline Value from_mpz(const RingPtr& r, const mpz_class& z) {
  switch (r->kind) {
    case RingKind::integers: return Value{z};
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      mpz_class m = z % r->n;
      if (m < 0) m += r->n;
      return Value{m.get_si()};
    }
    case RingKind::poly_ring: {
      mpz_class m = z % r->n;
      if (m < 0) m += r->n;
      return Value{poly_const(r->n, m.get_si())};
    }
    case RingKind::product:
      return make_pair_value(from_mpz(r->left, z), from_mpz(r->right, z));
  }
  fail(errc::internal, "bad ring kind");
}

inline Value from_int(const RingPtr& r, int64_t k) { return from_mpz(r, mpz_class(k)); }
inline Value zero(const RingPtr& r) { return from_int(r, 0); }
inline Value one(const RingPtr& r) { return from_int(r, 1); }

inline bool is_zero(const RingPtr& r, const Value& x) { return values_equal(x, zero(r)); }
inline bool is_one(const RingPtr& r, const Value& x) { return values_equal(x, one(r)); }

inline Value add(const RingPtr& r, const Value& a, const Value& b) {
  switch (r->kind) {
    case RingKind::integers: return Value{mpz_class(as_mpz(a) + as_mpz(b))};
    case RingKind::integers_mod:
    case RingKind::prime_field: return Value{mod_norm(as_res(a) + as_res(b), r->n)};
    case RingKind::poly_ring: return Value{poly_add(r->n, as_poly(a), as_poly(b))};
    case RingKind::product:
      return make_pair_value(add(r->left, as_pair(a)[0], as_pair(b)[0]),
                             add(r->right, as_pair(a)[1], as_pair(b)[1]));
  }
  fail(errc::internal, "bad ring kind");
}

inline Value neg(const RingPtr& r, const Value& a) {
  switch (r->kind) {
    case RingKind::integers: return Value{mpz_class(-as_mpz(a))};
    case RingKind::integers_mod:
    case RingKind::prime_field: return Value{mod_norm(-as_res(a), r->n)};
    case RingKind::poly_ring: return Value{poly_neg(r->n, as_poly(a))};
    case RingKind::product:
      return make_pair_value(neg(r->left, as_pair(a)[0]), neg(r->right, as_pair(a)[1]));
  }
  fail(errc::internal, "bad ring kind");
}

inline Value sub(const RingPtr& r, const Value& a, const Value& b) { return add(r, a, neg(r, b)); }

inline Value mul(const RingPtr& r, const Value& a, const Value& b) {
  switch (r->kind) {
    case RingKind::integers: return Value{mpz_class(as_mpz(a) * as_mpz(b))};
    case RingKind::integers_mod:
    case RingKind::prime_field: return Value{mod_norm(as_res(a) * as_res(b), r->n)};
    case RingKind::poly_ring: return Value{poly_mul(r->n, as_poly(a), as_poly(b))};
    case RingKind::product:
      return make_pair_value(mul(r->left, as_pair(a)[0], as_pair(b)[0]),
                             mul(r->right, as_pair(a)[1], as_pair(b)[1]));
  }
  fail(errc::internal, "bad ring kind");
}

inline bool is_unit(const RingPtr& r, const Value& x) {
  switch (r->kind) {
    case RingKind::integers: return as_mpz(x) == 1 || as_mpz(x) == -1;
    case RingKind::integers_mod: return std::gcd(as_res(x), r->n) == 1;
    case RingKind::prime_field: return as_res(x) != 0;
    case RingKind::poly_ring: return poly_deg(as_poly(x)) == 0;
    case RingKind::product:
      return is_unit(r->left, as_pair(x)[0]) && is_unit(r->right, as_pair(x)[1]);
  }
  fail(errc::internal, "bad ring kind");
}

inline bool is_nilpotent(const RingPtr& r, const Value& x) {
  switch (r->kind) {
    case RingKind::integers: return as_mpz(x) == 0;
    case RingKind::integers_mod: {
      for (int64_t p : prime_divisors_i64(r->n))
        if (as_res(x) % p != 0) return false;
      return true;
    }
    case RingKind::prime_field: return as_res(x) == 0;
    case RingKind::poly_ring: return as_poly(x).empty();
    case RingKind::product:
      return is_nilpotent(r->left, as_pair(x)[0]) && is_nilpotent(r->right, as_pair(x)[1]);
  }
  fail(errc::internal, "bad ring kind");
}

// zerodivisor test used for the regular-element predicate
inline bool is_regular(const RingPtr& r, const Value& x) {
  switch (r->kind) {
    case RingKind::integers: return as_mpz(x) != 0;
    case RingKind::integers_mod: return std::gcd(as_res(x), r->n) == 1;
    case RingKind::prime_field: return as_res(x) != 0;
    case RingKind::poly_ring: return !as_poly(x).empty();
    case RingKind::product:
      return is_regular(r->left, as_pair(x)[0]) && is_regular(r->right, as_pair(x)[1]);
  }
  fail(errc::internal, "bad ring kind");
}

// total degree; -1 encodes the degree of the zero polynomial
inline int degree_of(const RingPtr& r, const Value& x) {
  if (r->kind != RingKind::poly_ring) fail(errc::domain, "degree requires a graded ring");
  return poly_deg(as_poly(x));
}

inline std::optional<Value> try_exact_divide(const RingPtr& r, const Value& a, const Value& b);

inline std::vector<Value> solve_linear(const RingPtr& r, const Value& b, const Value& a,
                                       int degree_bound = -1);

// residue solutions of b*x = a mod n, ascending
inline std::vector<int64_t> solve_mod(int64_t n, int64_t b, int64_t a) {
  b = mod_norm(b, n);
  a = mod_norm(a, n);
  int64_t g = b == 0 ? n : std::gcd(b, n);
  if (a % g != 0) return {};
  int64_t n2 = n / g;
  int64_t x0 = n2 == 1 ? 0 : mod_norm((a / g) % n2 * mod_inverse(b / g, n2), n2);
  std::vector<int64_t> xs;
  for (int64_t k = 0; k < g; ++k) xs.push_back(x0 + k * n2);
  std::sort(xs.begin(), xs.end());
  return xs;
}

inline std::vector<Value> solve_linear(const RingPtr& r, const Value& b, const Value& a,
                                       int degree_bound) {
  switch (r->kind) {
    case RingKind::integers: {
      if (as_mpz(b) == 0) {
        if (as_mpz(a) == 0) fail(errc::unsupported, "0*x = 0 over Z has infinitely many solutions");
        return {};
      }
      if (as_mpz(a) % as_mpz(b) != 0) return {};
      return {Value{mpz_class(as_mpz(a) / as_mpz(b))}};
    }
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      std::vector<Value> out;
      for (int64_t x : solve_mod(r->n, as_res(b), as_res(a))) out.push_back(Value{x});
      return out;
    }
    case RingKind::poly_ring: {
      if (as_poly(b).empty()) {
        if (!as_poly(a).empty()) return {};
        fail(errc::unsupported, "0*x = 0 over a polynomial ring has infinitely many solutions");
      }
      auto q = poly_divide_exact(r->n, as_poly(a), as_poly(b));
      if (!q) return {};
      if (degree_bound >= 0 && poly_deg(*q) > degree_bound) return {};
      return {Value{*q}};
    }
    case RingKind::product: {
      auto xs = solve_linear(r->left, as_pair(b)[0], as_pair(a)[0], degree_bound);
      auto ys = solve_linear(r->right, as_pair(b)[1], as_pair(a)[1], degree_bound);
      std::vector<Value> out;
      for (const auto& x : xs)
        for (const auto& y : ys) out.push_back(make_pair_value(x, y));
      return out;
    }
  }
  fail(errc::internal, "bad ring kind");
}

inline std::optional<Value> try_exact_divide(const RingPtr& r, const Value& a, const Value& b) {
  switch (r->kind) {
    case RingKind::integers: {
      if (as_mpz(b) == 0) return std::nullopt;
      if (as_mpz(a) % as_mpz(b) != 0) return std::nullopt;
      return Value{mpz_class(as_mpz(a) / as_mpz(b))};
    }
    case RingKind::prime_field: {
      if (as_res(b) == 0) return std::nullopt;
      return Value{mod_norm(as_res(a) * mod_inverse(as_res(b), r->n), r->n)};
    }
    case RingKind::poly_ring: {
      if (as_poly(b).empty()) return std::nullopt;
      auto q = poly_divide_exact(r->n, as_poly(a), as_poly(b));
      if (!q) return std::nullopt;
      return Value{*q};
    }
    case RingKind::integers_mod:
    case RingKind::product: {
      // a unique quotient is required in non-domains
      auto xs = solve_linear(r, b, a);
      if (xs.size() != 1) return std::nullopt;
      return xs[0];
    }
  }
  fail(errc::internal, "bad ring kind");
}

// single generator of J(A)
inline Value jacobson_radical(const RingPtr& r) {
  switch (r->kind) {
    case RingKind::integers: return zero(r);
    case RingKind::integers_mod: {
      int64_t rad = 1;
      for (int64_t p : prime_divisors_i64(r->n)) rad *= p;
      return Value{mod_norm(rad, r->n)};
    }
    case RingKind::prime_field:
    case RingKind::poly_ring: return zero(r);
    case RingKind::product:
      return make_pair_value(jacobson_radical(r->left), jacobson_radical(r->right));
  }
  fail(errc::internal, "bad ring kind");
}

inline bool in_jacobson(const RingPtr& r, const Value& x) {
  switch (r->kind) {
    case RingKind::integers: return as_mpz(x) == 0;
    case RingKind::integers_mod: {
      int64_t g = as_res(jacobson_radical(r));  // 0 for squarefree moduli
      return g == 0 ? as_res(x) == 0 : as_res(x) % g == 0;
    }
    case RingKind::prime_field:
    case RingKind::poly_ring: return is_zero(r, x);
    case RingKind::product:
      return in_jacobson(r->left, as_pair(x)[0]) && in_jacobson(r->right, as_pair(x)[1]);
  }
  fail(errc::internal, "bad ring kind");
}

inline std::optional<int64_t> ring_size(const RingPtr& r) {
  switch (r->kind) {
    case RingKind::integers:
    case RingKind::poly_ring: return std::nullopt;
    case RingKind::integers_mod:
    case RingKind::prime_field: return r->n;
    case RingKind::product: {
      auto a = ring_size(r->left), b = ring_size(r->right);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
  }
  fail(errc::internal, "bad ring kind");
}

inline std::vector<Value> ring_elements(const RingPtr& r, int64_t cap = 1 << 16) {
  auto sz = ring_size(r);
  if (!sz) fail(errc::unsupported, "element enumeration requires a finite ring");
  if (*sz > cap) fail(errc::budget, "finite ring too large to enumerate");
  switch (r->kind) {
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      std::vector<Value> out;
      for (int64_t k = 0; k < r->n; ++k) out.push_back(Value{k});
      return out;
    }
    case RingKind::product: {
      std::vector<Value> out;
      for (const auto& x : ring_elements(r->left, cap))
        for (const auto& y : ring_elements(r->right, cap)) out.push_back(make_pair_value(x, y));
      return out;
    }
    default: fail(errc::internal, "bad ring kind");
  }
}

inline std::vector<Value> units_of(const RingPtr& r) {
  switch (r->kind) {
    case RingKind::integers: return {one(r), from_int(r, -1)};
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      std::vector<Value> out;
      for (int64_t k = 1; k < r->n; ++k)
        if (std::gcd(k, r->n) == 1) out.push_back(Value{k});
      return out;
    }
    case RingKind::poly_ring: {
      std::vector<Value> out;
      for (int64_t c = 1; c < r->n; ++c) out.push_back(Value{poly_const(r->n, c)});
      return out;
    }
    case RingKind::product: {
      std::vector<Value> out;
      for (const auto& x : units_of(r->left))
        for (const auto& y : units_of(r->right)) out.push_back(make_pair_value(x, y));
      return out;
    }
  }
  fail(errc::internal, "bad ring kind");
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

inline std::string print_poly(const RingPtr& r, const Poly& f) {
  if (f.empty()) return "0";
  std::string s;
  // graded-lex descending
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!s.empty()) s += " + ";
    std::string term;
    if (c != 1 || m.deg() == 0) term = std::to_string(c);
    for (int i = 0; i < r->nvars(); ++i) {
      if (m.e[i] == 0) continue;
      if (!term.empty()) term += "*";
      term += r->vars[i];
      if (m.e[i] > 1) term += "^" + std::to_string(int(m.e[i]));
    }
    s += term;
  }
  return s;
}

inline std::string print_value(const RingPtr& r, const Value& x) {
  switch (r->kind) {
    case RingKind::integers: return as_mpz(x).get_str();
    case RingKind::integers_mod:
    case RingKind::prime_field: return std::to_string(as_res(x));
    case RingKind::poly_ring: return print_poly(r, as_poly(x));
    case RingKind::product:
      return "(" + print_value(r->left, as_pair(x)[0]) + "|" +
             print_value(r->right, as_pair(x)[1]) + ")";
  }
  fail(errc::internal, "bad ring kind");
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace detail {

struct Scanner {
  std::string s;
  size_t pos = 0;

  explicit Scanner(std::string text) : s(std::move(text)) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(errc::parse, std::string("expected '") + c + "' in \"" + s + "\"");
  }
  bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !ident_start(s[pos])) fail(errc::parse, "expected identifier");
    size_t b = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    return s.substr(b, pos - b);
  }
  mpz_class number() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail(errc::parse, "expected number");
    size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return mpz_class(s.substr(b, pos - b));
  }
};

inline Value parse_expr(Scanner& sc, const RingPtr& r);

inline Value parse_factor(Scanner& sc, const RingPtr& r) {
  char c = sc.peek();
  if (c == '(') {
    sc.expect('(');
    Value v = parse_expr(sc, r);
    sc.expect(')');
    return v;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) return from_mpz(r, sc.number());
  if (sc.ident_start(c)) {
    std::string name = sc.ident();
    if (r->kind != RingKind::poly_ring)
      fail(errc::parse, "variable '" + name + "' in a ring without variables");
    int idx = -1;
    for (int i = 0; i < r->nvars(); ++i)
      if (r->vars[i] == name) idx = i;
    if (idx < 0) fail(errc::parse, "unknown variable '" + name + "'");
    int64_t e = 1;
    if (sc.accept('^')) {
      mpz_class z = sc.number();
      if (z <= 0 || z > 4096) fail(errc::parse, "exponent out of range");
      e = z.get_si();
    }
    Monomial m;
    m.e[idx] = std::uint16_t(e);
    Poly f;
    f.emplace(m, 1);
    return Value{f};
  }
  fail(errc::parse, "unexpected character in element");
}

inline Value parse_term(Scanner& sc, const RingPtr& r) {
  Value v = parse_factor(sc, r);
  while (sc.accept('*')) v = mul(r, v, parse_factor(sc, r));
  return v;
}

inline Value parse_expr(Scanner& sc, const RingPtr& r) {
  bool negate = false;
  if (sc.accept('-')) negate = true;
  else sc.accept('+');
  Value v = parse_term(sc, r);
  if (negate) v = neg(r, v);
  for (;;) {
    if (sc.accept('+')) v = add(r, v, parse_term(sc, r));
    else if (sc.accept('-')) v = sub(r, v, parse_term(sc, r));
    else break;
  }
  return v;
}

inline Value parse_value_inner(Scanner& sc, const RingPtr& r) {
  if (r->kind == RingKind::product) {
    sc.expect('(');
    Value a = parse_expr(sc, r->left);
    sc.expect('|');
    Value b = parse_expr(sc, r->right);
    sc.expect(')');
    return make_pair_value(std::move(a), std::move(b));
  }
  return parse_expr(sc, r);
}

}  // namespace detail

inline Value parse_value(const RingPtr& r, const std::string& text) {
  detail::Scanner sc(text);
  Value v = detail::parse_value_inner(sc, r);
  if (!sc.eof()) fail(errc::parse, "trailing input in element \"" + text + "\"");
  return v;
}

inline RingPtr parse_ring(const std::string& text) {
  detail::Scanner sc(text);
  std::function<RingPtr()> rec = [&]() -> RingPtr {
    if (sc.accept('(')) {
      RingPtr a = rec();
      sc.expect(')');
      std::string x = sc.ident();
      if (x != "x") fail(errc::parse, "expected 'x' between product factors");
      sc.expect('(');
      RingPtr b = rec();
      sc.expect(')');
      return make_product(a, b);
    }
    std::string head = sc.ident();
    if (head == "Z") {
      if (sc.accept('/')) {
        mpz_class n = sc.number();
        if (n > (int64_t(1) << 31)) fail(errc::domain, "modulus too large");
        return make_integers_mod(n.get_si());
      }
      return make_integers();
    }
    if (head == "GF") {
      sc.expect('(');
      mpz_class p = sc.number();
      sc.expect(')');
      if (p > (int64_t(1) << 20)) fail(errc::domain, "field characteristic too large");
      if (sc.peek() == '[') {
        sc.expect('[');
        std::vector<std::string> vars;
        vars.push_back(sc.ident());
        while (sc.accept(',')) vars.push_back(sc.ident());
        sc.expect(']');
        return make_poly_ring(p.get_si(), std::move(vars));
      }
      return make_prime_field(p.get_si());
    }
    fail(errc::parse, "unknown ring \"" + text + "\"");
  };
  RingPtr r = rec();
  if (!sc.eof()) fail(errc::parse, "trailing input in ring \"" + text + "\"");
  return r;
}

// ---------------------------------------------------------------------------
// ring homomorphisms
// ---------------------------------------------------------------------------

enum class HomKind { quotient_map, eval_var_to_zero, inclusion, projection_left, projection_right };

struct RingHom {
  HomKind kind;
  RingPtr source, target;
  int var_index = -1;  // eval_var_to_zero
};

inline RingHom make_quotient_map(const RingPtr& zn) {
  if (zn->kind != RingKind::integers_mod) fail(errc::domain, "quotient map targets Z/n");
  return RingHom{HomKind::quotient_map, make_integers(), zn};
}

inline RingHom make_eval_var_to_zero(const RingPtr& src, const std::string& var) {
  if (src->kind != RingKind::poly_ring || src->nvars() < 2)
    fail(errc::domain, "evaluation map requires a polynomial ring in at least two variables");
  int idx = -1;
  for (int i = 0; i < src->nvars(); ++i)
    if (src->vars[i] == var) idx = i;
  if (idx < 0) fail(errc::domain, "unknown variable '" + var + "'");
  std::vector<std::string> tv;
  for (int i = 0; i < src->nvars(); ++i)
    if (i != idx) tv.push_back(src->vars[i]);
  return RingHom{HomKind::eval_var_to_zero, src, make_poly_ring(src->n, tv), idx};
}

inline RingHom make_inclusion(const RingPtr& small, const RingPtr& big) {
  if (small->kind != RingKind::poly_ring || big->kind != RingKind::poly_ring ||
      small->n != big->n)
    fail(errc::domain, "inclusion maps one polynomial ring into another over the same field");
  for (const auto& v : small->vars)
    if (std::find(big->vars.begin(), big->vars.end(), v) == big->vars.end())
      fail(errc::domain, "inclusion requires source variables to appear in the target");
  return RingHom{HomKind::inclusion, small, big};
}

inline RingHom make_projection(const RingPtr& prod, bool left_side) {
  if (prod->kind != RingKind::product) fail(errc::domain, "projection requires a product ring");
  return RingHom{left_side ? HomKind::projection_left : HomKind::projection_right, prod,
                 left_side ? prod->left : prod->right};
}

inline Value apply_hom(const RingHom& h, const Value& x) {
  switch (h.kind) {
    case HomKind::quotient_map: return from_mpz(h.target, as_mpz(x));
    case HomKind::eval_var_to_zero: {
      Poly out;
      for (const auto& [m, c] : as_poly(x)) {
        if (m.e[h.var_index] != 0) continue;
        Monomial t;
        int j = 0;
        for (int i = 0; i < h.source->nvars(); ++i)
          if (i != h.var_index) t.e[j++] = m.e[i];
        out.emplace(t, c);
      }
      return Value{out};
    }
    case HomKind::inclusion: {
      std::array<int, max_vars> where{};
      for (int i = 0; i < h.source->nvars(); ++i) {
        for (int j = 0; j < h.target->nvars(); ++j)
          if (h.source->vars[i] == h.target->vars[j]) where[i] = j;
      }
      Poly out;
      for (const auto& [m, c] : as_poly(x)) {
        Monomial t;
        for (int i = 0; i < h.source->nvars(); ++i) t.e[where[i]] = m.e[i];
        out.emplace(t, c);
      }
      return Value{out};
    }
    case HomKind::projection_left: return as_pair(x)[0];
    case HomKind::projection_right: return as_pair(x)[1];
  }
  fail(errc::internal, "bad hom kind");
}

// ---------------------------------------------------------------------------
// monic enumeration in degree-then-graded-lex search order
// ---------------------------------------------------------------------------

// count of monic polynomials of degree in [1, d]; caps at `limit`
inline int64_t monic_count_up_to(int64_t p, int nvars, int d, int64_t limit) {
  auto monos = monomials_up_to(nvars, d);
  // rank of a monomial = number of strictly graded-lex smaller monomials
  int64_t total = 0;
  for (const auto& lead : monos) {
    if (lead.deg() < 1) continue;
    int64_t rank = 0;
    for (const auto& m : monos)
      if (grlex_less(m, lead)) ++rank;
    int64_t block = 1;
    for (int64_t i = 0; i < rank; ++i) {
      block *= p;
      if (block > limit) return limit + 1;
    }
    total += block;
    if (total > limit) return limit + 1;
  }
  return total;
}

// visit monic polynomials with degree in [mindeg, maxdeg]; fn may return false to stop
inline void enumerate_monic(int64_t p, int nvars, int mindeg, int maxdeg,
                            const std::function<bool(const Poly&)>& fn) {
  for (int k = std::max(mindeg, 0); k <= maxdeg; ++k) {
    if (k == 0) {
      Poly f = poly_const(p, 1);
      if (!fn(f)) return;
      continue;
    }
    std::vector<Monomial> leads;
    monomials_of_degree(nvars, k, leads);
    std::vector<Monomial> all = monomials_up_to(nvars, k);
    std::sort(all.begin(), all.end(), GrlexLess{});
    for (const auto& lead : leads) {
      std::vector<Monomial> tail;
      for (const auto& m : all)
        if (grlex_less(m, lead)) tail.push_back(m);
      std::vector<int64_t> cs(tail.size(), 0);
      for (;;) {
        Poly f;
        f.emplace(lead, 1);
        for (size_t i = 0; i < tail.size(); ++i)
          if (cs[i] != 0) f.emplace(tail[i], cs[i]);
        if (!fn(f)) return;
        size_t i = 0;
        while (i < cs.size() && ++cs[i] == p) cs[i++] = 0;
        if (i == cs.size()) break;
      }
    }
  }
}

}  // namespace factroid
