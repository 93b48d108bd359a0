#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "factroid/rings.hpp"

namespace factroid {

enum class MultSetKind {
  regulars,
  units,
  monoid_gen,
  even_degree,
  complement_of_ideals,
  explicit_finite,
  hom_preimage
};

struct MultSet;
using MultSetPtr = std::shared_ptr<const MultSet>;

struct MultSet {
  MultSetKind kind;
  RingPtr ring;
  std::vector<Value> gens;  // monoid_gen, complement_of_ideals, explicit_finite
  std::shared_ptr<const RingHom> hom;  // hom_preimage, source == ring
  MultSetPtr inner;                    // hom_preimage, over hom->target
};

inline MultSetPtr make_reg(RingPtr r) {
  auto w = std::make_shared<MultSet>();
  w->kind = MultSetKind::regulars;
  w->ring = std::move(r);
  return w;
}

inline MultSetPtr make_units_set(RingPtr r) {
  auto w = std::make_shared<MultSet>();
  w->kind = MultSetKind::units;
  w->ring = std::move(r);
  return w;
}

inline MultSetPtr make_monoid_gen(RingPtr r, std::vector<Value> gens) {
  if (gens.empty()) fail(errc::domain, "gen:{} needs at least one generator");
  for (const auto& g : gens)
    if (is_zero(r, g)) fail(errc::domain, "multiplicative sets exclude 0");
  auto w = std::make_shared<MultSet>();
  w->kind = MultSetKind::monoid_gen;
  w->ring = std::move(r);
  w->gens = std::move(gens);
  return w;
}

inline MultSetPtr make_even_degree(RingPtr r) {
  if (r->kind != RingKind::poly_ring || r->nvars() != 1)
    fail(errc::domain, "evendeg requires a univariate polynomial ring");
  auto w = std::make_shared<MultSet>();
  w->kind = MultSetKind::even_degree;
  w->ring = std::move(r);
  return w;
}

inline MultSetPtr make_complement_of_ideals(RingPtr r, std::vector<Value> gens) {
  if (r->kind != RingKind::integers && r->kind != RingKind::integers_mod)
    fail(errc::domain, "complement:{} is supported over Z and Z/n");
  if (gens.empty()) fail(errc::domain, "complement:{} needs at least one ideal generator");
  for (const auto& g : gens) {
    if (r->kind == RingKind::integers) {
      mpz_class a = abs(as_mpz(g));
      if (a != 0 && !(a > 1 && mpz_probab_prime_p(a.get_mpz_t(), 30) != 0))
        fail(errc::domain, "complement:{} requires prime ideals");
    } else {
      int64_t d = as_res(g) == 0 ? r->n : std::gcd(as_res(g), r->n);
      if (!is_prime_i64(d)) fail(errc::domain, "complement:{} requires prime ideals");
    }
  }
  auto w = std::make_shared<MultSet>();
  w->kind = MultSetKind::complement_of_ideals;
  w->ring = std::move(r);
  w->gens = std::move(gens);
  return w;
}

inline MultSetPtr make_explicit_set(RingPtr r, std::vector<Value> elems) {
  if (elems.empty()) fail(errc::domain, "explicit:{} needs at least one element");
  for (const auto& g : elems)
    if (is_zero(r, g)) fail(errc::domain, "multiplicative sets exclude 0");
  std::sort(elems.begin(), elems.end(), ValueLess{});
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const Value& a, const Value& b) { return values_equal(a, b); }),
              elems.end());
  auto w = std::make_shared<MultSet>();
  w->kind = MultSetKind::explicit_finite;
  w->ring = std::move(r);
  w->gens = std::move(elems);
  return w;
}

inline MultSetPtr make_hom_preimage_set(std::shared_ptr<const RingHom> hom, MultSetPtr inner) {
  if (!same_ring(hom->target, inner->ring)) fail(errc::domain, "preimage set ring mismatch");
  auto w = std::make_shared<MultSet>();
  w->kind = MultSetKind::hom_preimage;
  w->ring = hom->source;
  w->hom = std::move(hom);
  w->inner = std::move(inner);
  return w;
}

// ---------------------------------------------------------------------------
// membership
// ---------------------------------------------------------------------------

inline bool multset_contains(const MultSet& w, const Value& x);

namespace detail {

// membership of x in the monoid generated by gens
inline bool monoid_member(const RingPtr& r, const std::vector<Value>& gens, const Value& x) {
  if (is_one(r, x)) return true;
  switch (r->kind) {
    case RingKind::integers: {
      mpz_class target = as_mpz(x);
      if (target == 0) return false;
      mpz_class bound = abs(target);
      std::set<mpz_class> seen;
      std::vector<mpz_class> frontier{1};
      seen.insert(1);
      while (!frontier.empty()) {
        std::vector<mpz_class> next;
        for (const auto& v : frontier)
          for (const auto& g : gens) {
            mpz_class w2 = v * as_mpz(g);
            if (abs(w2) > bound || w2 == 0) continue;
            if (w2 == target) return true;
            if (seen.insert(w2).second) next.push_back(w2);
          }
        frontier = std::move(next);
      }
      return false;
    }
    case RingKind::integers_mod:
    case RingKind::prime_field:
    case RingKind::product: {
      std::set<Value, ValueLess> seen;
      std::vector<Value> frontier{one(r)};
      seen.insert(one(r));
      while (!frontier.empty()) {
        std::vector<Value> next;
        for (const auto& v : frontier)
          for (const auto& g : gens) {
            Value w2 = mul(r, v, g);
            if (values_equal(w2, x)) return true;
            if (seen.insert(w2).second) next.push_back(w2);
          }
        frontier = std::move(next);
      }
      return false;
    }
    case RingKind::poly_ring: {
      // scalars reachable from degree-zero generators
      std::set<int64_t> cmonoid{1};
      for (bool grew = true; grew;) {
        grew = false;
        for (int64_t c : std::vector<int64_t>(cmonoid.begin(), cmonoid.end()))
          for (const auto& g : gens)
            if (poly_deg(as_poly(g)) == 0 &&
                cmonoid.insert(mod_norm(c * as_poly(g).begin()->second, r->n)).second)
              grew = true;
      }
      std::map<Poly, bool> memo;
      std::function<bool(const Poly&)> rec = [&](const Poly& f) -> bool {
        if (f.empty()) return false;
        if (poly_deg(f) == 0) return cmonoid.count(f.begin()->second) != 0;
        auto it = memo.find(f);
        if (it != memo.end()) return it->second;
        memo[f] = false;  // cycles impossible, positive-degree division shrinks degree
        bool ok = false;
        for (const auto& g : gens) {
          if (poly_deg(as_poly(g)) < 1 || poly_deg(as_poly(g)) > poly_deg(f)) continue;
          auto q = poly_divide_exact(r->n, f, as_poly(g));
          if (q && rec(*q)) {
            ok = true;
            break;
          }
        }
        memo[f] = ok;
        return ok;
      };
      return rec(as_poly(x));
    }
  }
  fail(errc::internal, "bad ring kind");
}

inline bool in_principal_ideal(const RingPtr& r, const Value& g, const Value& x) {
  if (r->kind == RingKind::integers) {
    if (as_mpz(g) == 0) return as_mpz(x) == 0;
    return as_mpz(x) % as_mpz(g) == 0;
  }
  int64_t d = as_res(g) == 0 ? r->n : std::gcd(as_res(g), r->n);
  return as_res(x) % d == 0;
}

}  // namespace detail

inline bool multset_contains(const MultSet& w, const Value& x) {
  const RingPtr& r = w.ring;
  switch (w.kind) {
    case MultSetKind::regulars: return is_regular(r, x);
    case MultSetKind::units: return is_unit(r, x);
    case MultSetKind::monoid_gen: return detail::monoid_member(r, w.gens, x);
    case MultSetKind::even_degree: {
      int d = poly_deg(as_poly(x));
      return d >= 0 && d % 2 == 0;
    }
    case MultSetKind::complement_of_ideals: {
      for (const auto& g : w.gens)
        if (detail::in_principal_ideal(r, g, x)) return false;
      return true;
    }
    case MultSetKind::explicit_finite: {
      for (const auto& g : w.gens)
        if (values_equal(g, x)) return true;
      return false;
    }
    case MultSetKind::hom_preimage: return multset_contains(*w.inner, apply_hom(*w.hom, x));
  }
  fail(errc::internal, "bad mult set kind");
}

// does some nonzero scalar multiple of the monic polynomial m lie in the set
inline bool multset_contains_associate(const MultSet& w, const Poly& m) {
  if (w.ring->kind != RingKind::poly_ring)
    fail(errc::domain, "associate membership requires a polynomial ring");
  int64_t p = w.ring->n;
  switch (w.kind) {
    case MultSetKind::regulars: return !m.empty();
    case MultSetKind::units: return poly_deg(m) == 0;
    case MultSetKind::even_degree: {
      int d = poly_deg(m);
      return d >= 0 && d % 2 == 0;
    }
    default:
      for (int64_t c = 1; c < p; ++c)
        if (multset_contains(w, Value{poly_scale(p, m, c)})) return true;
      return false;
  }
}

// ---------------------------------------------------------------------------
// parsing / printing
// ---------------------------------------------------------------------------

inline std::vector<Value> parse_element_list(const RingPtr& r, const std::string& body) {
  std::vector<Value> out;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && (body[i] == '(' || body[i] == '[')) ++depth;
    if (i < body.size() && (body[i] == ')' || body[i] == ']')) --depth;
    if (i == body.size() || (body[i] == ';' && depth == 0)) {
      std::string piece = body.substr(start, i - start);
      if (piece.find_first_not_of(" \t") != std::string::npos)
        out.push_back(parse_value(r, piece));
      start = i + 1;
    }
  }
  return out;
}

inline MultSetPtr parse_multset(const RingPtr& r, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto braced = [&](const std::string& head) -> std::string {
    std::string rest = t.substr(head.size());
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
      fail(errc::parse, "expected " + head + "{...}");
    return rest.substr(1, rest.size() - 2);
  };
  if (t == "reg") return make_reg(r);
  if (t == "units") return make_units_set(r);
  if (t == "evendeg") return make_even_degree(r);
  if (t.rfind("gen:", 0) == 0) return make_monoid_gen(r, parse_element_list(r, braced("gen:")));
  if (t.rfind("explicit:", 0) == 0)
    return make_explicit_set(r, parse_element_list(r, braced("explicit:")));
  if (t.rfind("complement:", 0) == 0)
    return make_complement_of_ideals(r, parse_element_list(r, braced("complement:")));
  fail(errc::parse, "unknown multiplicative set \"" + text + "\"");
}

inline std::string print_multset(const MultSet& w) {
  auto list = [&](const std::string& head) {
    std::string s = head + "{";
    for (size_t i = 0; i < w.gens.size(); ++i) {
      if (i) s += ";";
      s += print_value(w.ring, w.gens[i]);
    }
    return s + "}";
  };
  switch (w.kind) {
    case MultSetKind::regulars: return "reg";
    case MultSetKind::units: return "units";
    case MultSetKind::even_degree: return "evendeg";
    case MultSetKind::monoid_gen: return list("gen:");
    case MultSetKind::explicit_finite: return list("explicit:");
    case MultSetKind::complement_of_ideals: return list("complement:");
    case MultSetKind::hom_preimage: return "preimage(" + print_multset(*w.inner) + ")";
  }
  return "?";
}

}  // namespace factroid
