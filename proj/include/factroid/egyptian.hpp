#pragma once

// G-sets: G(S) = union over h in W of ([hS] : h), the saturation-closure
// colon trick behind Egyptian-fraction decisions.  Membership is a
// semi-decision: witnesses h are searched in degree order (then graded
// lexicographic within a degree) up to a caller bound.

#include <optional>
#include <utility>
#include <vector>

#include "engine.hpp"

namespace factroid {

enum class GStatus { member, non_member, not_found_up_to };

inline const char* g_status_name(GStatus s) {
  switch (s) {
    case GStatus::member: return "member";
    case GStatus::non_member: return "non_member";
    case GStatus::not_found_up_to: return "not_found_up_to";
  }
  return "?";
}

struct GMembership {
  GStatus status = GStatus::not_found_up_to;
  int searched_bound = 0;             // degree bound (graded) or |h| bound (Z)
  std::optional<Value> witness;       // h with h*x in [hS]
  std::vector<Value> closure_basis;   // basis of [hS] for that witness
};

namespace detail {

// candidate h of degree 0..H in the literal set, degree then graded-lex,
// scalar multiples of each monic representative in ascending scalar order
template <typename Fn>
inline void for_each_set_member(const MultSet& W, int maxdeg, Fn&& fn) {
  const RingPtr& r = W.ring;
  const int64_t p = r->n;
  bool stop = false;
  for (int64_t c = 1; c < p && !stop; ++c)
    if (multset_contains(W, Value{Poly{{Monomial{}, c}}})) stop = !fn(Poly{{Monomial{}, c}});
  if (stop) return;
  enumerate_monic(p, int(r->vars.size()), 1, maxdeg, [&](const Poly& m) {
    for (int64_t c = 1; c < p; ++c) {
      Poly h = poly_scale(p, m, c);
      if (multset_contains(W, Value{h}))
        if (!fn(h)) return false;
    }
    return true;
  });
}

}  // namespace detail

inline GMembership g_membership(const RingPtr& r, const MultSet& W, const Value& x,
                                const std::vector<Value>& gens, int max_witness = 3) {
  if (!same_ring(r, W.ring))
    fail(errc::domain, "multiplicative set lives over a different ring");
  GMembership out;
  out.searched_bound = max_witness;
  if (r->kind == RingKind::poly_ring) {
    int maxS = 0;
    for (const auto& s : gens) maxS = std::max(maxS, std::max(0, degree_of(r, s)));
    // everything in G(S) satisfies the same degree bound as the closure
    if (degree_of(r, x) > maxS) {
      out.status = GStatus::non_member;
      return out;
    }
    detail::for_each_set_member(W, max_witness, [&](const Poly& h) {
      std::vector<Value> hS;
      for (const auto& s : gens) hS.push_back(mul(r, Value{h}, s));
      ClosureResult C = closure(r, W, hS);
      Value hx = mul(r, Value{h}, x);
      if (contains_value(C.result, hx)) {
        out.status = GStatus::member;
        out.witness = Value{h};
        out.closure_basis = basis_values(C.result);
        return false;
      }
      return true;
    });
    return out;
  }
  if (r->kind == RingKind::integers) {
    mpz_class g = 0;
    for (const auto& s : gens) g = gcd(g, as_mpz(s));
    g = abs(g);
    const mpz_class& xv = as_mpz(x);
    for (int64_t h = 1; h <= max_witness; ++h) {
      if (!multset_contains(W, from_int(r, h)) && !multset_contains(W, from_int(r, -h)))
        continue;
      mpz_class c = closure_int(g * h, W);
      bool member = (c == 0) ? (xv * h == 0) : mpz_divisible_p(mpz_class(xv * h).get_mpz_t(), c.get_mpz_t());
      if (member) {
        out.status = GStatus::member;
        out.witness = from_int(r, h);
        out.closure_basis = {from_mpz(r, c)};
        return out;
      }
    }
    return out;
  }
  // finite rings: the h search is exhaustive, so the answer is definitive
  auto universe = detail::finite_ring_universe(r);
  for (const auto& h : universe) {
    if (!multset_contains(W, h)) continue;
    std::vector<Value> hS;
    for (const auto& s : gens) hS.push_back(mul(r, h, s));
    ClosureResult C = closure(r, W, hS);
    if (contains_value(C.result, mul(r, h, x))) {
      out.status = GStatus::member;
      out.witness = h;
      out.closure_basis = std::holds_alternative<FpSubspace>(C.result.rep)
                              ? basis_values(C.result)
                              : rep_elements(C.result);
      return out;
    }
  }
  out.status = GStatus::non_member;
  return out;
}

// ---------------------------------------------------------------------------
// regularity of the closure: does ([hS] : h) ever exceed [S]?

struct TRegularReport {
  bool regular_up_to_bound = true;
  int searched_bound = 0;
  std::optional<std::pair<Value, Value>> counterexample;  // (h, escaping x)
};

inline TRegularReport t_regular_check(const RingPtr& r, const MultSet& W,
                                      const std::vector<Value>& gens, int max_witness = 3) {
  if (!same_ring(r, W.ring))
    fail(errc::domain, "multiplicative set lives over a different ring");
  TRegularReport out;
  out.searched_bound = max_witness;
  if (r->kind == RingKind::poly_ring) {
    ClosureResult base = closure(r, W, gens);
    const FpSubspace& B = as_subspace(base.result);
    // scalar h never escape: scaling is a closure-preserving bijection
    enumerate_monic(r->n, int(r->vars.size()), 1, max_witness, [&](const Poly& m) {
      for (int64_t c = 1; c < r->n; ++c) {
        Poly h = poly_scale(r->n, m, c);
        if (!multset_contains(W, Value{h})) continue;
        std::vector<Value> hS;
        for (const auto& s : gens) hS.push_back(mul(r, Value{h}, s));
        ClosureResult C = closure(r, W, hS);
        FpSubspace quot = mul_preimage(as_subspace(C.result), Value{h});
        for (const auto& row : quot.mat.rows) {
          Poly q = coords_to_poly(quot.amb, row);
          if (subspace_membership(B, q) != Membership::member) {
            out.regular_up_to_bound = false;
            out.counterexample = {Value{h}, Value{q}};
            return false;
          }
        }
      }
      return true;
    });
    return out;
  }
  if (r->kind == RingKind::integers) {
    mpz_class g = 0;
    for (const auto& s : gens) g = gcd(g, as_mpz(s));
    g = abs(g);
    mpz_class base = closure_int(g, W);
    for (int64_t h = 1; h <= max_witness; ++h) {
      if (!multset_contains(W, from_int(r, h)) && !multset_contains(W, from_int(r, -h)))
        continue;
      mpz_class c = closure_int(g * h, W);
      mpz_class quot = (c == 0) ? mpz_class(0) : c / gcd(c, mpz_class(h));
      bool inside = (base == 0) ? (quot == 0)
                                : mpz_divisible_p(quot.get_mpz_t(), base.get_mpz_t());
      if (!inside) {
        out.regular_up_to_bound = false;
        out.counterexample = {from_int(r, h), from_mpz(r, quot)};
        return out;
      }
    }
    return out;
  }
  auto universe = detail::finite_ring_universe(r);
  ClosureResult base = closure(r, W, gens);
  for (const auto& h : universe) {
    if (!multset_contains(W, h)) continue;
    std::vector<Value> hS;
    for (const auto& s : gens) hS.push_back(mul(r, h, s));
    ClosureResult C = closure(r, W, hS);
    SubgroupRep quot = colon_by_set(C.result, {h});
    for (const auto& q : rep_elements(quot)) {
      if (!contains_value(base.result, q)) {
        out.regular_up_to_bound = false;
        out.counterexample = {h, q};
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Egyptian decisions: a/b is a sum of unit fractions with denominators in W
// exactly when b is in W and a lands in G({b}).

struct EgyptianReport {
  Value a, b;
  GMembership g;
};

inline EgyptianReport egyptian_decide(const RingPtr& r, const MultSet& W,
                                      const Value& a, const Value& b, int max_witness = 3) {
  if (is_zero(r, b)) fail(errc::domain, "denominator is zero");
  if (!multset_contains(W, b))
    fail(errc::domain, "denominator is not in the multiplicative set");
  EgyptianReport rep{a, b, g_membership(r, W, a, {b}, max_witness)};
  return rep;
}

// literal check of a * prod(ws) = b * sum_i prod_{j != i} ws[j], plus
// membership of every denominator
struct WitnessReport {
  bool valid = false;
  std::string reason;
};

inline WitnessReport witness_verify(const RingPtr& r, const Value& a, const Value& b,
                                    const std::vector<Value>& ws, const MultSet& W) {
  for (const auto& w : ws)
    if (!multset_contains(W, w))
      return {false, "a denominator is outside the multiplicative set"};
  Value prod = one(r);
  for (const auto& w : ws) prod = mul(r, prod, w);
  Value lhs = mul(r, a, prod);
  Value sum = zero(r);
  for (size_t i = 0; i < ws.size(); ++i) {
    Value t = one(r);
    for (size_t j = 0; j < ws.size(); ++j)
      if (j != i) t = mul(r, t, ws[j]);
    sum = add(r, sum, t);
  }
  Value rhs = mul(r, b, sum);
  if (!values_equal(lhs, rhs))
    return {false, "cleared-denominator identity fails"};
  return {true, ""};
}

// ---------------------------------------------------------------------------
// greedy unit-fraction expansions of positive rationals

struct GreedyResult {
  std::vector<mpz_class> denominators;
};

namespace detail {

inline mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

inline GreedyResult greedy_unit_fractions(const mpq_class& x, bool distinct = false,
                                          int max_terms = 256) {
  mpq_class r = x;
  if (r.get_den() == 0) fail(errc::domain, "greedy expansion needs a positive rational");
  r.canonicalize();
  if (r <= 0) fail(errc::domain, "greedy expansion needs a positive rational");
  const mpq_class target = r;
  GreedyResult out;
  mpz_class prev = 0;
  while (r != 0) {
    if (int(out.denominators.size()) >= max_terms)
      fail(errc::budget, "greedy expansion exceeded the term budget");
    mpz_class d;
    if (!distinct) {
      d = (r >= 1) ? mpz_class(1) : detail::ceil_div(r.get_den(), r.get_num());
    } else {
      mpz_class base = (r >= 1) ? mpz_class(1) : detail::ceil_div(r.get_den(), r.get_num());
      mpz_class lo = prev + 1;
      d = lo > base ? lo : base;
    }
    out.denominators.push_back(d);
    prev = d;
    r -= mpq_class(mpz_class(1), d);
  }
  mpq_class check = 0;
  for (const auto& d : out.denominators) check += mpq_class(mpz_class(1), d);
  if (check != target) fail(errc::internal, "greedy expansion failed to re-sum");
  return out;
}

}  // namespace factroid
