#pragma once

// Ring-level classification: unit-additive and sublocalizable predicates,
// the sublocalization subring, the unit-saturation chain, Euclidean factroid
// lists, and product decompositions.

#include <optional>
#include <utility>
#include <vector>

#include "engine.hpp"

namespace factroid {

struct ClassificationReport {
  RingPtr ring;
  bool unit_additive = false;
  bool sublocalizable = false;
  bool local = false;
  std::optional<SubgroupRep> sublocalization;
  std::optional<std::pair<Value, Value>> counterexample;  // failing unit pair
};

namespace detail {

// every roster ring has a finite unit set: +-1 over Z, the nonzero scalars
// of a polynomial ring, everything enumerable for finite rings
inline std::vector<Value> finite_units(const RingPtr& r) {
  switch (r->kind) {
    case RingKind::integers:
      return {one(r), from_int(r, -1)};
    case RingKind::poly_ring: {
      std::vector<Value> out;
      for (int64_t c = 1; c < r->n; ++c) out.push_back(from_int(r, c));
      return out;
    }
    case RingKind::integers_mod:
    case RingKind::prime_field:
    case RingKind::product:
      return units_of(r);
  }
  fail(errc::internal, "bad ring kind");
}

// the finite set A^x union J(A) for roster rings (J is finite or zero here)
inline std::vector<Value> units_and_jacobson(const RingPtr& r) {
  std::vector<Value> set = finite_units(r);
  if (r->kind == RingKind::integers || r->kind == RingKind::poly_ring) {
    set.push_back(zero(r));
    return set;
  }
  for (const auto& x : ring_elements(r, explicit_group_cap))
    if (in_jacobson(r, x)) set.push_back(x);
  return set;
}

inline bool value_in(const RingPtr& r, const std::vector<Value>& xs, const Value& v) {
  for (const auto& x : xs)
    if (values_equal(x, v)) return true;
  return false;
}

}  // namespace detail

inline bool unit_additive_check(const RingPtr& r,
                                std::optional<std::pair<Value, Value>>* cex = nullptr) {
  auto units = detail::finite_units(r);
  for (const auto& u : units)
    for (const auto& v : units) {
      Value s = add(r, u, v);
      if (!is_unit(r, s) && !is_nilpotent(r, s)) {
        if (cex) *cex = {u, v};
        return false;
      }
    }
  return true;
}

inline bool sublocalizable_check(const RingPtr& r,
                                 std::optional<std::pair<Value, Value>>* cex = nullptr) {
  auto units = detail::finite_units(r);
  bool ok = true;
  std::optional<std::pair<Value, Value>> bad;
  for (const auto& u : units) {
    for (const auto& v : units) {
      Value s = add(r, u, v);
      if (!is_unit(r, s) && !in_jacobson(r, s)) {
        bad = {u, v};
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  // cross-check: the definition is equivalent to A^x union J(A) being a
  // subring, i.e. closed under subtraction and multiplication
  auto set = detail::units_and_jacobson(r);
  bool closed = true;
  for (const auto& a : set) {
    for (const auto& b : set) {
      if (!detail::value_in(r, set, sub(r, a, b)) ||
          !detail::value_in(r, set, mul(r, a, b))) {
        closed = false;
        break;
      }
    }
    if (!closed) break;
  }
  if (ok != closed)
    fail(errc::internal, "sublocalizable predicate disagrees with its subring form");
  if (cex) *cex = bad;
  return ok;
}

inline bool local_check(const RingPtr& r) {
  switch (r->kind) {
    case RingKind::integers:
      return false;
    case RingKind::poly_ring:
      return false;  // the variables are non-units outside J = 0
    case RingKind::integers_mod:
    case RingKind::prime_field: {
      for (const auto& x : ring_elements(r))
        if (!is_unit(r, x) && !in_jacobson(r, x)) return false;
      return true;
    }
    case RingKind::product: {
      auto sz = ring_size(r);
      if (!sz) return false;  // a nontrivial product is never local
      for (const auto& x : ring_elements(r, explicit_group_cap))
        if (!is_unit(r, x) && !in_jacobson(r, x)) return false;
      return true;
    }
  }
  fail(errc::internal, "bad ring kind");
}

// smallest subring containing the units: the additive closure of all
// products of units; asserted equal to A^x union J(A)
inline SubgroupRep sublocalization(const RingPtr& r) {
  if (!sublocalizable_check(r))
    fail(errc::domain, "ring is not sublocalizable");
  if (r->kind == RingKind::poly_ring) {
    AmbientSpace amb = make_ambient(r, 0);
    return make_subspace_rep(span(amb, {one(r)}));
  }
  if (r->kind == RingKind::integers)
    fail(errc::internal, "Z is not sublocalizable");  // caught above
  auto units = detail::finite_units(r);
  std::vector<Value> gen{one(r)};
  for (const auto& u : units) gen.push_back(u);
  // close under multiplication by units, then additively
  bool grew = true;
  std::vector<Value> cur = detail::subgroup_close(r, std::move(gen));
  while (grew) {
    grew = false;
    std::vector<Value> next = cur;
    for (const auto& x : cur)
      for (const auto& u : units) {
        Value p = mul(r, x, u);
        if (!detail::value_in(r, next, p)) {
          next.push_back(p);
          grew = true;
        }
      }
    if (grew) cur = detail::subgroup_close(r, std::move(next));
  }
  auto expected = detail::units_and_jacobson(r);
  std::sort(expected.begin(), expected.end(), ValueLess{});
  expected.erase(std::unique(expected.begin(), expected.end(),
                             [](const Value& a, const Value& b) { return values_equal(a, b); }),
                 expected.end());
  std::sort(cur.begin(), cur.end(), ValueLess{});
  if (cur.size() != expected.size())
    fail(errc::internal, "sublocalization differs from units plus radical");
  for (size_t i = 0; i < cur.size(); ++i)
    if (!values_equal(cur[i], expected[i]))
      fail(errc::internal, "sublocalization differs from units plus radical");
  return make_explicit_group(r, std::move(cur));
}

inline ClassificationReport classify_ring(const RingPtr& r) {
  ClassificationReport rep;
  rep.ring = r;
  std::optional<std::pair<Value, Value>> cex_ua, cex_sl;
  rep.unit_additive = unit_additive_check(r, &cex_ua);
  rep.sublocalizable = sublocalizable_check(r, &cex_sl);
  rep.local = local_check(r);
  rep.counterexample = rep.unit_additive ? cex_sl : cex_ua;
  if (rep.sublocalizable && r->kind != RingKind::integers)
    rep.sublocalization = sublocalization(r);
  return rep;
}

// ---------------------------------------------------------------------------
// the unit-saturation chain: V_0 = units, W_i = nonzero sums from V_{i-1},
// V_i = regular saturation of W_i, truncated to a degree/absolute-value bound

struct UaChain {
  std::vector<std::vector<Value>> stages;  // V_0, V_1, ..., each sorted
  bool stabilized = false;
};

namespace detail {

// nonzero finite sums of elements of S (repeats allowed), inside the bound
inline std::vector<Value> bounded_sums(const RingPtr& r, const std::vector<Value>& S,
                                       int bound) {
  std::set<Value, ValueLess> seen(S.begin(), S.end());
  std::vector<Value> frontier(S.begin(), S.end());
  auto in_window = [&](const Value& v) {
    if (r->kind == RingKind::integers) return abs(as_mpz(v)) <= bound;
    return true;  // sums never raise polynomial degree
  };
  while (!frontier.empty()) {
    std::vector<Value> next;
    for (const auto& x : frontier)
      for (const auto& s : S) {
        Value y = add(r, x, s);
        if (!in_window(y)) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<Value> out;
  for (const auto& v : seen)
    if (!is_zero(r, v)) out.push_back(v);
  return out;
}

}  // namespace detail

inline UaChain ua_chain(const RingPtr& r, int depth, int bound) {
  if (depth < 0) fail(errc::domain, "chain depth must be nonnegative");
  if (r->kind != RingKind::integers && r->kind != RingKind::poly_ring)
    fail(errc::unsupported, "the unit chain is defined over roster domains");
  UaChain out;
  std::vector<Value> V = detail::finite_units(r);
  std::sort(V.begin(), V.end(), ValueLess{});
  out.stages.push_back(V);
  MultSetPtr reg = make_reg(r);
  for (int i = 1; i <= depth; ++i) {
    std::vector<Value> W = detail::bounded_sums(r, V, bound);
    std::vector<Value> Vi = saturate(r, *reg, W, bound);
    std::vector<Value> keep;
    for (const auto& v : Vi)
      if (!is_zero(r, v)) keep.push_back(v);
    std::sort(keep.begin(), keep.end(), ValueLess{});
    out.stages.push_back(keep);
    if (keep.size() == V.size()) {
      bool same = true;
      for (size_t k = 0; k < keep.size(); ++k)
        if (!values_equal(keep[k], V[k])) { same = false; break; }
      if (same) {
        out.stabilized = true;
        break;
      }
    }
    V = std::move(keep);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Euclidean structure: all factroids of GF(p)[x] are degree balls, and Z has
// only the two trivial ones

inline std::vector<SubgroupRep> euclidean_factroids(const RingPtr& r, int d) {
  if (r->kind == RingKind::integers)
    return {make_cyclic_int(0), make_cyclic_int(1)};
  if (r->kind == RingKind::poly_ring && r->vars.size() == 1) {
    if (d < 0) fail(errc::domain, "degree bound must be nonnegative");
    AmbientSpace amb = make_ambient(r, d);
    std::vector<SubgroupRep> out;
    out.push_back(make_subspace_rep(zero_subspace(amb)));
    for (int k = 0; k <= d; ++k) {
      std::vector<Value> gens;
      for (int j = 0; j <= k; ++j) {
        Poly q;
        poly_add_term(q, Monomial{{uint16_t(j)}}, 1, r->n);
        gens.push_back(Value{q});
      }
      out.push_back(make_subspace_rep(span(amb, gens)));
    }
    return out;
  }
  fail(errc::unsupported, "Euclidean classification covers Z and GF(p)[x]");
}

// ---------------------------------------------------------------------------
// product decompositions

struct ProductStructure {
  bool is_product = false;
  SubgroupRep left_image, right_image;
};

inline ProductStructure product_structure(const SubgroupRep& F) {
  if (F.ring->kind != RingKind::product)
    fail(errc::domain, "product decomposition needs a product ring");
  auto elems = rep_elements(F);
  std::vector<Value> lefts, rights;
  for (const auto& e : elems) {
    lefts.push_back(as_pair(e)[0]);
    rights.push_back(as_pair(e)[1]);
  }
  ProductStructure out{false,
                       make_explicit_group(F.ring->left, std::move(lefts)),
                       make_explicit_group(F.ring->right, std::move(rights))};
  int64_t nl = int64_t(std::get<ExplicitGroup>(out.left_image.rep).elems.size());
  int64_t nr = int64_t(std::get<ExplicitGroup>(out.right_image.rep).elems.size());
  out.is_product = (nl * nr == int64_t(elems.size()));
  return out;
}

}  // namespace factroid
