#pragma once

// Brute-force reference paths used to certify the engine on small instances.
// Everything here works element by element over materialized ambient sets;
// nothing is borrowed from the linear-algebra or closure machinery, and
// results come back as plain sorted element lists.

#include <cstdint>
#include <set>
#include <vector>

#include "multset.hpp"

namespace factroid::oracle {

struct EnumerationBudget {
  int max_dim_p2 = 6;   // ambient dimension cap over GF(2)
  int max_dim_p3 = 4;   // over GF(3)
  int64_t max_ring_size = 64;
  int64_t max_candidates = int64_t(1) << 24;
};

namespace detail {

inline mpz_class subspace_count(int64_t p, int n) {
  // Galois-number recurrence G(n) built from q-binomials:
  // C(n,k) = C(n-1,k-1) + p^k C(n-1,k)
  std::vector<mpz_class> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> nxt(i + 1, 0);
    mpz_class pk = 1;
    nxt[0] = 1;
    for (int k = 1; k <= i; ++k) {
      mpz_pow_ui(pk.get_mpz_t(), mpz_class(p).get_mpz_t(), k);
      nxt[k] = row[k - 1];
      if (k < i) nxt[k] += pk * row[k];
    }
    row = std::move(nxt);
  }
  mpz_class total = 0;
  for (const auto& c : row) total += c;
  return total;
}

inline void check_graded_budget(const RingPtr& r, int dim, const EnumerationBudget& b) {
  int cap = r->n == 2 ? b.max_dim_p2 : r->n == 3 ? b.max_dim_p3 : b.max_dim_p3;
  if (dim > cap) fail(errc::budget, "ambient dimension exceeds the enumeration budget");
  if (subspace_count(r->n, dim) > b.max_candidates)
    fail(errc::budget, "too many subgroup candidates");
}

// all polynomials of degree <= d via a coefficient odometer
inline std::vector<Value> graded_universe(const RingPtr& r, const std::vector<Monomial>& mons) {
  int64_t p = r->n;
  int dim = int(mons.size());
  int64_t total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= p;
    if (total > (int64_t(1) << 20)) fail(errc::budget, "ambient too large to materialize");
  }
  std::vector<Value> out;
  out.reserve(size_t(total));
  std::vector<int64_t> digits(size_t(dim), 0);
  for (int64_t idx = 0; idx < total; ++idx) {
    Poly q;
    for (int i = 0; i < dim; ++i)
      if (digits[size_t(i)]) poly_add_term(q, mons[size_t(i)], digits[size_t(i)], p);
    out.push_back(Value{q});
    for (int i = 0; i < dim; ++i) {
      if (++digits[size_t(i)] < p) break;
      digits[size_t(i)] = 0;
    }
  }
  return out;
}

inline std::vector<Value> finite_universe(const RingPtr& r, const EnumerationBudget& b) {
  auto sz = ring_size(r);
  if (!sz || *sz > b.max_ring_size)
    fail(errc::budget, "ring exceeds the enumeration budget");
  return ring_elements(r, b.max_ring_size);
}

struct ElemSet {
  std::set<Value, ValueLess> s;
  bool has(const Value& v) const { return s.count(v) != 0; }
};

// additive closure; every roster ring element has finite additive order, so
// closing under addition alone already yields a subgroup
inline void close_additively(const RingPtr& r, ElemSet& e) {
  e.s.insert(zero(r));
  std::vector<Value> frontier(e.s.begin(), e.s.end());
  while (!frontier.empty()) {
    std::vector<Value> next;
    for (const auto& x : frontier)
      for (const auto& y : std::vector<Value>(e.s.begin(), e.s.end())) {
        Value z = add(r, x, y);
        if (e.s.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
}

inline std::vector<Value> set_to_sorted(const ElemSet& e) {
  return std::vector<Value>(e.s.begin(), e.s.end());
}

// W-members inside the materialized universe, by the literal definition
inline std::vector<Value> w_members(const RingPtr& r, const MultSet& W,
                                    const std::vector<Value>& universe) {
  std::vector<Value> out;
  for (const auto& w : universe)
    if (!is_zero(r, w) && multset_contains(W, w)) out.push_back(w);
  // w = 0 can lie in an explicit or preimage set; keep it so the filter sees it
  for (const auto& w : universe)
    if (is_zero(r, w) && multset_contains(W, w)) out.push_back(w);
  return out;
}

}  // namespace detail

// all additive subgroups: GF(p)-subspaces of the degree-d ambient via
// reduced-echelon enumeration (rank ascending, pivot sets lexicographic,
// free entries in odometer order), or a join-closure sweep for finite rings
inline std::vector<std::vector<Value>> enumerate_subgroups(
    const RingPtr& r, int degree_bound, const EnumerationBudget& b = {}) {
  std::vector<std::vector<Value>> out;
  if (r->kind == RingKind::poly_ring) {
    if (degree_bound < 0) fail(errc::domain, "degree bound must be nonnegative");
    auto mons = monomials_up_to(r->nvars(), degree_bound);
    int n = int(mons.size());
    detail::check_graded_budget(r, n, b);
    int64_t p = r->n;
    // rank 0
    out.push_back({zero(r)});
    for (int rank = 1; rank <= n; ++rank) {
      // pivot combinations in lexicographic order
      std::vector<int> piv(size_t(rank), 0);
      for (int i = 0; i < rank; ++i) piv[size_t(i)] = i;
      while (true) {
        std::vector<bool> is_piv(size_t(n), false);
        for (int c : piv) is_piv[size_t(c)] = true;
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        for (int i = 0; i < rank; ++i)
          for (int j = piv[size_t(i)] + 1; j < n; ++j)
            if (!is_piv[size_t(j)]) free_pos.push_back({i, j});
        int64_t combos = 1;
        for (size_t k = 0; k < free_pos.size(); ++k) {
          combos *= p;
          if (combos > b.max_candidates) fail(errc::budget, "too many subgroup candidates");
        }
        std::vector<std::vector<int64_t>> rows(size_t(rank), std::vector<int64_t>(size_t(n), 0));
        for (int i = 0; i < rank; ++i) rows[size_t(i)][size_t(piv[size_t(i)])] = 1;
        std::vector<int64_t> digits(free_pos.size(), 0);
        for (int64_t idx = 0; idx < combos; ++idx) {
          for (size_t k = 0; k < free_pos.size(); ++k)
            rows[size_t(free_pos[k].first)][size_t(free_pos[k].second)] = digits[k];
          // materialize all p^rank combinations of the basis rows
          detail::ElemSet elems;
          int64_t nc = 1;
          for (int i = 0; i < rank; ++i) nc *= p;
          std::vector<int64_t> c(size_t(rank), 0);
          for (int64_t t = 0; t < nc; ++t) {
            Poly q;
            for (int i = 0; i < rank; ++i)
              if (c[size_t(i)])
                for (int j = 0; j < n; ++j)
                  if (rows[size_t(i)][size_t(j)])
                    poly_add_term(q, mons[size_t(j)],
                                  c[size_t(i)] * rows[size_t(i)][size_t(j)], p);
            elems.s.insert(Value{q});
            for (int i = 0; i < rank; ++i) {
              if (++c[size_t(i)] < p) break;
              c[size_t(i)] = 0;
            }
          }
          out.push_back(detail::set_to_sorted(elems));
          for (size_t k = 0; k < free_pos.size(); ++k) {
            if (++digits[k] < p) break;
            digits[k] = 0;
          }
          if (free_pos.empty()) break;
        }
        // next pivot combination
        int i = rank - 1;
        while (i >= 0 && piv[size_t(i)] == n - rank + i) --i;
        if (i < 0) break;
        ++piv[size_t(i)];
        for (int j = i + 1; j < rank; ++j) piv[size_t(j)] = piv[size_t(j - 1)] + 1;
      }
    }
    return out;
  }
  // finite rings: grow the subgroup lattice by adjoining single elements
  auto universe = detail::finite_universe(r, b);
  std::set<std::vector<Value>, std::function<bool(const std::vector<Value>&,
                                                  const std::vector<Value>&)>>
      seen([](const std::vector<Value>& a, const std::vector<Value>& c) {
        if (a.size() != c.size()) return a.size() < c.size();
        ValueLess lt;
        for (size_t i = 0; i < a.size(); ++i) {
          if (lt(a[i], c[i])) return true;
          if (lt(c[i], a[i])) return false;
        }
        return false;
      });
  detail::ElemSet base;
  detail::close_additively(r, base);
  std::vector<std::vector<Value>> work{detail::set_to_sorted(base)};
  seen.insert(work[0]);
  while (!work.empty()) {
    auto cur = std::move(work.back());
    work.pop_back();
    for (const auto& x : universe) {
      detail::ElemSet grown;
      grown.s.insert(cur.begin(), cur.end());
      if (grown.has(x)) continue;
      grown.s.insert(x);
      detail::close_additively(r, grown);
      auto key = detail::set_to_sorted(grown);
      if (int64_t(seen.size()) > b.max_candidates)
        fail(errc::budget, "too many subgroup candidates");
      if (seen.insert(key).second) work.push_back(key);
    }
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

// element-wise saturation test: F passes when wy in F forces y in F for every
// enumerated member w of W
inline bool elementwise_factroid(const RingPtr& r, const MultSet& W,
                                 const std::vector<Value>& elems,
                                 const std::vector<Value>& universe,
                                 const std::vector<Value>& wmem) {
  detail::ElemSet F;
  F.s.insert(elems.begin(), elems.end());
  for (const auto& w : wmem)
    for (const auto& y : universe)
      if (!F.has(y) && F.has(mul(r, w, y))) return false;
  return true;
}

inline std::vector<std::vector<Value>> enumerate_factroids(
    const RingPtr& r, const MultSet& W, int degree_bound,
    const EnumerationBudget& b = {}) {
  std::vector<Value> universe =
      r->kind == RingKind::poly_ring
          ? detail::graded_universe(r, monomials_up_to(r->nvars(), degree_bound))
          : detail::finite_universe(r, b);
  auto wmem = detail::w_members(r, W, universe);
  std::vector<std::vector<Value>> out;
  for (auto& g : enumerate_subgroups(r, degree_bound, b))
    if (elementwise_factroid(r, W, g, universe, wmem)) out.push_back(std::move(g));
  return out;
}

// literal closure: repeatedly add every x whose product with some enumerated
// W-member lands in the current set, then re-close under subtraction
inline std::vector<Value> naive_closure(const RingPtr& r, const MultSet& W,
                                        const std::vector<Value>& gens,
                                        int degree_bound = -1,
                                        const EnumerationBudget& b = {}) {
  if (r->kind == RingKind::poly_ring) {
    int d = degree_bound;
    if (d < 0) {
      d = 0;
      for (const auto& g : gens) {
        int dg = poly_deg(as_poly(g));
        if (dg > d) d = dg;
      }
    }
    auto universe = detail::graded_universe(r, monomials_up_to(r->nvars(), d));
    // bucket by degree: over a domain deg(wy) = deg w + deg y, so pairs whose
    // degrees sum past d can never land in the current set
    std::vector<std::vector<Value>> by_deg(size_t(d) + 1);
    for (const auto& v : universe) {
      int dv = poly_deg(as_poly(v));
      if (dv >= 0) by_deg[size_t(dv)].push_back(v);
    }
    detail::ElemSet cur;
    cur.s.insert(gens.begin(), gens.end());
    detail::close_additively(r, cur);
    for (;;) {
      std::vector<Value> found;
      for (int dw = 0; dw <= d; ++dw)
        for (const auto& w : by_deg[size_t(dw)]) {
          if (!multset_contains(W, w)) continue;
          for (int dy = 0; dw + dy <= d; ++dy)
            for (const auto& y : by_deg[size_t(dy)])
              if (!cur.has(y) && cur.has(mul(r, w, y))) found.push_back(y);
        }
      if (found.empty()) break;
      cur.s.insert(found.begin(), found.end());
      detail::close_additively(r, cur);
    }
    return detail::set_to_sorted(cur);
  }
  auto universe = detail::finite_universe(r, b);
  auto wmem = detail::w_members(r, W, universe);
  detail::ElemSet cur;
  cur.s.insert(gens.begin(), gens.end());
  detail::close_additively(r, cur);
  for (;;) {
    std::vector<Value> found;
    for (const auto& w : wmem)
      for (const auto& y : universe)
        if (!cur.has(y) && cur.has(mul(r, w, y))) found.push_back(y);
    if (found.empty()) break;
    cur.s.insert(found.begin(), found.end());
    detail::close_additively(r, cur);
  }
  return detail::set_to_sorted(cur);
}

// reference integer closure: divide out each listed multiplier to exhaustion
inline mpz_class naive_closure_int(const mpz_class& g0, const std::vector<mpz_class>& ws) {
  mpz_class g = abs(g0);
  if (g == 0) return g;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& t : ws) {
      if (t == 0) continue;
      for (;;) {
        mpz_class d = gcd(g, t);
        if (d <= 1) break;
        g /= d;
        moved = true;
      }
    }
  }
  return g;
}

}  // namespace factroid::oracle
