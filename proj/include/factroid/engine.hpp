#pragma once

// Saturation, one-step absorption closure, the closure fixpoint, and the
// derived operators: is_factroid, w_of, a_of, colons, hom preimages.

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <vector>

#include "multset.hpp"
#include "subspace.hpp"

namespace factroid {

struct ClosureResult {
  SubgroupRep result;
  int iterations = 0;       // f1 applications until fixpoint
  bool stabilized = false;
  int degree_bound = -1;    // graded ambients only
  std::vector<SubgroupRep> trace;  // F0, F1, ... when requested
};

namespace detail {

// Does some element of the monoid generated by W have p as a divisor?
// Over Z this is exactly the condition that lets a closure step divide
// p out of a generator.
inline bool prime_divides_some_member(const MultSet& W, const mpz_class& p) {
  switch (W.kind) {
    case MultSetKind::regulars:
      return true;
    case MultSetKind::units:
      return false;
    case MultSetKind::monoid_gen:
    case MultSetKind::explicit_finite:
      for (const auto& g : W.gens)
        if (mpz_divisible_p(as_mpz(g).get_mpz_t(), p.get_mpz_t())) return true;
      return false;
    case MultSetKind::complement_of_ideals:
      for (const auto& g : W.gens) {
        mpz_class q = abs(as_mpz(g));
        if (q == p) return false;
      }
      return true;
    case MultSetKind::hom_preimage: {
      // W = phi^{-1}(W') for phi: Z -> Z/n.  A lift of t' in W' can be
      // steered to any residue coprime to n, so p coprime to n always
      // divides some member; p | n forces t' itself to be a multiple of p.
      const RingPtr& tgt = W.hom->target;
      int64_t n = tgt->n;
      if (!mpz_divisible_p(mpz_class(n).get_mpz_t(), p.get_mpz_t())) return true;
      int64_t pi = p.get_si();
      for (int64_t t = 0; t < n; t += pi)
        if (multset_contains(*W.inner, from_int(tgt, t))) return true;
      return false;
    }
    default:
      fail(errc::unsupported, "multiplicative set is not defined over the integers");
  }
}

inline std::vector<mpz_class> strippable_primes(const MultSet& W, const mpz_class& g) {
  std::vector<mpz_class> out;
  for (const auto& p : prime_divisors_mpz(abs(g)))
    if (prime_divides_some_member(W, p)) out.push_back(p);
  return out;
}

// One absorption step over Z: divide out, completely, every strippable prime.
// A single step already removes each such prime to full multiplicity because
// the monoid contains arbitrarily high powers of any product of members.
inline mpz_class f1_step_int(const mpz_class& g, const MultSet& W) {
  if (g == 0) return g;
  mpz_class h = abs(g);
  for (const auto& p : strippable_primes(W, h))
    while (mpz_divisible_p(h.get_mpz_t(), p.get_mpz_t())) h /= p;
  return h;
}

// Graded one-step absorption.  Joins F with (F : w) for every w in W of
// degree 1..d; scalars act as units and contribute nothing new.
//
// When the monic count is small we sweep the w side directly.  Otherwise we
// split: w of degree <= d/2 are swept as before, and w of larger degree are
// reached through their cofactors u (u*w a generator-degree product forces
// deg u <= d - deg w), by testing whether (F : u) meets W up to scalars.
inline constexpr int64_t f1_full_sweep_limit = 60000;

inline FpSubspace f1_step_graded(const FpSubspace& F, const MultSet& W) {
  const AmbientSpace& amb = F.amb;
  const int64_t p = amb.ring->n;
  const int nv = int(amb.ring->vars.size());
  const int d = amb.degree_bound;
  FpMat acc = F.mat;
  auto absorb = [&](const FpSubspace& s) {
    for (const auto& row : s.mat.rows) acc.rows.push_back(row);
  };
  if (d >= 1) {
    int64_t cnt = monic_count_up_to(p, nv, d, f1_full_sweep_limit);
    if (cnt <= f1_full_sweep_limit) {
      enumerate_monic(p, nv, 1, d, [&](const Poly& w) {
        if (multset_contains_associate(W, w))
          absorb(mul_preimage(F, Value{w}));
        return true;
      });
    } else {
      int half = (d + 1) / 2;
      enumerate_monic(p, nv, 1, half, [&](const Poly& w) {
        if (multset_contains_associate(W, w))
          absorb(mul_preimage(F, Value{w}));
        return true;
      });
      // u qualifies when (F : u) contains some nonzero y whose monic form
      // lies in W up to scalars; then u in (F : y) is absorbed.
      enumerate_monic(p, nv, 0, d - half - 1, [&](const Poly& u) {
        FpSubspace B = mul_preimage(F, Value{u});
        bool hit = false;
        if (W.kind == MultSetKind::regulars) {
          hit = rank_of(B.mat) > 0;
        } else {
          int64_t cap = 1 << 14;
          auto elems = row_space_elements(B.mat, cap);
          for (const auto& e : elems) {
            Poly y = coords_to_poly(B.amb, e);
            if (y.empty()) continue;
            if (multset_contains_associate(W, poly_monic(p, y))) { hit = true; break; }
          }
        }
        if (hit) {
          std::vector<int16_t> row = poly_to_coords(amb, u);
          acc.rows.push_back(row);
        }
        return true;
      });
    }
  }
  rref(acc);
  return FpSubspace{amb, acc};
}

inline std::vector<Value> finite_ring_universe(const RingPtr& r) {
  return ring_elements(r, explicit_group_cap);
}

// Finite rings: literal scan of w in W and x with w x in F.
inline SubgroupRep f1_step_finite(const SubgroupRep& F, const MultSet& W) {
  auto universe = finite_ring_universe(F.ring);
  std::vector<Value> collected;
  for (const auto& w : universe) {
    if (!multset_contains(W, w)) continue;
    for (const auto& x : universe)
      if (membership(F, mul(F.ring, w, x)) == Membership::member)
        collected.push_back(x);
  }
  if (std::holds_alternative<CyclicMod>(F.rep)) {
    int64_t g = std::get<CyclicMod>(F.rep).g;
    for (const auto& x : collected) g = std::gcd(g, as_res(x));
    return make_cyclic_mod(F.ring, g);
  }
  auto base = rep_elements(F, explicit_group_cap);
  for (auto& b : base) collected.push_back(b);
  return make_explicit_group(F.ring, detail::subgroup_close(F.ring, std::move(collected)));
}

}  // namespace detail

inline SubgroupRep f1_step(const SubgroupRep& F, const MultSet& W) {
  if (!same_ring(F.ring, W.ring))
    fail(errc::domain, "subgroup and multiplicative set live over different rings");
  if (std::holds_alternative<FpSubspace>(F.rep))
    return SubgroupRep{F.ring, detail::f1_step_graded(std::get<FpSubspace>(F.rep), W)};
  if (std::holds_alternative<CyclicInt>(F.rep)) {
    mpz_class g = detail::f1_step_int(std::get<CyclicInt>(F.rep).g, W);
    return SubgroupRep{F.ring, CyclicInt{g}};
  }
  return detail::f1_step_finite(F, W);
}

// ---------------------------------------------------------------------------
// closure: iterate f1 until it fixes.  Every intermediate stays inside the
// ambient generated by the inputs; the graded path asserts the degree bound
// on each iterate.

namespace detail {

inline void assert_degree_bound(const FpSubspace& F, int gen_degree) {
  for (const auto& row : F.mat.rows) {
    Poly q = coords_to_poly(F.amb, row);
    if (poly_deg(q) > gen_degree)
      fail(errc::internal, "closure iterate escaped the generator degree bound");
  }
}

inline mpz_class closure_int_iterative(const mpz_class& g0, const MultSet& W) {
  mpz_class g = abs(g0);
  if (g == 0) return g;
  bool changed = true;
  while (changed) {
    changed = false;
    if (W.kind == MultSetKind::monoid_gen || W.kind == MultSetKind::explicit_finite) {
      for (const auto& t : W.gens) {
        mpz_class w = abs(as_mpz(t));
        mpz_class c = gcd(g, w);
        if (c > 1) { g /= c; changed = true; }
      }
    } else {
      for (const auto& p : strippable_primes(W, g)) {
        if (mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t())) { g /= p; changed = true; }
      }
    }
  }
  return g;
}

}  // namespace detail

inline mpz_class closure_int(const mpz_class& g, const MultSet& W) {
  mpz_class closed = detail::f1_step_int(g, W);
  mpz_class iterated = detail::closure_int_iterative(g, W);
  if (closed != iterated)
    fail(errc::internal, "integer closure cross-check failed");
  return closed;
}

inline ClosureResult closure(const RingPtr& r, const MultSet& W,
                             const std::vector<Value>& gens,
                             int bound = -1, bool want_trace = false) {
  if (!same_ring(r, W.ring))
    fail(errc::domain, "generators and multiplicative set live over different rings");
  ClosureResult out;
  if (r->kind == RingKind::poly_ring) {
    int gen_degree = 0;
    for (const auto& g : gens) gen_degree = std::max(gen_degree, std::max(0, degree_of(r, g)));
    int d = bound < 0 ? gen_degree : bound;
    if (d < gen_degree)
      fail(errc::domain, "degree bound is below a generator's degree");
    AmbientSpace amb = make_ambient(r, d);
    SubgroupRep F = make_subspace_rep(span(amb, gens));
    out.degree_bound = d;
    if (want_trace) out.trace.push_back(F);
    int max_iter = amb.dim() + 1;
    for (int i = 0; i < max_iter; ++i) {
      SubgroupRep next = f1_step(F, W);
      detail::assert_degree_bound(std::get<FpSubspace>(next.rep), gen_degree);
      ++out.iterations;
      if (want_trace) out.trace.push_back(next);
      if (rep_equal(F, next)) { out.stabilized = true; break; }
      F = next;
    }
    if (!out.stabilized)
      fail(errc::internal, "graded closure did not stabilize within the dimension bound");
    out.result = F;
    return out;
  }
  if (r->kind == RingKind::integers) {
    mpz_class g = 0;
    for (const auto& v : gens) g = gcd(g, as_mpz(v));
    g = abs(g);
    mpz_class closed = closure_int(g, W);
    out.iterations = (closed == g) ? 1 : 2;
    out.stabilized = true;
    if (want_trace) {
      out.trace.push_back(make_cyclic_int(g));
      if (closed != g) out.trace.push_back(make_cyclic_int(closed));
    }
    out.result = make_cyclic_int(closed);
    return out;
  }
  // finite rings (residues, prime fields, products)
  SubgroupRep F = [&]() {
    if (r->kind == RingKind::integers_mod || r->kind == RingKind::prime_field) {
      int64_t g = r->n;
      for (const auto& v : gens) g = std::gcd(g, mod_norm(as_res(v), r->n));
      return make_cyclic_mod(r, g);
    }
    std::vector<Value> seed = gens;
    return make_explicit_group(r, detail::subgroup_close(r, std::move(seed)));
  }();
  if (want_trace) out.trace.push_back(F);
  for (int i = 0; i < 64; ++i) {
    SubgroupRep next = f1_step(F, W);
    ++out.iterations;
    if (want_trace) out.trace.push_back(next);
    if (rep_equal(F, next)) { out.stabilized = true; break; }
    F = next;
  }
  if (!out.stabilized)
    fail(errc::internal, "finite closure did not stabilize");
  out.result = F;
  return out;
}

// ---------------------------------------------------------------------------
// is_factroid: F is one exactly when the one-step absorption fixes it.
// Colons by single elements suffice: ((F : t1) : t2) is contained in (F : t2),
// so absorption of every single element forces absorption of the monoid.

inline bool is_factroid(const SubgroupRep& F, const MultSet& W) {
  if (!same_ring(F.ring, W.ring))
    fail(errc::domain, "subgroup and multiplicative set live over different rings");
  if (std::holds_alternative<CyclicInt>(F.rep)) {
    const mpz_class& g = std::get<CyclicInt>(F.rep).g;
    return detail::strippable_primes(W, g).empty();
  }
  if (std::holds_alternative<FpSubspace>(F.rep)) {
    SubgroupRep next = f1_step(F, W);
    return rep_equal(F, next);
  }
  auto universe = detail::finite_ring_universe(F.ring);
  for (const auto& w : universe) {
    if (!multset_contains(W, w)) continue;
    for (const auto& x : universe) {
      if (membership(F, mul(F.ring, w, x)) == Membership::member &&
          membership(F, x) != Membership::member)
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// w_of: the largest multiplicative-ish set W(F) = {a : (F : a) <= F}.

struct WOfReport {
  RingPtr ring;
  // graded: monic representatives of degree 1..d with a membership flag;
  // scalars are always members and every element of degree above the
  // ambient bound is a member (its colon meets the ambient in 0).
  int degree_bound = -1;
  std::vector<std::pair<Value, bool>> monic_members;
  bool scalars_member = true;
  std::string cofinite_rule;
  // integers: W(gZ) = {w != 0 : gcd(w, g) = 1}
  std::optional<mpz_class> coprime_to;
  // finite rings: the literal member list
  std::vector<Value> members;
};

namespace detail {

inline bool subspace_leq(const FpSubspace& a, const FpSubspace& b) {
  for (const auto& row : a.mat.rows) {
    auto r = row;
    if (!reduce_by(b.mat, r)) return false;
  }
  return true;
}

}  // namespace detail

inline WOfReport w_of(const SubgroupRep& F) {
  WOfReport rep;
  rep.ring = F.ring;
  if (std::holds_alternative<FpSubspace>(F.rep)) {
    const auto& X = std::get<FpSubspace>(F.rep);
    const AmbientSpace& amb = X.amb;
    int d = amb.degree_bound;
    rep.degree_bound = d;
    rep.cofinite_rule =
        "every nonzero element of degree above the ambient bound is a member";
    int64_t cnt = monic_count_up_to(amb.ring->n, int(amb.ring->vars.size()), d, 100000);
    if (cnt > 100000) fail(errc::budget, "too many monic representatives to report");
    enumerate_monic(amb.ring->n, int(amb.ring->vars.size()), 1, d, [&](const Poly& m) {
      FpSubspace pre = mul_preimage(X, Value{m});
      rep.monic_members.push_back({Value{m}, detail::subspace_leq(pre, X)});
      return true;
    });
    return rep;
  }
  if (std::holds_alternative<CyclicInt>(F.rep)) {
    rep.coprime_to = std::get<CyclicInt>(F.rep).g;
    return rep;
  }
  auto universe = detail::finite_ring_universe(F.ring);
  for (const auto& w : universe) {
    bool ok = true;
    for (const auto& x : universe) {
      if (membership(F, mul(F.ring, w, x)) == Membership::member &&
          membership(F, x) != Membership::member) { ok = false; break; }
    }
    if (ok) rep.members.push_back(w);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// a_of: the conductor-style subring A(F) = (F : F) = {a : aF <= F}.

struct AOfReport {
  RingPtr ring;
  bool whole_ring = false;
  SubgroupRep subgroup;  // additive basis of A(F) when not the whole ring
};

namespace detail {

// Linear conditions "a * each basis row of F lies in F", solved inside an
// ambient wide enough to hold the products.
inline SubgroupRep multipliers_into(const FpSubspace& F,
                                    const std::vector<Value>& targets_basis,
                                    int source_degree) {
  const AmbientSpace& amb = F.amb;
  const RingPtr& r = amb.ring;
  const int64_t p = r->n;
  AmbientSpace wide = make_ambient(r, amb.degree_bound + source_degree);
  FpSubspace Fw = reembed(F, wide);
  AmbientSpace src = make_ambient(r, source_degree);
  std::vector<std::vector<int16_t>> residuals;
  int width = int(targets_basis.size()) * wide.dim();
  for (const auto& m : src.monos) {
    std::vector<int16_t> cat;
    cat.reserve(width);
    for (const auto& f : targets_basis) {
      Poly prod = poly_mul_term(p, as_poly(f), m, 1);
      auto res = poly_to_coords(wide, prod);
      reduce_by(Fw.mat, res);
      for (auto c : res) cat.push_back(c);
    }
    residuals.push_back(std::move(cat));
  }
  FpMat ker = left_kernel(p, residuals, width);
  std::vector<Value> sols;
  for (const auto& krow : ker.rows) {
    Poly q;
    for (size_t j = 0; j < src.monos.size(); ++j)
      if (krow[j]) poly_add_term(q, src.monos[j], krow[j], p);
    sols.push_back(Value{q});
  }
  return make_subspace_rep(span(src, sols));
}

}  // namespace detail

inline AOfReport a_of(const SubgroupRep& F) {
  AOfReport out;
  out.ring = F.ring;
  if (std::holds_alternative<FpSubspace>(F.rep)) {
    const auto& X = std::get<FpSubspace>(F.rep);
    if (rank_of(X.mat) == 0) {
      out.whole_ring = true;
      out.subgroup = F;
      return out;
    }
    out.subgroup = detail::multipliers_into(X, basis_values(F), X.amb.degree_bound);
    return out;
  }
  if (std::holds_alternative<CyclicInt>(F.rep)) {
    out.whole_ring = true;  // subgroups of Z are ideals
    out.subgroup = make_cyclic_int(1);
    return out;
  }
  if (std::holds_alternative<CyclicMod>(F.rep)) {
    out.whole_ring = true;  // same: cyclic subgroups of Z/n are ideals
    out.subgroup = make_cyclic_mod(F.ring, 1);
    return out;
  }
  auto universe = detail::finite_ring_universe(F.ring);
  auto elems = rep_elements(F, explicit_group_cap);
  std::vector<Value> members;
  for (const auto& a : universe) {
    bool ok = true;
    for (const auto& f : elems)
      if (membership(F, mul(F.ring, a, f)) != Membership::member) { ok = false; break; }
    if (ok) members.push_back(a);
  }
  out.whole_ring = (int64_t(members.size()) == ring_size(F.ring).value_or(-1));
  out.subgroup = make_explicit_group(F.ring, std::move(members));
  return out;
}

// ---------------------------------------------------------------------------
// colons

inline SubgroupRep whole_group(const RingPtr& r, const SubgroupRep& like) {
  if (std::holds_alternative<FpSubspace>(like.rep)) {
    const auto& amb = std::get<FpSubspace>(like.rep).amb;
    std::vector<Value> all;
    for (const auto& m : amb.monos) {
      Poly q;
      poly_add_term(q, m, 1, r->n);
      all.push_back(Value{q});
    }
    return make_subspace_rep(span(amb, all));
  }
  if (std::holds_alternative<CyclicInt>(like.rep))
    return make_cyclic_int(1);
  if (std::holds_alternative<CyclicMod>(like.rep))
    return make_cyclic_mod(r, 1);
  return make_explicit_group(r, detail::finite_ring_universe(r));
}

// (F : T) for a finite element set T, meaning {x : t x in F for all t in T}.
inline SubgroupRep colon_by_set(const SubgroupRep& F, const std::vector<Value>& ts) {
  if (ts.empty()) return whole_group(F.ring, F);
  if (std::holds_alternative<FpSubspace>(F.rep)) {
    const auto& X = std::get<FpSubspace>(F.rep);
    std::optional<SubgroupRep> acc;
    for (const auto& t : ts) {
      SubgroupRep part{F.ring, mul_preimage(X, t)};
      acc = acc ? rep_intersect(*acc, part) : part;
    }
    return *acc;
  }
  if (std::holds_alternative<CyclicInt>(F.rep)) {
    // (gZ : t) = (g / gcd(g, t)) Z; intersections of cyclic groups are lcms,
    // with the zero group absorbing.
    const mpz_class& g = std::get<CyclicInt>(F.rep).g;
    mpz_class res = 1;
    for (const auto& t : ts) {
      mpz_class tv = abs(as_mpz(t));
      mpz_class part;
      if (g == 0) part = (tv == 0) ? mpz_class(1) : mpz_class(0);
      else if (tv == 0) part = 1;
      else part = g / gcd(g, tv);
      if (part == 0) return make_cyclic_int(0);
      res = lcm(res, part);
    }
    return make_cyclic_int(res);
  }
  if (std::holds_alternative<CyclicMod>(F.rep)) {
    const auto& cm = std::get<CyclicMod>(F.rep);
    int64_t res = 1;
    for (const auto& t : ts) {
      int64_t tv = mod_norm(as_res(t), cm.n);
      int64_t part = (tv == 0) ? 1 : cm.g / std::gcd(cm.g, tv);
      res = std::lcm(res, part);  // each part divides n, so the lcm does too
    }
    return make_cyclic_mod(F.ring, res);
  }
  auto universe = detail::finite_ring_universe(F.ring);
  std::vector<Value> members;
  for (const auto& x : universe) {
    bool ok = true;
    for (const auto& t : ts)
      if (membership(F, mul(F.ring, t, x)) != Membership::member) { ok = false; break; }
    if (ok) members.push_back(x);
  }
  return make_explicit_group(F.ring, std::move(members));
}

// (F :_A S) = {a in the ring : a s in F for every s in S}.
inline SubgroupRep colon_into_ring(const SubgroupRep& F, const std::vector<Value>& ss) {
  std::vector<Value> nz;
  for (const auto& s : ss)
    if (!is_zero(F.ring, s)) nz.push_back(s);
  if (nz.empty()) return whole_group(F.ring, F);
  if (std::holds_alternative<FpSubspace>(F.rep)) {
    const auto& X = std::get<FpSubspace>(F.rep);
    for (const auto& s : nz)
      if (degree_of(F.ring, s) > X.amb.degree_bound)
        fail(errc::domain, "element exceeds the ambient degree bound");
    return detail::multipliers_into(X, nz, X.amb.degree_bound);
  }
  return colon_by_set(F, nz);  // over Z and finite rings module = ring
}

// ---------------------------------------------------------------------------
// hom preimages of subgroups

inline SubgroupRep hom_preimage(const RingHom& phi, const SubgroupRep& F, int bound = -1) {
  if (!same_ring(phi.target, F.ring))
    fail(errc::domain, "subgroup does not live over the homomorphism target");
  switch (phi.kind) {
    case HomKind::quotient_map: {
      // any subgroup of Z/n is cyclic; normalize before lifting
      int64_t g;
      if (std::holds_alternative<CyclicMod>(F.rep)) {
        g = std::get<CyclicMod>(F.rep).g;
      } else if (std::holds_alternative<ExplicitGroup>(F.rep)) {
        g = F.ring->n;
        for (const auto& e : std::get<ExplicitGroup>(F.rep).elems)
          g = std::gcd(g, as_res(e));
        if (g == 0) g = F.ring->n;
      } else {
        fail(errc::domain, "quotient preimage needs a residue subgroup");
      }
      return make_cyclic_int(mpz_class(g));
    }
    case HomKind::eval_var_to_zero:
    case HomKind::inclusion: {
      const FpSubspace& X = as_subspace(F);
      int b = bound < 0 ? X.amb.degree_bound : bound;
      const int64_t p = phi.source->n;
      AmbientSpace src = make_ambient(phi.source, b);
      AmbientSpace work = make_ambient(phi.target, std::max(b, X.amb.degree_bound));
      FpSubspace Fw = reembed(X, work);
      std::vector<std::vector<int16_t>> residuals;
      for (const auto& m : src.monos) {
        Poly q;
        poly_add_term(q, m, 1, p);
        Value img = apply_hom(phi, Value{q});
        auto res = poly_to_coords(work, as_poly(img));
        reduce_by(Fw.mat, res);
        residuals.push_back(std::move(res));
      }
      FpMat ker = left_kernel(p, residuals, work.dim());
      std::vector<Value> sols;
      for (const auto& krow : ker.rows) {
        Poly q;
        for (size_t j = 0; j < src.monos.size(); ++j)
          if (krow[j]) poly_add_term(q, src.monos[j], krow[j], p);
        sols.push_back(Value{q});
      }
      return make_subspace_rep(span(src, sols));
    }
    case HomKind::projection_left:
    case HomKind::projection_right: {
      bool left = phi.kind == HomKind::projection_left;
      const RingPtr& other = left ? phi.source->right : phi.source->left;
      if (!ring_size(other))
        fail(errc::unsupported, "projection preimage needs a finite complementary factor");
      auto other_all = ring_elements(other, explicit_group_cap);
      auto felems = rep_elements(F, explicit_group_cap);
      std::vector<Value> elems;
      for (const auto& f : felems)
        for (const auto& o : other_all)
          elems.push_back(left ? make_pair_value(f, o) : make_pair_value(o, f));
      return make_explicit_group(phi.source, std::move(elems));
    }
  }
  fail(errc::internal, "unhandled homomorphism kind");
}

// ---------------------------------------------------------------------------
// saturate: the union of colons (S : w) over the monoid generated by W,
// computed on finite element sets by iterating single colons to a fixpoint.

namespace detail {

inline void saturate_add(std::set<Value, ValueLess>& X, const Value& v, bool& grew) {
  if (X.insert(v).second) grew = true;
}

inline std::vector<mpz_class> divisors_of(const mpz_class& x) {
  mpz_class a = abs(x);
  std::vector<mpz_class> ds;
  if (a == 0) return ds;
  if (a > 1000000000000L) fail(errc::budget, "integer too large to enumerate divisors");
  for (mpz_class i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      ds.push_back(i);
      if (i * i != a) ds.push_back(a / i);
    }
  }
  return ds;
}

}  // namespace detail

inline std::vector<Value> saturate(const RingPtr& r, const MultSet& W,
                                   const std::vector<Value>& elems, int bound = -1) {
  if (!same_ring(r, W.ring))
    fail(errc::domain, "elements and multiplicative set live over different rings");
  std::set<Value, ValueLess> X(elems.begin(), elems.end());
  bool grew = true;
  auto note = [&](const Value& v) { detail::saturate_add(X, v, grew); };
  if (r->kind == RingKind::poly_ring) {
    int maxdeg = 0;
    for (const auto& e : elems) maxdeg = std::max(maxdeg, std::max(0, degree_of(r, e)));
    int b = bound < 0 ? maxdeg : bound;
    const int64_t p = r->n;
    int guard = 0;
    while (grew) {
      grew = false;
      if (++guard > 1000) fail(errc::internal, "saturation failed to stabilize");
      std::vector<Value> snapshot(X.begin(), X.end());
      enumerate_monic(p, int(r->vars.size()), 0, b, [&](const Poly& m) {
        for (int64_t c = 1; c < p; ++c) {
          if (poly_deg(m) == 0 && c == 1) continue;
          Poly w = poly_scale(p, m, c);
          if (!multset_contains(W, Value{w})) continue;
          for (const auto& x : snapshot) {
            auto q = try_exact_divide(r, x, Value{w});
            if (q) note(*q);
          }
        }
        return true;
      });
    }
  } else if (r->kind == RingKind::integers) {
    int guard = 0;
    while (grew) {
      grew = false;
      if (++guard > 1000) fail(errc::internal, "saturation failed to stabilize");
      std::vector<Value> snapshot(X.begin(), X.end());
      for (const auto& xv : snapshot) {
        const mpz_class& x = as_mpz(xv);
        if (W.kind == MultSetKind::monoid_gen || W.kind == MultSetKind::explicit_finite) {
          for (const auto& t : W.gens) {
            const mpz_class& w = as_mpz(t);
            if (w != 0 && mpz_divisible_p(x.get_mpz_t(), w.get_mpz_t()))
              note(from_mpz(r, x / w));
          }
        } else {
          for (const auto& d : detail::divisors_of(x)) {
            for (int sign = 0; sign < 2; ++sign) {
              mpz_class w = sign ? -d : d;
              if (multset_contains(W, from_mpz(r, w)))
                note(from_mpz(r, x / w));
            }
          }
        }
      }
    }
  } else {
    auto universe = detail::finite_ring_universe(r);
    std::vector<Value> ws;
    for (const auto& w : universe)
      if (multset_contains(W, w)) ws.push_back(w);
    int guard = 0;
    while (grew) {
      grew = false;
      if (++guard > 1000) fail(errc::internal, "saturation failed to stabilize");
      std::vector<Value> snapshot(X.begin(), X.end());
      for (const auto& w : ws)
        for (const auto& x : snapshot)
          for (const auto& y : solve_linear(r, w, x)) note(y);
    }
  }
  std::vector<Value> out(X.begin(), X.end());
  return out;
}

}  // namespace factroid
