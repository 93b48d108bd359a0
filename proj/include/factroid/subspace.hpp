#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "factroid/linalg.hpp"
#include "factroid/rings.hpp"

namespace factroid {

// ---------------------------------------------------------------------------
// ambient coordinate space: monomials of total degree <= degree_bound,
// listed degree-ascending and graded-lex descending inside each degree
// ---------------------------------------------------------------------------

struct AmbientSpace {
  RingPtr ring;
  int degree_bound = 0;
  std::vector<Monomial> monos;
  std::map<Monomial, int, GrlexLess> index;

  int dim() const { return int(monos.size()); }
};

inline AmbientSpace make_ambient(const RingPtr& r, int degree_bound) {
  if (r->kind != RingKind::poly_ring) fail(errc::domain, "ambient spaces require a graded ring");
  if (degree_bound < 0) fail(errc::domain, "degree bound must be nonnegative");
  AmbientSpace a;
  a.ring = r;
  a.degree_bound = degree_bound;
  a.monos = monomials_up_to(r->nvars(), degree_bound);
  for (int i = 0; i < int(a.monos.size()); ++i) a.index.emplace(a.monos[i], i);
  return a;
}

inline bool same_ambient(const AmbientSpace& a, const AmbientSpace& b) {
  return same_ring(a.ring, b.ring) && a.degree_bound == b.degree_bound;
}

inline std::vector<int16_t> poly_to_coords(const AmbientSpace& a, const Poly& f) {
  std::vector<int16_t> v(a.dim(), 0);
  for (const auto& [m, c] : f) {
    auto it = a.index.find(m);
    if (it == a.index.end()) fail(errc::domain, "element exceeds the ambient degree bound");
    v[it->second] = int16_t(c);
  }
  return v;
}

inline Poly coords_to_poly(const AmbientSpace& a, const std::vector<int16_t>& v) {
  Poly f;
  for (int i = 0; i < a.dim(); ++i)
    if (v[i] != 0) f.emplace(a.monos[i], v[i]);
  return f;
}

// ---------------------------------------------------------------------------
// subgroup representations
// ---------------------------------------------------------------------------

// F_p-subspace of an ambient polynomial space, canonical rref basis
struct FpSubspace {
  AmbientSpace amb;
  FpMat mat;  // rref, amb.dim() columns
};

// gZ inside Z, g >= 0 (g = 0 is the zero subgroup)
struct CyclicInt {
  mpz_class g;
};

// gZ/nZ inside Z/n (or GF(p) additively), g a positive divisor of n; g = n is {0}
struct CyclicMod {
  int64_t n = 0, g = 1;
};

// explicit sorted element list of a finite subgroup
struct ExplicitGroup {
  RingPtr ring;
  std::vector<Value> elems;  // sorted by value_less, closed under subtraction
};

struct SubgroupRep;

// componentwise subgroup F x G of a product ring
struct PairProduct {
  std::vector<SubgroupRep> parts;  // size 2
};

struct SubgroupRep {
  RingPtr ring;
  std::variant<FpSubspace, CyclicInt, CyclicMod, ExplicitGroup, PairProduct> rep;
};

inline constexpr int64_t explicit_group_cap = 4096;

enum class Membership { member, non_member, outside_ambient };

inline FpSubspace zero_subspace(const AmbientSpace& a) {
  return FpSubspace{a, FpMat::make(a.ring->n, a.dim())};
}

inline SubgroupRep make_subspace_rep(FpSubspace s) {
  RingPtr r = s.amb.ring;
  return SubgroupRep{std::move(r), std::move(s)};
}

inline SubgroupRep make_cyclic_int(mpz_class g) {
  if (g < 0) g = -g;
  return SubgroupRep{make_integers(), CyclicInt{std::move(g)}};
}

inline SubgroupRep make_cyclic_mod(const RingPtr& r, int64_t gen) {
  if (!r->residue_based()) fail(errc::internal, "cyclic residue subgroup needs Z/n or GF(p)");
  int64_t g = std::gcd(mod_norm(gen, r->n), r->n);
  if (g == 0) g = r->n;
  return SubgroupRep{r, CyclicMod{r->n, g}};
}

inline SubgroupRep make_explicit_group(const RingPtr& r, std::vector<Value> elems) {
  std::sort(elems.begin(), elems.end(), ValueLess{});
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const Value& a, const Value& b) { return values_equal(a, b); }),
              elems.end());
  return SubgroupRep{r, ExplicitGroup{r, std::move(elems)}};
}

inline SubgroupRep make_pair_product(const RingPtr& r, SubgroupRep left, SubgroupRep right) {
  PairProduct p;
  p.parts.push_back(std::move(left));
  p.parts.push_back(std::move(right));
  return SubgroupRep{r, std::move(p)};
}

inline const FpSubspace& as_subspace(const SubgroupRep& s) {
  if (!std::holds_alternative<FpSubspace>(s.rep))
    fail(errc::domain, "expected a polynomial subspace representation");
  return std::get<FpSubspace>(s.rep);
}

// ---------------------------------------------------------------------------
// span / membership / lattice operations
// ---------------------------------------------------------------------------

inline FpSubspace span(const AmbientSpace& a, const std::vector<Value>& gens) {
  FpMat m = FpMat::make(a.ring->n, a.dim());
  for (const auto& g : gens) {
    const Poly& f = as_poly(g);
    if (poly_deg(f) > a.degree_bound)
      fail(errc::domain, "generator exceeds the ambient degree bound");
    m.push_row(poly_to_coords(a, f));
  }
  rref(m);
  return FpSubspace{a, std::move(m)};
}

inline Membership subspace_membership(const FpSubspace& s, const Poly& f) {
  if (poly_deg(f) > s.amb.degree_bound) return Membership::outside_ambient;
  auto v = poly_to_coords(s.amb, f);
  return reduce_by(s.mat, v) ? Membership::member : Membership::non_member;
}

inline Membership membership(const SubgroupRep& s, const Value& x) {
  if (std::holds_alternative<FpSubspace>(s.rep))
    return subspace_membership(std::get<FpSubspace>(s.rep), as_poly(x));
  if (std::holds_alternative<CyclicInt>(s.rep)) {
    const auto& c = std::get<CyclicInt>(s.rep);
    if (c.g == 0) return as_mpz(x) == 0 ? Membership::member : Membership::non_member;
    return as_mpz(x) % c.g == 0 ? Membership::member : Membership::non_member;
  }
  if (std::holds_alternative<CyclicMod>(s.rep)) {
    const auto& c = std::get<CyclicMod>(s.rep);
    return mod_norm(as_res(x), c.n) % c.g == 0 ? Membership::member : Membership::non_member;
  }
  if (std::holds_alternative<ExplicitGroup>(s.rep)) {
    const auto& pe = std::get<ExplicitGroup>(s.rep);
    bool found = std::binary_search(pe.elems.begin(), pe.elems.end(), x, ValueLess{});
    return found ? Membership::member : Membership::non_member;
  }
  const auto& pp = std::get<PairProduct>(s.rep);
  Membership a = membership(pp.parts[0], as_pair(x)[0]);
  Membership b = membership(pp.parts[1], as_pair(x)[1]);
  if (a == Membership::outside_ambient || b == Membership::outside_ambient)
    return Membership::outside_ambient;
  if (a == Membership::member && b == Membership::member) return Membership::member;
  return Membership::non_member;
}

inline bool contains_value(const SubgroupRep& s, const Value& x) {
  return membership(s, x) == Membership::member;
}

inline SubgroupRep rep_sum(const SubgroupRep& a, const SubgroupRep& b);
inline SubgroupRep rep_intersect(const SubgroupRep& a, const SubgroupRep& b);

namespace detail {

inline std::vector<Value> subgroup_close(const RingPtr& r, std::vector<Value> gens) {
  std::set<Value, ValueLess> seen;
  seen.insert(zero(r));
  std::vector<Value> frontier{zero(r)};
  for (const auto& g : gens)
    if (seen.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Value> next;
    for (const auto& v : frontier) {
      Value nv = neg(r, v);
      if (seen.insert(nv).second) next.push_back(nv);
      for (const auto& w : std::vector<Value>(seen.begin(), seen.end())) {
        Value s2 = add(r, v, w);
        if (int64_t(seen.size()) > explicit_group_cap)
          fail(errc::budget, "explicit subgroup exceeds the element cap");
        if (seen.insert(s2).second) next.push_back(s2);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

inline SubgroupRep rep_sum(const SubgroupRep& a, const SubgroupRep& b) {
  if (a.rep.index() != b.rep.index()) fail(errc::domain, "subgroup representation mismatch");
  if (std::holds_alternative<FpSubspace>(a.rep)) {
    const auto& x = std::get<FpSubspace>(a.rep);
    const auto& y = std::get<FpSubspace>(b.rep);
    if (!same_ambient(x.amb, y.amb)) fail(errc::domain, "ambient mismatch");
    return make_subspace_rep(FpSubspace{x.amb, mat_sum(x.mat, y.mat)});
  }
  if (std::holds_alternative<CyclicInt>(a.rep)) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), std::get<CyclicInt>(a.rep).g.get_mpz_t(),
            std::get<CyclicInt>(b.rep).g.get_mpz_t());
    return make_cyclic_int(g);
  }
  if (std::holds_alternative<CyclicMod>(a.rep)) {
    const auto& x = std::get<CyclicMod>(a.rep);
    const auto& y = std::get<CyclicMod>(b.rep);
    if (x.n != y.n) fail(errc::domain, "modulus mismatch");
    return make_cyclic_mod(a.ring, std::gcd(x.g, y.g));
  }
  if (std::holds_alternative<ExplicitGroup>(a.rep)) {
    std::vector<Value> gens = std::get<ExplicitGroup>(a.rep).elems;
    const auto& more = std::get<ExplicitGroup>(b.rep).elems;
    gens.insert(gens.end(), more.begin(), more.end());
    return make_explicit_group(a.ring, detail::subgroup_close(a.ring, std::move(gens)));
  }
  const auto& x = std::get<PairProduct>(a.rep);
  const auto& y = std::get<PairProduct>(b.rep);
  return make_pair_product(a.ring, rep_sum(x.parts[0], y.parts[0]),
                           rep_sum(x.parts[1], y.parts[1]));
}

inline SubgroupRep rep_intersect(const SubgroupRep& a, const SubgroupRep& b) {
  if (a.rep.index() != b.rep.index()) fail(errc::domain, "subgroup representation mismatch");
  if (std::holds_alternative<FpSubspace>(a.rep)) {
    const auto& x = std::get<FpSubspace>(a.rep);
    const auto& y = std::get<FpSubspace>(b.rep);
    if (!same_ambient(x.amb, y.amb)) fail(errc::domain, "ambient mismatch");
    return make_subspace_rep(FpSubspace{x.amb, mat_intersect(x.mat, y.mat)});
  }
  if (std::holds_alternative<CyclicInt>(a.rep)) {
    const auto& x = std::get<CyclicInt>(a.rep);
    const auto& y = std::get<CyclicInt>(b.rep);
    if (x.g == 0 || y.g == 0) return make_cyclic_int(0);
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), x.g.get_mpz_t(), y.g.get_mpz_t());
    return make_cyclic_int(l);
  }
  if (std::holds_alternative<CyclicMod>(a.rep)) {
    const auto& x = std::get<CyclicMod>(a.rep);
    const auto& y = std::get<CyclicMod>(b.rep);
    if (x.n != y.n) fail(errc::domain, "modulus mismatch");
    return make_cyclic_mod(a.ring, std::lcm(x.g, y.g));
  }
  if (std::holds_alternative<ExplicitGroup>(a.rep)) {
    const auto& x = std::get<ExplicitGroup>(a.rep).elems;
    const auto& y = std::get<ExplicitGroup>(b.rep).elems;
    std::vector<Value> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both),
                          ValueLess{});
    return make_explicit_group(a.ring, std::move(both));
  }
  const auto& x = std::get<PairProduct>(a.rep);
  const auto& y = std::get<PairProduct>(b.rep);
  return make_pair_product(a.ring, rep_intersect(x.parts[0], y.parts[0]),
                           rep_intersect(x.parts[1], y.parts[1]));
}

inline bool rep_equal(const SubgroupRep& a, const SubgroupRep& b) {
  if (a.rep.index() != b.rep.index()) return false;
  if (std::holds_alternative<FpSubspace>(a.rep)) {
    const auto& x = std::get<FpSubspace>(a.rep);
    const auto& y = std::get<FpSubspace>(b.rep);
    return same_ambient(x.amb, y.amb) && mat_equal(x.mat, y.mat);
  }
  if (std::holds_alternative<CyclicInt>(a.rep))
    return std::get<CyclicInt>(a.rep).g == std::get<CyclicInt>(b.rep).g;
  if (std::holds_alternative<CyclicMod>(a.rep)) {
    const auto& x = std::get<CyclicMod>(a.rep);
    const auto& y = std::get<CyclicMod>(b.rep);
    return x.n == y.n && x.g == y.g;
  }
  if (std::holds_alternative<ExplicitGroup>(a.rep)) {
    const auto& x = std::get<ExplicitGroup>(a.rep).elems;
    const auto& y = std::get<ExplicitGroup>(b.rep).elems;
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (!values_equal(x[i], y[i])) return false;
    return true;
  }
  const auto& x = std::get<PairProduct>(a.rep);
  const auto& y = std::get<PairProduct>(b.rep);
  return rep_equal(x.parts[0], y.parts[0]) && rep_equal(x.parts[1], y.parts[1]);
}

// ---------------------------------------------------------------------------
// multiplication preimage { x : w * x in F } within the ambient space
// ---------------------------------------------------------------------------

inline FpSubspace mul_preimage(const FpSubspace& F, const Value& wv) {
  const AmbientSpace& a = F.amb;
  const int64_t p = a.ring->n;
  const Poly& w = as_poly(wv);
  if (w.empty()) fail(errc::domain, "colon by zero");
  const int dw = poly_deg(w);
  if (dw > a.degree_bound) return zero_subspace(a);
  if (dw == 0) return F;

  // sources of degree <= bound - deg w; residuals of w * m modulo F
  std::vector<Monomial> src = monomials_up_to(a.ring->nvars(), a.degree_bound - dw);
  std::vector<std::vector<int16_t>> residuals;
  residuals.reserve(src.size());
  for (const auto& m : src) {
    Poly image = poly_mul_term(p, w, m, 1);
    auto v = poly_to_coords(a, image);
    reduce_by(F.mat, v);
    residuals.push_back(std::move(v));
  }
  FpMat combos = left_kernel(p, residuals, a.dim());

  FpMat out = FpMat::make(p, a.dim());
  for (const auto& c : combos.rows) {
    Poly f;
    for (size_t i = 0; i < src.size(); ++i)
      if (c[i] != 0) poly_add_term(f, src[i], c[i], p);
    out.push_row(poly_to_coords(a, f));
  }
  rref(out);
  return FpSubspace{a, std::move(out)};
}

// ---------------------------------------------------------------------------
// element streams and sizes
// ---------------------------------------------------------------------------

inline int subspace_dim(const SubgroupRep& s) {
  return rank_of(as_subspace(s).mat);
}

inline std::vector<Value> rep_elements(const SubgroupRep& s, int64_t cap = explicit_group_cap) {
  if (std::holds_alternative<FpSubspace>(s.rep)) {
    const auto& x = std::get<FpSubspace>(s.rep);
    std::vector<Value> out;
    for (auto& v : row_space_elements(x.mat, cap)) out.push_back(Value{coords_to_poly(x.amb, v)});
    return out;
  }
  if (std::holds_alternative<CyclicInt>(s.rep)) {
    if (std::get<CyclicInt>(s.rep).g == 0) return {Value{mpz_class(0)}};
    fail(errc::unsupported, "infinite subgroup of Z cannot be enumerated");
  }
  if (std::holds_alternative<CyclicMod>(s.rep)) {
    const auto& c = std::get<CyclicMod>(s.rep);
    std::vector<Value> out;
    for (int64_t v = 0; v < c.n; v += c.g) out.push_back(Value{v});
    return out;
  }
  if (std::holds_alternative<ExplicitGroup>(s.rep)) return std::get<ExplicitGroup>(s.rep).elems;
  const auto& pp = std::get<PairProduct>(s.rep);
  auto ls = rep_elements(pp.parts[0], cap);
  auto rs = rep_elements(pp.parts[1], cap);
  if (int64_t(ls.size()) * int64_t(rs.size()) > cap)
    fail(errc::budget, "product subgroup too large to enumerate");
  std::vector<Value> out;
  for (const auto& l : ls)
    for (const auto& r : rs) out.push_back(make_pair_value(l, r));
  std::sort(out.begin(), out.end(), ValueLess{});
  return out;
}

inline std::optional<int64_t> rep_order(const SubgroupRep& s) {
  if (std::holds_alternative<FpSubspace>(s.rep)) {
    const auto& x = std::get<FpSubspace>(s.rep);
    int64_t n = 1;
    for (int i = 0; i < rank_of(x.mat); ++i) {
      if (n > (int64_t(1) << 56)) return std::nullopt;
      n *= x.amb.ring->n;
    }
    return n;
  }
  if (std::holds_alternative<CyclicInt>(s.rep))
    return std::get<CyclicInt>(s.rep).g == 0 ? std::optional<int64_t>(1) : std::nullopt;
  if (std::holds_alternative<CyclicMod>(s.rep)) {
    const auto& c = std::get<CyclicMod>(s.rep);
    return c.n / c.g;
  }
  if (std::holds_alternative<ExplicitGroup>(s.rep))
    return int64_t(std::get<ExplicitGroup>(s.rep).elems.size());
  const auto& pp = std::get<PairProduct>(s.rep);
  auto a = rep_order(pp.parts[0]), b = rep_order(pp.parts[1]);
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

inline std::vector<Value> basis_values(const SubgroupRep& s) {
  const auto& x = as_subspace(s);
  std::vector<Value> out;
  for (const auto& r : x.mat.rows) out.push_back(Value{coords_to_poly(x.amb, r)});
  return out;
}

// re-express rows in a wider or narrower ambient of the same ring
inline FpSubspace reembed(const FpSubspace& s, const AmbientSpace& target) {
  FpMat m = FpMat::make(target.ring->n, target.dim());
  for (const auto& row : s.mat.rows) {
    Poly f = coords_to_poly(s.amb, row);
    if (poly_deg(f) > target.degree_bound)
      fail(errc::domain, "basis row exceeds the target degree bound");
    m.push_row(poly_to_coords(target, f));
  }
  rref(m);
  return FpSubspace{target, std::move(m)};
}

}  // namespace factroid
