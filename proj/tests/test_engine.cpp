#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <factroid/engine.hpp>

using namespace factroid;

namespace {

std::vector<Value> vals(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<Value> out;
  for (const char* s : xs) out.push_back(parse_value(r, s));
  return out;
}

Value rand_poly(std::mt19937& rng, const AmbientSpace& amb, int64_t p) {
  Poly q;
  for (const auto& m : amb.monos)
    if (int64_t c = int64_t(rng() % uint64_t(p))) poly_add_term(q, m, c, p);
  return Value{q};
}

}  // namespace

TEST_CASE("closure of a single univariate polynomial is the degree ball") {
  auto F2x = parse_ring("GF(2)[x]");
  auto reg = make_reg(F2x);
  auto C = closure(F2x, *reg, vals(F2x, {"x^2"}));
  CHECK(subspace_dim(C.result) == 3);
  CHECK(C.stabilized);
  CHECK(membership(C.result, parse_value(F2x, "x")) == Membership::member);
  AmbientSpace amb = make_ambient(F2x, 2);
  CHECK(rep_equal(C.result, make_subspace_rep(span(amb, vals(F2x, {"1", "x", "x^2"})))));
}

TEST_CASE("closure of an irreducible bivariate is the scalar line through it") {
  auto F2xy = parse_ring("GF(2)[x,y]");
  auto reg = make_reg(F2xy);
  auto C = closure(F2xy, *reg, vals(F2xy, {"x^2 + y^3"}));
  CHECK(subspace_dim(C.result) == 2);
  CHECK(membership(C.result, one(F2xy)) == Membership::member);
  CHECK(membership(C.result, parse_value(F2xy, "x^2 + y^3")) == Membership::member);
  CHECK(membership(C.result, parse_value(F2xy, "x")) == Membership::non_member);
}

TEST_CASE("closure picks up y from {1, x, y^2 + x}") {
  auto F2xy = parse_ring("GF(2)[x,y]");
  auto reg = make_reg(F2xy);
  auto C = closure(F2xy, *reg, vals(F2xy, {"1", "x", "y^2 + x"}));
  CHECK(membership(C.result, parse_value(F2xy, "y")) == Membership::member);
  // while the plain span is not saturated
  AmbientSpace amb = make_ambient(F2xy, 2);
  SubgroupRep F = make_subspace_rep(span(amb, vals(F2xy, {"1", "x", "y^2"})));
  CHECK_FALSE(is_factroid(F, *reg));
}

TEST_CASE("the product example: closure has dimension six and misses xy") {
  auto F2xy = parse_ring("GF(2)[x,y]");
  auto reg = make_reg(F2xy);
  auto C = closure(F2xy, *reg, vals(F2xy, {"(x+y^2)*(y+x^2)"}), -1, true);
  CHECK(subspace_dim(C.result) == 6);
  CHECK(C.degree_bound == 4);
  for (const char* s : {"1", "x", "y", "x^2", "y^2", "(x+y^2)*(y+x^2)"})
    CHECK(membership(C.result, parse_value(F2xy, s)) == Membership::member);
  CHECK(membership(C.result, parse_value(F2xy, "x*y")) == Membership::non_member);
  CHECK(C.trace.size() >= 2);
  CHECK(subspace_dim(C.trace.front()) == 1);
}

TEST_CASE("integer closure strips exactly the monoid primes") {
  auto Z = parse_ring("Z");
  auto W = make_monoid_gen(Z, {from_int(Z, 2)});
  auto C = closure(Z, *W, {from_int(Z, 6)});
  CHECK(std::get<CyclicInt>(C.result.rep).g == 3);
  CHECK(C.iterations <= 2);

  auto W6 = make_monoid_gen(Z, {from_int(Z, 6)});
  CHECK(std::get<CyclicInt>(closure(Z, *W6, {from_int(Z, 360)}).result.rep).g == 5);
  auto reg = make_reg(Z);
  CHECK(std::get<CyclicInt>(closure(Z, *reg, {from_int(Z, 360)}).result.rep).g == 1);
  CHECK(std::get<CyclicInt>(closure(Z, *reg, {}).result.rep).g == 0);
  auto U = make_units_set(Z);
  CHECK(std::get<CyclicInt>(closure(Z, *U, {from_int(Z, 6)}).result.rep).g == 6);
}

TEST_CASE("closure over a bare prime field") {
  auto F7 = parse_ring("GF(7)");
  auto reg = make_reg(F7);
  auto C = closure(F7, *reg, {from_int(F7, 99)});
  REQUIRE(std::holds_alternative<CyclicMod>(C.result.rep));
  CHECK(std::get<CyclicMod>(C.result.rep).g == 1);  // 99 = 1 mod 7
  CHECK(is_factroid(C.result, *reg));
  CHECK(std::get<CyclicMod>(closure(F7, *reg, {}).result.rep).g == 7);
}

TEST_CASE("residue ring closure via gcd seeds") {
  auto Z12 = parse_ring("Z/12");
  auto W = make_monoid_gen(Z12, {from_int(Z12, 2)});
  auto C = closure(Z12, *W, {from_int(Z12, 6)});
  // colon by 2 pulls 3 in: 2*3 = 6
  CHECK(membership(C.result, from_int(Z12, 3)) == Membership::member);
  CHECK(membership(C.result, from_int(Z12, 1)) == Membership::non_member);
}

TEST_CASE("closure over a product ring works elementwise") {
  auto P = parse_ring("(GF(3))x(GF(2))");
  auto reg = make_reg(P);
  auto C = closure(P, *reg, {parse_value(P, "(1|1)")});
  CHECK(membership(C.result, parse_value(P, "(2|0)")) == Membership::member);
  CHECK(rep_order(C.result) == 6);  // the diagonal saturates to the whole ring here
}

TEST_CASE("is_factroid distinguishes the even-degree example") {
  auto F2x = parse_ring("GF(2)[x]");
  AmbientSpace amb = make_ambient(F2x, 2);
  SubgroupRep F = make_subspace_rep(span(amb, vals(F2x, {"1", "x^2"})));
  CHECK(is_factroid(F, *make_even_degree(F2x)));
  CHECK_FALSE(is_factroid(F, *make_reg(F2x)));
  // degree balls are saturated for regulars
  SubgroupRep C2 = make_subspace_rep(span(amb, vals(F2x, {"1", "x", "x^2"})));
  CHECK(is_factroid(C2, *make_reg(F2x)));
  CHECK(is_factroid(make_cyclic_int(6), *make_units_set(make_cyclic_int(6).ring)));
}

TEST_CASE("w_of reports the even-degree membership pattern") {
  auto F2x = parse_ring("GF(2)[x]");
  AmbientSpace amb = make_ambient(F2x, 2);
  SubgroupRep F = make_subspace_rep(span(amb, vals(F2x, {"1", "x^2"})));
  auto rep = w_of(F);
  CHECK(rep.scalars_member);
  CHECK(rep.degree_bound == 2);
  REQUIRE(rep.monic_members.size() == 6);  // monic of degree 1 and 2, each with 2 shifts
  int deg1_members = 0, deg2_members = 0;
  for (const auto& [v, member] : rep.monic_members) {
    if (degree_of(F.ring, v) == 1 && member) ++deg1_members;
    if (degree_of(F.ring, v) == 2 && member) ++deg2_members;
  }
  CHECK(deg1_members == 0);
  CHECK(deg2_members == 4);
  CHECK_FALSE(rep.cofinite_rule.empty());

  auto zr = w_of(make_cyclic_int(6));
  REQUIRE(zr.coprime_to.has_value());
  CHECK(*zr.coprime_to == 6);
}

TEST_CASE("w_of on the zero subspace admits every regular element") {
  auto F3x = parse_ring("GF(3)[x]");
  AmbientSpace amb = make_ambient(F3x, 2);
  auto rep = w_of(make_subspace_rep(zero_subspace(amb)));
  for (const auto& [v, member] : rep.monic_members) CHECK(member);
}

TEST_CASE("w_of over a finite ring matches a brute scan") {
  auto Z6 = parse_ring("Z/6");
  SubgroupRep F = make_cyclic_mod(Z6, 3);
  auto rep = w_of(F);
  for (const auto& w : ring_elements(Z6)) {
    bool expect = true;
    for (const auto& x : ring_elements(Z6))
      if (membership(F, mul(Z6, w, x)) == Membership::member &&
          membership(F, x) != Membership::member)
        expect = false;
    bool got = false;
    for (const auto& m : rep.members)
      if (values_equal(m, w)) got = true;
    CHECK(got == expect);
  }
}

TEST_CASE("a_of finds the scalar multiplier ring") {
  auto F2x = parse_ring("GF(2)[x]");
  AmbientSpace amb = make_ambient(F2x, 2);
  auto rep = a_of(make_subspace_rep(span(amb, vals(F2x, {"1", "x^2"}))));
  CHECK_FALSE(rep.whole_ring);
  CHECK(subspace_dim(rep.subgroup) == 1);
  CHECK(membership(rep.subgroup, one(F2x)) == Membership::member);

  CHECK(a_of(make_cyclic_int(6)).whole_ring);
  CHECK(a_of(make_cyclic_mod(parse_ring("Z/12"), 3)).whole_ring);
}

TEST_CASE("colon operations match hand values") {
  auto F2x = parse_ring("GF(2)[x]");
  AmbientSpace d3 = make_ambient(F2x, 3);
  SubgroupRep C3 = make_subspace_rep(span(d3, vals(F2x, {"1", "x", "x^2", "x^3"})));
  SubgroupRep Q = colon_by_set(C3, vals(F2x, {"x"}));
  CHECK(subspace_dim(Q) == 3);
  CHECK(membership(Q, parse_value(F2x, "x^2")) == Membership::member);
  CHECK(membership(Q, parse_value(F2x, "x^3")) == Membership::non_member);

  auto Z = parse_ring("Z");
  CHECK(std::get<CyclicInt>(colon_by_set(make_cyclic_int(6), {from_int(Z, 2)}).rep).g == 3);
  CHECK(rep_equal(colon_by_set(C3, vals(F2x, {"1"})), C3));

  // empty T gives the ambient
  SubgroupRep whole = colon_by_set(C3, {});
  CHECK(membership(whole, parse_value(F2x, "x^3")) == Membership::member);

  // transporter into the ring
  SubgroupRep T = colon_into_ring(C3, vals(F2x, {"x^2"}));
  CHECK(membership(T, parse_value(F2x, "x")) == Membership::member);
  CHECK(membership(T, parse_value(F2x, "x^2")) != Membership::member);
}

TEST_CASE("saturate lists exactly the divisible pullbacks") {
  auto Z = parse_ring("Z");
  auto W = make_monoid_gen(Z, {from_int(Z, 2)});
  auto s = saturate(Z, *W, {from_int(Z, 6)});
  REQUIRE(s.size() == 2);
  CHECK(as_mpz(s[0]) == 3);
  CHECK(as_mpz(s[1]) == 6);

  auto F2x = parse_ring("GF(2)[x]");
  auto reg = make_reg(F2x);
  auto sp = saturate(F2x, *reg, vals(F2x, {"x^3"}), 3);
  REQUIRE(sp.size() == 4);  // the four monic divisors of x^3
  for (const auto& v : sp) {
    auto q = poly_divide_exact(2, as_poly(parse_value(F2x, "x^3")), as_poly(v));
    CHECK(q.has_value());
  }

  auto F3x = parse_ring("GF(3)[x]");
  auto reg3 = make_reg(F3x);
  auto si = saturate(F3x, *reg3, vals(F3x, {"x^2 + 1"}), 2);  // irreducible mod 3
  CHECK(si.size() == 4);  // scalar multiples of 1 and of the generator
}

TEST_CASE("hom preimages transport subgroups") {
  auto Z6 = parse_ring("Z/6");
  auto hom = make_quotient_map(Z6);
  SubgroupRep F = make_cyclic_mod(Z6, 3);
  SubgroupRep pre = hom_preimage(hom, F);
  CHECK(std::get<CyclicInt>(pre.rep).g == 3);

  auto F2xy = parse_ring("GF(2)[x,y]");
  auto F2x = parse_ring("GF(2)[x]");
  auto ev = make_eval_var_to_zero(F2xy, "y");
  AmbientSpace amb1 = make_ambient(F2x, 1);
  SubgroupRep C1 = make_subspace_rep(
      span(amb1, {parse_value(F2x, "1"), parse_value(F2x, "x")}));
  SubgroupRep pre2 = hom_preimage(ev, C1, 2);
  CHECK(membership(pre2, parse_value(F2xy, "y")) == Membership::member);
  CHECK(membership(pre2, parse_value(F2xy, "x*y + x")) == Membership::member);
  CHECK(membership(pre2, parse_value(F2xy, "x^2")) == Membership::non_member);

  auto P = parse_ring("(GF(3))x(GF(2))");
  auto prj = make_projection(P, true);
  SubgroupRep L = make_explicit_group(P->left, {zero(P->left)});
  SubgroupRep pre3 = hom_preimage(prj, L);
  CHECK(rep_elements(pre3).size() == 2);  // {0} x GF(2)
}

TEST_CASE("closure properties on random inputs") {
  std::mt19937 rng(90125);
  auto F2x = parse_ring("GF(2)[x]");
  auto F3x = parse_ring("GF(3)[x]");
  auto F2xy = parse_ring("GF(2)[x,y]");
  struct Case {
    RingPtr r;
    int d;
  };
  for (const Case& c : {Case{F2x, 4}, Case{F3x, 3}, Case{F2xy, 2}}) {
    auto reg = make_reg(c.r);
    AmbientSpace amb = make_ambient(c.r, c.d);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Value> S{rand_poly(rng, amb, c.r->n), rand_poly(rng, amb, c.r->n)};
      auto C = closure(c.r, *reg, S, c.d);
      // extensivity
      for (const auto& s : S) CHECK(membership(C.result, s) == Membership::member);
      // idempotence
      auto C2 = closure(c.r, *reg, basis_values(C.result), c.d);
      CHECK(rep_equal(C.result, C2.result));
      // the closure is saturated
      CHECK(is_factroid(C.result, *reg));
      // monotonicity against the singleton subsets
      for (const auto& s : S) {
        auto Cs = closure(c.r, *reg, {s}, c.d);
        for (const auto& b : basis_values(Cs.result))
          CHECK(membership(C.result, b) == Membership::member);
      }
    }
  }
}

TEST_CASE("closure respects explicit degree bounds") {
  auto F2x = parse_ring("GF(2)[x]");
  auto reg = make_reg(F2x);
  auto C = closure(F2x, *reg, vals(F2x, {"x^2"}), 4);
  CHECK(C.degree_bound == 4);
  CHECK(subspace_dim(C.result) == 3);  // same subgroup, wider ambient
  CHECK_THROWS_AS(closure(F2x, *reg, vals(F2x, {"x^2"}), 1), error);
}
