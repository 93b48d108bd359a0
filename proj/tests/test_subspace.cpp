#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <factroid/subspace.hpp>

using namespace factroid;

namespace {

std::vector<Value> vals(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<Value> out;
  for (const char* s : xs) out.push_back(parse_value(r, s));
  return out;
}

}  // namespace

TEST_CASE("span produces a unique echelon form") {
  auto F2xy = parse_ring("GF(2)[x,y]");
  AmbientSpace amb = make_ambient(F2xy, 4);
  CHECK(amb.dim() == 15);

  auto gens = vals(F2xy, {"(x+y^2)*(y+x^2)", "1"});
  FpSubspace F = span(amb, gens);
  CHECK(rank_of(F.mat) == 2);
  CHECK(subspace_membership(F, as_poly(gens[0])) == Membership::member);
  CHECK(subspace_membership(F, as_poly(parse_value(F2xy, "x"))) == Membership::non_member);

  // shuffled generators give the identical normal form
  std::vector<Value> g2 = {gens[1], gens[0], add(F2xy, gens[0], gens[1])};
  CHECK(mat_equal(F.mat, span(amb, g2).mat));

  CHECK(rank_of(span(amb, {}).mat) == 0);
  auto F3x = parse_ring("GF(3)[x]");
  AmbientSpace a3 = make_ambient(F3x, 2);
  CHECK(rank_of(span(a3, vals(F3x, {"x+1", "2*x+2"})).mat) == 1);
  CHECK_THROWS_AS(span(a3, vals(F3x, {"x^5"})), error);
}

TEST_CASE("membership distinguishes outside-ambient from non-member") {
  auto F2x = parse_ring("GF(2)[x]");
  AmbientSpace amb = make_ambient(F2x, 2);
  FpSubspace F = span(amb, vals(F2x, {"1", "x^2"}));
  CHECK(subspace_membership(F, as_poly(parse_value(F2x, "x^2"))) == Membership::member);
  CHECK(subspace_membership(F, as_poly(parse_value(F2x, "x"))) == Membership::non_member);
  CHECK(subspace_membership(F, as_poly(parse_value(F2x, "x^3"))) == Membership::outside_ambient);
}

TEST_CASE("cyclic and explicit representations") {
  SubgroupRep c6 = make_cyclic_int(6);
  auto Z = c6.ring;
  CHECK(membership(c6, from_int(Z, 18)) == Membership::member);
  CHECK(membership(c6, from_int(Z, 15)) == Membership::non_member);
  CHECK(membership(c6, from_int(Z, -12)) == Membership::member);

  auto Z12 = parse_ring("Z/12");
  SubgroupRep m3 = make_cyclic_mod(Z12, 3);
  CHECK(membership(m3, from_int(Z12, 9)) == Membership::member);
  CHECK(membership(m3, from_int(Z12, 4)) == Membership::non_member);
  CHECK(rep_order(m3) == 4);

  SubgroupRep whole = make_cyclic_mod(Z12, 12);
  CHECK(rep_order(whole) == 1);  // g = n is the zero subgroup

  auto P = parse_ring("(GF(2))x(GF(2))");
  SubgroupRep diag = make_explicit_group(P, vals(P, {"(0|0)", "(1|1)"}));
  CHECK(membership(diag, parse_value(P, "(1|1)")) == Membership::member);
  CHECK(membership(diag, parse_value(P, "(1|0)")) == Membership::non_member);
}

TEST_CASE("product-of-cyclic membership is componentwise") {
  SubgroupRep left = make_cyclic_int(2), right = make_cyclic_int(3);
  auto PZ = make_product(left.ring, right.ring);
  SubgroupRep pp = make_pair_product(PZ, left, right);
  CHECK(membership(pp, parse_value(PZ, "(4|9)")) == Membership::member);
  CHECK(membership(pp, parse_value(PZ, "(4|8)")) == Membership::non_member);
}

TEST_CASE("sum and intersection") {
  SubgroupRep a = make_cyclic_int(4), b = make_cyclic_int(6);
  CHECK(std::get<CyclicInt>(rep_sum(a, b).rep).g == 2);
  CHECK(std::get<CyclicInt>(rep_intersect(a, b).rep).g == 12);

  auto F2xy = parse_ring("GF(2)[x,y]");
  AmbientSpace amb = make_ambient(F2xy, 2);
  SubgroupRep F = make_subspace_rep(span(amb, vals(F2xy, {"1", "x"})));
  SubgroupRep G = make_subspace_rep(span(amb, vals(F2xy, {"1", "y^2+x"})));
  SubgroupRep S = rep_sum(F, G);
  CHECK(subspace_dim(S) == 3);
  CHECK(membership(S, parse_value(F2xy, "y^2")) == Membership::member);
  CHECK(membership(S, parse_value(F2xy, "y")) == Membership::non_member);
  CHECK(rep_equal(rep_intersect(F, F), F));
  CHECK(subspace_dim(rep_intersect(F, G)) == 1);
}

TEST_CASE("mul_preimage matches the exhaustive scan") {
  auto F2x = parse_ring("GF(2)[x]");
  AmbientSpace d3 = make_ambient(F2x, 3);
  FpSubspace C3 = span(d3, vals(F2x, {"1", "x", "x^2", "x^3"}));
  FpSubspace Q = mul_preimage(C3, parse_value(F2x, "x^2"));
  CHECK(mat_equal(Q.mat, span(d3, vals(F2x, {"1", "x"})).mat));

  // the colon of span{1,x^2} by x+1 contains x+1 itself but not 1
  AmbientSpace d2 = make_ambient(F2x, 2);
  FpSubspace F = span(d2, vals(F2x, {"1", "x^2"}));
  FpSubspace Q2 = mul_preimage(F, parse_value(F2x, "x+1"));
  CHECK(rank_of(Q2.mat) == 1);
  CHECK(subspace_membership(Q2, as_poly(parse_value(F2x, "x+1"))) == Membership::member);
  CHECK(subspace_membership(Q2, as_poly(one(F2x))) == Membership::non_member);

  // identity multiplier
  FpSubspace Q3 = mul_preimage(F, one(F2x));
  CHECK(mat_equal(Q3.mat, F.mat));
  CHECK_THROWS_AS(mul_preimage(F, zero(F2x)), error);
  // dividing by something of larger degree leaves only zero
  CHECK(rank_of(mul_preimage(F, parse_value(F2x, "x^3")).mat) == 0);
}

TEST_CASE("mul_preimage scan agreement on random subspaces") {
  std::mt19937 rng(417);
  for (int64_t p : {int64_t(2), int64_t(3)}) {
    auto r = p == 2 ? parse_ring("GF(2)[x]") : parse_ring("GF(3)[x]");
    for (int d = 1; d <= 4; ++d) {
      AmbientSpace amb = make_ambient(r, d);
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<Value> gens;
        for (int k = 0; k < 2; ++k) {
          Poly q;
          for (const auto& m : amb.monos)
            if (int64_t c = int64_t(rng() % uint64_t(p))) poly_add_term(q, m, c, p);
          gens.push_back(Value{q});
        }
        FpSubspace F = span(amb, gens);
        for (int dw = 1; dw <= std::min(d, 3); ++dw) {
          Poly w;
          poly_add_term(w, Monomial{{uint16_t(dw)}}, 1, p);
          if (rng() % 2) poly_add_term(w, Monomial{}, 1, p);
          FpSubspace Q = mul_preimage(F, Value{w});
          AmbientSpace small = make_ambient(r, d - dw);
          // enumerate every element of the small ambient
          int64_t total = 1;
          for (size_t i = 0; i < small.monos.size(); ++i) total *= p;
          for (int64_t idx = 0; idx < total; ++idx) {
            int64_t t = idx;
            Poly q;
            for (const auto& m : small.monos) {
              if (int64_t c = t % p) poly_add_term(q, m, c, p);
              t /= p;
            }
            bool in_colon = subspace_membership(F, poly_mul(p, w, q)) == Membership::member;
            bool reported = subspace_membership(Q, q) == Membership::member;
            REQUIRE(in_colon == reported);
          }
        }
      }
    }
  }
}

TEST_CASE("rep_elements enumerates exactly and respects caps") {
  auto F2xy = parse_ring("GF(2)[x,y]");
  AmbientSpace amb = make_ambient(F2xy, 2);
  SubgroupRep F = make_subspace_rep(span(amb, vals(F2xy, {"1", "x", "y", "x^2", "y^2"})));
  CHECK(rep_elements(F).size() == 32);
  CHECK(rep_elements(make_subspace_rep(zero_subspace(amb))).size() == 1);
  auto F3x = parse_ring("GF(3)[x]");
  AmbientSpace a3 = make_ambient(F3x, 2);
  CHECK(rep_elements(make_subspace_rep(span(a3, vals(F3x, {"1", "x"})))).size() == 9);
  CHECK_THROWS_AS(rep_elements(make_cyclic_int(2)), error);
}

TEST_CASE("reembedding widens the ambient without changing membership") {
  auto F2x = parse_ring("GF(2)[x]");
  AmbientSpace d2 = make_ambient(F2x, 2), d4 = make_ambient(F2x, 4);
  FpSubspace F = span(d2, vals(F2x, {"1", "x^2"}));
  FpSubspace W = reembed(F, d4);
  CHECK(W.amb.degree_bound == 4);
  CHECK(rank_of(W.mat) == 2);
  CHECK(subspace_membership(W, as_poly(parse_value(F2x, "x^2+1"))) == Membership::member);
  CHECK(subspace_membership(W, as_poly(parse_value(F2x, "x^3"))) == Membership::non_member);
}
