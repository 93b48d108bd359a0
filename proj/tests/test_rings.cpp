#include <catch2/catch_amalgamated.hpp>

#include <factroid/rings.hpp>

using namespace factroid;

TEST_CASE("monomial order is graded lex with earlier variables higher") {
  Monomial one{};
  Monomial x{{1, 0}}, y{{0, 1}}, x2{{2, 0}}, xy{{1, 1}}, y2{{0, 2}};
  CHECK(grlex_less(one, x));
  CHECK(grlex_less(y, x));
  CHECK(grlex_less(x, y2));   // degree dominates
  CHECK(grlex_less(xy, x2));
  CHECK(grlex_less(y2, xy));
  CHECK_FALSE(grlex_less(x, x));
}

TEST_CASE("monomials_up_to: degree ascending, graded-lex descending inside a block") {
  auto ms = monomials_up_to(2, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms[0] == Monomial{});
  CHECK(ms[1] == Monomial{{1, 0}});
  CHECK(ms[2] == Monomial{{0, 1}});
  CHECK(ms[3] == Monomial{{2, 0}});
  CHECK(ms[4] == Monomial{{1, 1}});
  CHECK(ms[5] == Monomial{{0, 2}});
  CHECK(monomials_up_to(1, 5).size() == 6);
  CHECK(monomials_up_to(3, 2).size() == 10);
}

TEST_CASE("polynomial arithmetic over small prime fields") {
  // (x + y^2)(y + x^2) = xy + x^3 + y^3 + x^2y^2 over GF(2)
  Poly a, b;
  poly_add_term(a, Monomial{{1, 0}}, 1, 2);
  poly_add_term(a, Monomial{{0, 2}}, 1, 2);
  poly_add_term(b, Monomial{{0, 1}}, 1, 2);
  poly_add_term(b, Monomial{{2, 0}}, 1, 2);
  Poly f = poly_mul(2, a, b);
  REQUIRE(f.size() == 4);
  CHECK(f.count(Monomial{{1, 1}}) == 1);
  CHECK(f.count(Monomial{{3, 0}}) == 1);
  CHECK(f.count(Monomial{{0, 3}}) == 1);
  CHECK(f.count(Monomial{{2, 2}}) == 1);
  CHECK(poly_deg(f) == 4);

  // coefficients cancel mod 3
  Poly u, v;
  poly_add_term(u, Monomial{{1}}, 2, 3);
  poly_add_term(v, Monomial{{1}}, 1, 3);
  Poly s = poly_add(3, u, v);
  CHECK(s.empty());

  auto q = poly_divide_exact(2, f, a);
  REQUIRE(q.has_value());
  CHECK(*q == b);
  Poly xp;
  poly_add_term(xp, Monomial{{1, 0}}, 1, 2);
  CHECK_FALSE(poly_divide_exact(2, f, poly_add(2, a, xp)).has_value());
}

TEST_CASE("value parsing and printing round-trip") {
  auto Z = parse_ring("Z");
  auto Zn = parse_ring("Z/12");
  auto F5x = parse_ring("GF(5)[x]");
  auto F2xy = parse_ring("GF(2)[x,y]");
  auto P = parse_ring("(GF(3))x(GF(2))");

  for (auto [r, text] : std::initializer_list<std::pair<RingPtr, const char*>>{
           {Z, "-42"},
           {Zn, "7"},
           {F5x, "3*x^2 + x + 4"},
           {F2xy, "x^2*y^2 + x^3 + y^3 + x*y"},
           {P, "(2|1)"}}) {
    Value v = parse_value(r, text);
    CHECK(print_value(r, v) == text);
    CHECK(values_equal(parse_value(r, print_value(r, v)), v));
  }

  // arithmetic inside the parser
  CHECK(values_equal(parse_value(F2xy, "(x+y^2)*(y+x^2)"),
                     parse_value(F2xy, "x*y + x^3 + y^3 + x^2*y^2")));
  CHECK(values_equal(parse_value(Zn, "25"), parse_value(Zn, "1")));
  CHECK_THROWS_AS(parse_value(F5x, "x +"), error);
}

TEST_CASE("ring parsing accepts the documented grammar") {
  CHECK(parse_ring("Z")->kind == RingKind::integers);
  CHECK(parse_ring("Z/9")->n == 9);
  CHECK(parse_ring("GF(7)")->kind == RingKind::prime_field);
  auto pr = parse_ring("GF(3)[u,v]");
  CHECK(pr->vars == std::vector<std::string>{"u", "v"});
  auto prod = parse_ring("(Z/4)x(GF(2))");
  REQUIRE(prod->kind == RingKind::product);
  CHECK(prod->left->n == 4);
  CHECK_THROWS_AS(parse_ring("Z/1"), error);
  CHECK_THROWS_AS(parse_ring("GF(6)[x]"), error);
  CHECK_THROWS_AS(parse_ring("((Z)x(Z))x(Z)"), error);
}

TEST_CASE("solve_linear enumerates residue solutions in ascending order") {
  auto Z6 = parse_ring("Z/6");
  auto sols = solve_linear(Z6, from_int(Z6, 2), from_int(Z6, 4));
  REQUIRE(sols.size() == 2);
  CHECK(as_res(sols[0]) == 2);
  CHECK(as_res(sols[1]) == 5);
  CHECK(solve_linear(Z6, from_int(Z6, 2), from_int(Z6, 3)).empty());

  auto Z = parse_ring("Z");
  auto s2 = solve_linear(Z, from_int(Z, 3), from_int(Z, -6));
  REQUIRE(s2.size() == 1);
  CHECK(as_mpz(s2[0]) == -2);
  CHECK(solve_linear(Z, from_int(Z, 3), from_int(Z, 2)).empty());
  CHECK_THROWS_AS(solve_linear(Z, zero(Z), zero(Z)), error);

  auto P = parse_ring("(Z/2)x(Z/3)");
  auto s3 = solve_linear(P, parse_value(P, "(1|2)"), parse_value(P, "(1|1)"));
  REQUIRE(s3.size() == 1);
  CHECK(print_value(P, s3[0]) == "(1|2)");
}

TEST_CASE("unit, nilpotent, and radical predicates") {
  auto Z12 = parse_ring("Z/12");
  auto us = units_of(Z12);
  REQUIRE(us.size() == 4);
  CHECK(as_res(us[0]) == 1);
  CHECK(as_res(us[3]) == 11);
  CHECK(as_res(jacobson_radical(Z12)) == 6);

  auto Z8 = parse_ring("Z/8");
  int nilp = 0;
  for (const auto& v : ring_elements(Z8))
    if (is_nilpotent(Z8, v)) ++nilp;
  CHECK(nilp == 4);

  // squarefree modulus: radical reduces to 0, membership must not divide by it
  auto Z6 = parse_ring("Z/6");
  CHECK(in_jacobson(Z6, zero(Z6)));
  CHECK_FALSE(in_jacobson(Z6, from_int(Z6, 2)));
  CHECK_FALSE(in_jacobson(Z6, from_int(Z6, 3)));

  auto F2x = parse_ring("GF(2)[x]");
  CHECK(is_unit(F2x, one(F2x)));
  CHECK_FALSE(is_unit(F2x, parse_value(F2x, "x")));
  CHECK(in_jacobson(F2x, zero(F2x)));
  CHECK_FALSE(in_jacobson(F2x, one(F2x)));
}

TEST_CASE("ring element enumeration and sizes") {
  auto Z6 = parse_ring("Z/6");
  CHECK(ring_size(Z6) == 6);
  CHECK(ring_elements(Z6).size() == 6);
  auto P = parse_ring("(GF(3))x(GF(2))");
  CHECK(ring_size(P) == 6);
  CHECK(ring_elements(P).size() == 6);
  CHECK_FALSE(ring_size(parse_ring("Z")).has_value());
  CHECK_FALSE(ring_size(parse_ring("GF(2)[x]")).has_value());
  CHECK_THROWS_AS(ring_elements(parse_ring("Z")), error);
}

TEST_CASE("monic enumeration is degree-ascending and complete") {
  int count = 0;
  int last_deg = 0;
  enumerate_monic(2, 1, 1, 3, [&](const Poly& m) {
    int d = poly_deg(m);
    CHECK(d >= last_deg);
    last_deg = d;
    ++count;
    return true;
  });
  CHECK(count == 2 + 4 + 8);
  CHECK(monic_count_up_to(2, 1, 3, 1 << 20) == 14);
  int64_t bivar = 0;
  enumerate_monic(3, 2, 1, 2, [&](const Poly&) { ++bivar; return true; });
  CHECK(bivar == 363);
  CHECK(monic_count_up_to(3, 2, 2, 1 << 20) == bivar);

  // callback can stop early
  int seen = 0;
  enumerate_monic(2, 1, 1, 3, [&](const Poly&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("ring homomorphisms apply correctly") {
  auto Z = parse_ring("Z");
  auto Z6 = parse_ring("Z/6");
  RingHom q = make_quotient_map(Z6);
  CHECK(as_res(apply_hom(q, from_int(Z, 14))) == 2);

  auto F2xy = parse_ring("GF(2)[x,y]");
  auto F2x = parse_ring("GF(2)[x]");
  RingHom ev = make_eval_var_to_zero(F2xy, "y");
  Value g = parse_value(F2xy, "x^2 + x*y + y^2 + 1");
  CHECK(print_value(F2x, apply_hom(ev, g)) == "x^2 + 1");
  CHECK_THROWS_AS(make_eval_var_to_zero(F2x, "x"), error);

  RingHom inc = make_inclusion(F2x, F2xy);
  CHECK(print_value(F2xy, apply_hom(inc, parse_value(F2x, "x^2+1"))) == "x^2 + 1");

  auto P = parse_ring("(GF(3))x(GF(2))");
  RingHom pl = make_projection(P, true);
  RingHom pr = make_projection(P, false);
  Value pv = parse_value(P, "(2|1)");
  CHECK(as_res(apply_hom(pl, pv)) == 2);
  CHECK(as_res(apply_hom(pr, pv)) == 1);
}
