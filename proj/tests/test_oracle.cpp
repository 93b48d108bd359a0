#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <factroid/engine.hpp>
#include <factroid/oracle.hpp>

using namespace factroid;

namespace {

bool same_elements(const std::vector<Value>& a, const std::vector<Value>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!values_equal(a[i], b[i])) return false;
  return true;
}

std::vector<Value> sorted_engine_elements(const SubgroupRep& rep) {
  auto out = rep_elements(rep);
  std::sort(out.begin(), out.end(), ValueLess{});
  return out;
}

}  // namespace

TEST_CASE("subgroup enumeration counts") {
  CHECK(oracle::enumerate_subgroups(parse_ring("GF(2)[x]"), 1).size() == 5);
  CHECK(oracle::enumerate_subgroups(parse_ring("Z/6"), -1).size() == 4);
  CHECK(oracle::enumerate_subgroups(parse_ring("GF(3)[x]"), 0).size() == 2);
  CHECK(oracle::detail::subspace_count(2, 6) == 2825);
  CHECK(oracle::detail::subspace_count(3, 4) == 212);
}

TEST_CASE("echelon enumeration order is deterministic") {
  auto F2x = parse_ring("GF(2)[x]");
  auto gs = oracle::enumerate_subgroups(F2x, 1);
  REQUIRE(gs.size() == 5);
  auto render = [&](const std::vector<Value>& g) {
    std::string s;
    for (const auto& v : g) s += print_value(F2x, v) + ";";
    return s;
  };
  CHECK(render(gs[0]) == "0;");
  CHECK(render(gs[1]) == "0;1;");
  CHECK(render(gs[2]) == "0;x + 1;");
  CHECK(render(gs[3]) == "0;x;");
  CHECK(render(gs[4]) == "0;1;x + 1;x;");
}

TEST_CASE("budget refusals") {
  CHECK_THROWS_AS(oracle::enumerate_subgroups(parse_ring("GF(2)[x]"), 7), error);
  CHECK_THROWS_AS(oracle::enumerate_subgroups(parse_ring("GF(3)[x]"), 4), error);
  CHECK_THROWS_AS(oracle::enumerate_subgroups(parse_ring("Z/128"), -1), error);
}

TEST_CASE("factroid enumeration matches the degree-ball classification") {
  auto F2x = parse_ring("GF(2)[x]");
  auto reg = make_reg(F2x);
  auto fs = oracle::enumerate_factroids(F2x, *reg, 3);
  REQUIRE(fs.size() == 5);
  std::vector<size_t> sizes;
  for (const auto& f : fs) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 4, 8, 16});
}

TEST_CASE("factroids of products of tiny fields") {
  auto F22 = parse_ring("(GF(2))x(GF(2))");
  auto reg22 = make_reg(F22);
  auto fs = oracle::enumerate_factroids(F22, *reg22, -1);
  REQUIRE(fs.size() == 5);
  bool diagonal_found = false;
  for (const auto& f : fs)
    if (f.size() == 2 && values_equal(f[1], parse_value(F22, "(1|1)"))) diagonal_found = true;
  CHECK(diagonal_found);

  auto F32 = parse_ring("(GF(3))x(GF(2))");
  auto reg32 = make_reg(F32);
  auto fs2 = oracle::enumerate_factroids(F32, *reg32, -1);
  REQUIRE(fs2.size() == 4);
  std::vector<size_t> sizes;
  for (const auto& f : fs2) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 3, 6});
}

TEST_CASE("enumerated factroids are closed under pairwise intersection") {
  auto F2x = parse_ring("GF(2)[x]");
  auto reg = make_reg(F2x);
  auto fs = oracle::enumerate_factroids(F2x, *reg, 2);
  auto member = [&](const std::vector<Value>& g, const Value& v) {
    for (const auto& x : g)
      if (values_equal(x, v)) return true;
    return false;
  };
  for (const auto& a : fs)
    for (const auto& b : fs) {
      std::vector<Value> inter;
      for (const auto& v : a)
        if (member(b, v)) inter.push_back(v);
      bool found = false;
      for (const auto& c : fs)
        if (same_elements(c, inter)) found = true;
      CHECK(found);
    }
}

TEST_CASE("every enumerated factroid absorbs the whole mult set") {
  auto Z6 = parse_ring("Z/6");
  auto reg = make_reg(Z6);
  for (const auto& f : oracle::enumerate_factroids(Z6, *reg, -1)) {
    SubgroupRep F = make_explicit_group(Z6, f);
    auto rep = w_of(F);
    for (const auto& w : ring_elements(Z6)) {
      if (!multset_contains(*reg, w)) continue;
      bool listed = false;
      for (const auto& m : rep.members)
        if (values_equal(m, w)) listed = true;
      CHECK(listed);
    }
  }
}

TEST_CASE("naive closure reproduces the frozen examples") {
  auto F2x = parse_ring("GF(2)[x]");
  auto reg = make_reg(F2x);
  CHECK(oracle::naive_closure(F2x, *reg, {parse_value(F2x, "x^2")}).size() == 8);
  CHECK(oracle::naive_closure(F2x, *reg, {}).size() == 1);

  auto F2xy = parse_ring("GF(2)[x,y]");
  auto reg2 = make_reg(F2xy);
  Value f = parse_value(F2xy, "(x+y^2)*(y+x^2)");
  auto elems = oracle::naive_closure(F2xy, *reg2, {f});
  CHECK(elems.size() == 64);
  auto eng = closure(F2xy, *reg2, {f});
  CHECK(same_elements(elems, sorted_engine_elements(eng.result)));
}

TEST_CASE("oracle and engine agree on univariate singletons") {
  auto F2x = parse_ring("GF(2)[x]");
  auto reg = make_reg(F2x);
  for (int64_t bits = 1; bits < 16; ++bits) {
    Poly q;
    for (int i = 0; i < 4; ++i)
      if ((bits >> i) & 1) poly_add_term(q, Monomial{{uint16_t(i)}}, 1, 2);
    Value g{q};
    auto naive = oracle::naive_closure(F2x, *reg, {g});
    auto eng = closure(F2x, *reg, {g});
    CHECK(same_elements(naive, sorted_engine_elements(eng.result)));
  }
}

TEST_CASE("oracle and engine agree on bivariate singletons of low degree") {
  auto F2xy = parse_ring("GF(2)[x,y]");
  auto reg = make_reg(F2xy);
  auto mons = monomials_up_to(2, 2);
  REQUIRE(mons.size() == 6);
  for (int64_t bits = 1; bits < 64; ++bits) {
    Poly q;
    for (int i = 0; i < 6; ++i)
      if ((bits >> i) & 1) poly_add_term(q, mons[size_t(i)], 1, 2);
    Value g{q};
    auto naive = oracle::naive_closure(F2xy, *reg, {g});
    auto eng = closure(F2xy, *reg, {g});
    CHECK(same_elements(naive, sorted_engine_elements(eng.result)));
  }
}

TEST_CASE("oracle and engine agree over every small residue ring") {
  for (int64_t n = 2; n <= 30; ++n) {
    auto r = parse_ring("Z/" + std::to_string(n));
    auto reg = make_reg(r);
    for (int64_t g = 0; g < n; ++g) {
      auto naive = oracle::naive_closure(r, *reg, {from_int(r, g)});
      auto eng = closure(r, *reg, {from_int(r, g)});
      CHECK(same_elements(naive, sorted_engine_elements(eng.result)));
    }
  }
}

TEST_CASE("integer reference closure") {
  CHECK(oracle::naive_closure_int(360, {6}) == 5);
  CHECK(oracle::naive_closure_int(100, {2, 5}) == 1);
  CHECK(oracle::naive_closure_int(0, {2}) == 0);
  CHECK(oracle::naive_closure_int(-24, {2}) == 3);

  std::mt19937 rng(7111);
  auto Z = parse_ring("Z");
  for (int trial = 0; trial < 50; ++trial) {
    mpz_class g = int64_t(rng() % 5000) + 1;
    std::vector<mpz_class> ws;
    std::vector<Value> wv;
    int k = 1 + int(rng() % 3);
    for (int i = 0; i < k; ++i) {
      int64_t t = int64_t(rng() % 99) + 2;
      ws.push_back(t);
      wv.push_back(from_int(Z, t));
    }
    auto W = make_monoid_gen(Z, wv);
    CHECK(closure_int(g, *W) == oracle::naive_closure_int(g, ws));
  }
}
