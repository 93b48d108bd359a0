// factroid: command-line front end.
//
// Every subcommand prints a single JSON document (or a short text rendering
// with --output text). Exit codes: 0 success, 1 domain/parse errors,
// 2 budget or search-bound exhaustion.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <factroid/factroid.hpp>

using nlohmann::json;
using namespace factroid;

namespace {

// generator lists: repeatable flags, ';'-separated items, "-" pulls stdin
std::vector<std::string> expand_items(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  auto push_split = [&](const std::string& s) {
    std::string cur;
    for (char c : s) {
      if (c == ';' || c == '\n') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
  };
  for (const auto& item : raw) {
    if (item == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      push_split(ss.str());
    } else {
      push_split(item);
    }
  }
  return out;
}

std::vector<Value> parse_values(const RingPtr& r, const std::vector<std::string>& items) {
  std::vector<Value> out;
  for (const auto& s : items) out.push_back(parse_value(r, s));
  return out;
}

// the additive subgroup generated by the inputs, in the requested ambient
SubgroupRep build_subgroup(const RingPtr& r, const std::vector<Value>& gens, int bound) {
  if (r->kind == RingKind::poly_ring) {
    int d = bound;
    if (d < 0) {
      d = 0;
      for (const auto& g : gens) d = std::max(d, std::max(0, degree_of(r, g)));
    }
    return make_subspace_rep(span(make_ambient(r, d), gens));
  }
  if (r->kind == RingKind::integers) {
    mpz_class g = 0;
    for (const auto& v : gens) g = gcd(g, as_mpz(v));
    return make_cyclic_int(g);
  }
  if (r->kind == RingKind::integers_mod || r->kind == RingKind::prime_field) {
    int64_t g = r->n;
    for (const auto& v : gens) g = std::gcd(g, as_res(v));
    return make_cyclic_mod(r, g == 0 ? r->n : g);
  }
  return make_explicit_group(r, factroid::detail::subgroup_close(r, gens));
}

json j_values(const RingPtr& r, const std::vector<Value>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(print_value(r, v));
  return a;
}

json j_subgroup(const SubgroupRep& rep) {
  json j;
  if (std::holds_alternative<FpSubspace>(rep.rep)) {
    const auto& X = std::get<FpSubspace>(rep.rep);
    j["type"] = "subspace";
    j["degree_bound"] = X.amb.degree_bound;
    j["dim"] = int(rank_of(X.mat));
    j["basis"] = j_values(rep.ring, basis_values(rep));
  } else if (std::holds_alternative<CyclicInt>(rep.rep)) {
    j["type"] = "cyclic_int";
    j["generator"] = std::get<CyclicInt>(rep.rep).g.get_str();
  } else if (std::holds_alternative<CyclicMod>(rep.rep)) {
    const auto& c = std::get<CyclicMod>(rep.rep);
    j["type"] = "cyclic_mod";
    j["modulus"] = c.n;
    j["generator"] = c.g;
  } else if (std::holds_alternative<ExplicitGroup>(rep.rep)) {
    j["type"] = "explicit";
    j["elements"] = j_values(rep.ring, std::get<ExplicitGroup>(rep.rep).elems);
  } else {
    const auto& pp = std::get<PairProduct>(rep.rep);
    j["type"] = "product";
    j["left"] = j_subgroup(pp.parts[0]);
    j["right"] = j_subgroup(pp.parts[1]);
  }
  return j;
}

std::vector<std::string> subgroup_lines(const SubgroupRep& rep) {
  if (std::holds_alternative<FpSubspace>(rep.rep)) {
    std::vector<std::string> out;
    for (const auto& b : basis_values(rep)) out.push_back(print_value(rep.ring, b));
    return out;
  }
  if (std::holds_alternative<CyclicInt>(rep.rep))
    return {"generated by " + std::get<CyclicInt>(rep.rep).g.get_str()};
  if (std::holds_alternative<CyclicMod>(rep.rep)) {
    const auto& c = std::get<CyclicMod>(rep.rep);
    return {"generated by " + std::to_string(c.g) + " mod " + std::to_string(c.n)};
  }
  if (std::holds_alternative<ExplicitGroup>(rep.rep)) {
    std::vector<std::string> out;
    for (const auto& e : std::get<ExplicitGroup>(rep.rep).elems)
      out.push_back(print_value(rep.ring, e));
    return out;
  }
  return {j_subgroup(rep).dump()};
}

json j_closure(const ClosureResult& c) {
  json j;
  j["subgroup"] = j_subgroup(c.result);
  j["iterations"] = c.iterations;
  j["stabilized"] = c.stabilized;
  if (c.degree_bound >= 0) j["degree_bound"] = c.degree_bound;
  if (!c.trace.empty()) {
    json t = json::array();
    for (const auto& s : c.trace) t.push_back(j_subgroup(s));
    j["trace"] = t;
  }
  return j;
}

json j_gmember(const RingPtr& r, const GMembership& g) {
  json j;
  j["status"] = g_status_name(g.status);
  j["searched_bound"] = g.searched_bound;
  if (g.witness) j["witness"] = print_value(r, *g.witness);
  j["closure_basis"] = j_values(r, g.closure_basis);
  return j;
}

struct Rendered {
  json result;
  int exit_code = 0;
  std::string text;  // --output text rendering
};

std::string bool_word(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact saturated-subgroup computations"};
  app.require_subcommand(1);

  std::string ring_s, mulset_s = "reg", output = "json", xs, num_s, den_s, rational_s;
  std::vector<std::string> gens_raw, by_raw, into_raw;
  int bound = -1, max_witness = 3, depth = 0, chain_bound = 10, max_terms = 256;
  unsigned seed = 0;
  bool trace = false, distinct = false, compare = false, factroids_only = false;

  auto add_ring = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--ring", ring_s, "ring, e.g. Z, Z/12, GF(2)[x,y], (GF(3))x(GF(2))");
    if (required) o->required();
  };
  auto add_mulset = [&](CLI::App* c) {
    c->add_option("--mulset", mulset_s,
                  "multiplicative set: reg | units | evendeg | gen:{..} | explicit:{..} | complement:{..}");
  };
  auto add_gens = [&](CLI::App* c) {
    c->add_option("--gens", gens_raw, "generators, ';'-separated ('-' reads stdin)");
  };
  auto add_bound = [&](CLI::App* c) { c->add_option("--bound", bound, "ambient degree bound"); };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--output", output, "json | text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* c_closure = app.add_subcommand("closure", "smallest saturated subgroup containing the generators");
  add_ring(c_closure); add_mulset(c_closure); add_gens(c_closure); add_bound(c_closure); add_output(c_closure);
  c_closure->add_flag("--trace", trace, "record every iterate");

  CLI::App* c_sat = app.add_subcommand("saturate", "one saturation sweep over the listed elements");
  add_ring(c_sat); add_mulset(c_sat); add_gens(c_sat); add_bound(c_sat); add_output(c_sat);

  CLI::App* c_wof = app.add_subcommand("wof", "largest set the subgroup absorbs");
  add_ring(c_wof); add_gens(c_wof); add_bound(c_wof); add_output(c_wof);

  CLI::App* c_aof = app.add_subcommand("aof", "multiplier subring of the subgroup");
  add_ring(c_aof); add_gens(c_aof); add_bound(c_aof); add_output(c_aof);

  CLI::App* c_colon = app.add_subcommand("colon", "colon subgroup (F : t) or transporter (F : s into the ring)");
  add_ring(c_colon); add_gens(c_colon); add_bound(c_colon); add_output(c_colon);
  c_colon->add_option("--by", by_raw, "divide by these elements");
  c_colon->add_option("--into-ring", into_raw, "transport these elements into the ring");

  CLI::App* c_check = app.add_subcommand("check", "is the spanned subgroup saturated?");
  add_ring(c_check); add_mulset(c_check); add_gens(c_check); add_bound(c_check); add_output(c_check);

  CLI::App* c_egy = app.add_subcommand("egyptian", "decide a/b as a sum of unit fractions with denominators in the set");
  add_ring(c_egy); add_mulset(c_egy); add_output(c_egy);
  c_egy->add_option("--num", num_s, "numerator")->required();
  c_egy->add_option("--den", den_s, "denominator")->required();
  c_egy->add_option("--max-witness-degree", max_witness, "search bound");

  CLI::App* c_greedy = app.add_subcommand("greedy", "greedy unit-fraction expansion of a positive rational");
  add_output(c_greedy);
  c_greedy->add_option("--rational", rational_s, "a/b")->required();
  c_greedy->add_flag("--distinct", distinct, "force strictly increasing denominators");
  c_greedy->add_option("--max-terms", max_terms, "term budget");

  CLI::App* c_gm = app.add_subcommand("gmember", "membership in the saturated hull G(S)");
  add_ring(c_gm); add_mulset(c_gm); add_gens(c_gm); add_output(c_gm);
  c_gm->add_option("--x", xs, "element to test")->required();
  c_gm->add_option("--max-witness-degree", max_witness, "search bound");

  CLI::App* c_tr = app.add_subcommand("tregular", "do colons by set members stay inside the closure?");
  add_ring(c_tr); add_mulset(c_tr); add_gens(c_tr); add_output(c_tr);
  c_tr->add_option("--max-witness-degree", max_witness, "search bound");

  CLI::App* c_cls = app.add_subcommand("classify", "unit-additive / sublocalizable / local predicates");
  add_ring(c_cls); add_output(c_cls);
  c_cls->add_option("--depth", depth, "also run the unit chain this deep");
  c_cls->add_option("--bound", chain_bound, "chain truncation bound");

  CLI::App* c_euc = app.add_subcommand("euclid", "the full factroid list of a Euclidean ring");
  add_ring(c_euc); add_bound(c_euc); add_output(c_euc);

  CLI::App* c_or = app.add_subcommand("oracle", "brute-force reference paths");
  c_or->require_subcommand(1);
  CLI::App* c_oe = c_or->add_subcommand("enumerate", "all subgroups, or all factroids with --factroids");
  add_ring(c_oe); add_mulset(c_oe); add_bound(c_oe); add_output(c_oe);
  c_oe->add_flag("--factroids", factroids_only, "filter by the element-wise saturation test");
  CLI::App* c_oc = c_or->add_subcommand("closure", "literal element-by-element closure");
  add_ring(c_oc); add_mulset(c_oc); add_gens(c_oc); add_bound(c_oc); add_output(c_oc);
  c_oc->add_flag("--compare", compare, "also run the engine and diff");

  app.add_option("--seed", seed, "seed echoed into the invocation record");
  for (auto* sc : app.get_subcommands(nullptr)) {
    sc->fallthrough();
    for (auto* sub : sc->get_subcommands(nullptr)) sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  json inv;
  inv["seed"] = seed;
  auto finish = [&](Rendered r) -> int {
    if (output == "text") {
      std::fputs(r.text.c_str(), stdout);
    } else {
      json top;
      top["schema"] = "factroid/1";
      top["invocation"] = inv;
      top["result"] = r.result;
      std::fputs((top.dump(2) + "\n").c_str(), stdout);
    }
    return r.exit_code;
  };

  try {
    if (*c_greedy) {
      inv["subcommand"] = "greedy";
      inv["rational"] = rational_s;
      inv["distinct"] = distinct;
      inv["max_terms"] = max_terms;
      mpq_class q;
      if (q.set_str(rational_s, 10) != 0 || q.get_den() == 0)
        fail(errc::parse, "bad rational \"" + rational_s + "\"");
      q.canonicalize();
      auto g = greedy_unit_fractions(q, distinct, max_terms);
      Rendered r;
      json ds = json::array();
      std::string line;
      for (const auto& d : g.denominators) {
        ds.push_back(d.get_str());
        line += (line.empty() ? "" : " ") + d.get_str();
      }
      r.result["denominators"] = ds;
      r.text = line + "\n";
      return finish(std::move(r));
    }

    RingPtr R = parse_ring(ring_s);
    inv["ring"] = ring_s;
    auto gens_items = expand_items(gens_raw);
    std::vector<Value> gens = parse_values(R, gens_items);

    if (*c_closure || *c_sat || *c_check || *c_gm || *c_tr ||
        (*c_or && (*c_oe || *c_oc)) || *c_egy) {
      inv["mulset"] = mulset_s;
    }

    if (*c_closure) {
      inv["subcommand"] = "closure";
      inv["gens"] = gens_items;
      inv["bound"] = bound;
      inv["trace"] = trace;
      auto W = parse_multset(R, mulset_s);
      auto C = closure(R, *W, gens, bound, trace);
      Rendered r;
      r.result = j_closure(C);
      std::string t = "iterations: " + std::to_string(C.iterations) + "\n";
      for (const auto& line : subgroup_lines(C.result)) t += line + "\n";
      r.text = t;
      return finish(std::move(r));
    }
    if (*c_sat) {
      inv["subcommand"] = "saturate";
      inv["gens"] = gens_items;
      inv["bound"] = bound;
      auto W = parse_multset(R, mulset_s);
      auto es = saturate(R, *W, gens, bound);
      Rendered r;
      r.result["elements"] = j_values(R, es);
      std::string t;
      for (const auto& e : es) t += print_value(R, e) + "\n";
      r.text = t;
      return finish(std::move(r));
    }
    if (*c_wof) {
      inv["subcommand"] = "wof";
      inv["gens"] = gens_items;
      inv["bound"] = bound;
      auto F = build_subgroup(R, gens, bound);
      auto w = w_of(F);
      Rendered r;
      json j;
      j["scalars_member"] = w.scalars_member;
      if (w.degree_bound >= 0) j["degree_bound"] = w.degree_bound;
      if (!w.cofinite_rule.empty()) j["cofinite_rule"] = w.cofinite_rule;
      if (w.coprime_to) j["coprime_to"] = w.coprime_to->get_str();
      json mm = json::array();
      for (const auto& [v, in] : w.monic_members)
        mm.push_back(json{{"element", print_value(R, v)}, {"member", in}});
      if (!mm.empty()) j["monic_members"] = mm;
      if (!w.members.empty()) j["members"] = j_values(R, w.members);
      r.result = j;
      r.text = (w.coprime_to ? "coprime to " + w.coprime_to->get_str() + "\n"
                             : w.cofinite_rule + "\n");
      return finish(std::move(r));
    }
    if (*c_aof) {
      inv["subcommand"] = "aof";
      inv["gens"] = gens_items;
      inv["bound"] = bound;
      auto F = build_subgroup(R, gens, bound);
      auto a = a_of(F);
      Rendered r;
      r.result["whole_ring"] = a.whole_ring;
      r.result["subgroup"] = j_subgroup(a.subgroup);
      r.text = std::string(a.whole_ring ? "whole ring\n" : "proper subgroup\n");
      return finish(std::move(r));
    }
    if (*c_colon) {
      inv["subcommand"] = "colon";
      inv["gens"] = gens_items;
      inv["bound"] = bound;
      auto by_items = expand_items(by_raw);
      auto into_items = expand_items(into_raw);
      if (by_items.empty() == into_items.empty())
        fail(errc::domain, "pass exactly one of --by or --into-ring");
      inv["by"] = by_items;
      inv["into_ring"] = into_items;
      auto F = build_subgroup(R, gens, bound);
      SubgroupRep out = by_items.empty()
                            ? colon_into_ring(F, parse_values(R, into_items))
                            : colon_by_set(F, parse_values(R, by_items));
      Rendered r;
      r.result["subgroup"] = j_subgroup(out);
      r.text = j_subgroup(out).dump() + "\n";
      return finish(std::move(r));
    }
    if (*c_check) {
      inv["subcommand"] = "check";
      inv["gens"] = gens_items;
      inv["bound"] = bound;
      auto W = parse_multset(R, mulset_s);
      bool ok = is_factroid(build_subgroup(R, gens, bound), *W);
      Rendered r;
      r.result["factroid"] = ok;
      r.text = bool_word(ok) + "\n";
      return finish(std::move(r));
    }
    if (*c_egy) {
      inv["subcommand"] = "egyptian";
      inv["num"] = num_s;
      inv["den"] = den_s;
      inv["max_witness_degree"] = max_witness;
      auto W = parse_multset(R, mulset_s);
      auto rep = egyptian_decide(R, *W, parse_value(R, num_s), parse_value(R, den_s), max_witness);
      Rendered r;
      r.result["a"] = print_value(R, rep.a);
      r.result["b"] = print_value(R, rep.b);
      r.result["membership"] = j_gmember(R, rep.g);
      r.exit_code = rep.g.status == GStatus::not_found_up_to ? 2 : 0;
      r.text = std::string(g_status_name(rep.g.status)) + "\n";
      return finish(std::move(r));
    }
    if (*c_gm) {
      inv["subcommand"] = "gmember";
      inv["gens"] = gens_items;
      inv["x"] = xs;
      inv["max_witness_degree"] = max_witness;
      auto W = parse_multset(R, mulset_s);
      auto g = g_membership(R, *W, parse_value(R, xs), gens, max_witness);
      Rendered r;
      r.result = j_gmember(R, g);
      r.exit_code = g.status == GStatus::not_found_up_to ? 2 : 0;
      r.text = std::string(g_status_name(g.status)) + "\n";
      return finish(std::move(r));
    }
    if (*c_tr) {
      inv["subcommand"] = "tregular";
      inv["gens"] = gens_items;
      inv["max_witness_degree"] = max_witness;
      auto W = parse_multset(R, mulset_s);
      auto rep = t_regular_check(R, *W, gens, max_witness);
      Rendered r;
      r.result["regular_up_to_bound"] = rep.regular_up_to_bound;
      r.result["searched_bound"] = rep.searched_bound;
      if (rep.counterexample) {
        r.result["counterexample"] =
            json{{"h", print_value(R, rep.counterexample->first)},
                 {"x", print_value(R, rep.counterexample->second)}};
      }
      r.text = bool_word(rep.regular_up_to_bound) + "\n";
      return finish(std::move(r));
    }
    if (*c_cls) {
      inv["subcommand"] = "classify";
      inv["depth"] = depth;
      inv["bound"] = chain_bound;
      auto rep = classify_ring(R);
      Rendered r;
      r.result["ring"] = print_ring(R);
      r.result["unit_additive"] = rep.unit_additive;
      r.result["sublocalizable"] = rep.sublocalizable;
      r.result["local"] = rep.local;
      if (rep.sublocalization) r.result["sublocalization"] = j_subgroup(*rep.sublocalization);
      if (rep.counterexample)
        r.result["counterexample"] = json::array({print_value(R, rep.counterexample->first),
                                                  print_value(R, rep.counterexample->second)});
      if (depth > 0) {
        auto ch = ua_chain(R, depth, chain_bound);
        json stages = json::array();
        for (const auto& st : ch.stages) stages.push_back(j_values(R, st));
        r.result["chain"] = json{{"stages", stages}, {"stabilized", ch.stabilized}};
      }
      r.text = "unit_additive: " + bool_word(rep.unit_additive) +
               "\nsublocalizable: " + bool_word(rep.sublocalizable) +
               "\nlocal: " + bool_word(rep.local) + "\n";
      return finish(std::move(r));
    }
    if (*c_euc) {
      inv["subcommand"] = "euclid";
      inv["bound"] = bound;
      auto fs = euclidean_factroids(R, bound < 0 ? 3 : bound);
      Rendered r;
      json a = json::array();
      for (const auto& f : fs) a.push_back(j_subgroup(f));
      r.result["count"] = int(fs.size());
      r.result["factroids"] = a;
      r.text = std::to_string(fs.size()) + " factroids\n";
      return finish(std::move(r));
    }
    if (*c_or) {
      auto W = parse_multset(R, mulset_s);
      if (*c_oe) {
        inv["subcommand"] = "oracle enumerate";
        inv["bound"] = bound;
        inv["factroids"] = factroids_only;
        auto groups = factroids_only ? oracle::enumerate_factroids(R, *W, bound)
                                     : oracle::enumerate_subgroups(R, bound);
        Rendered r;
        json a = json::array();
        for (const auto& g : groups) a.push_back(json{{"elements", j_values(R, g)}});
        r.result["count"] = int(groups.size());
        r.result["subgroups"] = a;
        r.text = std::to_string(groups.size()) + "\n";
        return finish(std::move(r));
      }
      inv["subcommand"] = "oracle closure";
      inv["gens"] = gens_items;
      inv["bound"] = bound;
      inv["compare"] = compare;
      auto elems = oracle::naive_closure(R, *W, gens, bound);
      Rendered r;
      r.result["elements"] = j_values(R, elems);
      if (compare) {
        auto C = closure(R, *W, gens, bound);
        auto engine_elems = rep_elements(C.result);
        std::sort(engine_elems.begin(), engine_elems.end(), ValueLess{});
        bool agree = engine_elems.size() == elems.size();
        for (size_t i = 0; agree && i < elems.size(); ++i)
          agree = values_equal(engine_elems[i], elems[i]);
        r.result["engine_elements"] = j_values(R, engine_elems);
        r.result["agree"] = agree;
      }
      r.text = std::to_string(elems.size()) + " elements\n";
      return finish(std::move(r));
    }
    fail(errc::internal, "no subcommand dispatched");
  } catch (const error& e) {
    json top;
    top["schema"] = "factroid/1";
    top["invocation"] = inv;
    top["error"] = json{{"category", errc_name(e.code)}, {"message", e.what()}};
    std::fputs((top.dump(2) + "\n").c_str(), stdout);
    return e.code == errc::budget ? 2 : 1;
  } catch (const std::exception& e) {
    json top;
    top["schema"] = "factroid/1";
    top["error"] = json{{"category", "internal"}, {"message", e.what()}};
    std::fputs((top.dump(2) + "\n").c_str(), stdout);
    return 1;
  }
}
