// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "hyperkernel/cli.hpp"
#include "hyperkernel/error.hpp"
#include "hyperkernel/fixtures.hpp"
#include "hyperkernel/freeprod.hpp"
#include "hyperkernel/hypfile.hpp"
#include "hyperkernel/quotients.hpp"
#include "oracles.hpp"

using namespace hyperkernel;
using nlohmann::json;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      ok = false;
    }
  }
};

ElementSet labels(const HyperTable& h, std::initializer_list<const char*> names) {
  ElementSet s;
  for (const char* n : names) s.insert(*h.find(n));
  return s;
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = cli::run(args, out, err);
  if (code != nullptr) *code = rc;
  return out.str();
}

// 1. Fundamental relation of h9.
Result ac1() {
  Result r;
  const json j = json::parse(run_cli({"--json", "beta", "h9"}));
  r.expect(j["classes"] == json::parse(R"([["a","b","c","e"],["u","z"],["v"],["x","y"]])"), "classes");
  r.expect(j["kernel"] == json::parse(R"(["a","b","c","e"])"), "kernel");
  const HyperTable h = fixture("h9");
  const QuotientStructure q = quotient_by(h, beta(h));
  r.expect(q.group.has_value() && isomorphic(*q.group, klein_four_group()), "quotient is V4");
  r.expect(q.group.has_value() && oracle::isomorphic(*q.group, klein_four_group()), "oracle V4");
  r.expect(kernel_S(h, beta(h)) == labels(h, {"e", "a", "b", "c"}), "kernel_S");
  return r;
}

// 2. Coset quotient H/{e,a} against the bundled golden table.
Result ac2() {
  Result r;
  const json j = json::parse(run_cli({"--json", "quotient", "h9", "--sub", "e,a"}));
  const HyperTable golden = fixture("h9-quotient");
  const json& cells = j["table"]["cells"];
  const json& elems = j["table"]["elements"];
  r.expect(j["cosets"].size() == 6, "six cosets");
  r.expect(elems == json(golden.names()), "coset labels");
  for (Element a = 0; a < golden.size(); ++a) {
    for (Element b = 0; b < golden.size(); ++b) {
      json want = json::array();
      for (Element c : golden.cell(a, b)) want.push_back(golden.name(c));
      std::sort(want.begin(), want.end());
      r.expect(cells[a][b] == want, "cell " + golden.name(a) + "*" + golden.name(b));
    }
  }
  const HyperTable h = fixture("h9");
  const CosetQuotient q = quotient_hypergroup(h, labels(h, {"e", "a"}));
  r.expect(q.table == golden, "library table");
  const Element z = *golden.find("z∘K");
  const Element v = *golden.find("v∘K");
  r.expect(q.table.cell(z, z) == labels(golden, {"K", "b∘K"}), "(z∘K)^2");
  r.expect(q.table.cell(z, v) == labels(golden, {"x∘K", "y∘K"}), "(z∘K)(v∘K)");
  r.expect(kernel_S(q.table, beta(q.table)) == labels(golden, {"K", "b∘K"}), "quotient kernel");
  const CorrespondenceReport c = correspondence_check(h, labels(h, {"e", "a"}));
  r.expect(c.relations.front().kernel_times_k == labels(h, {"e", "a", "b", "c"}), "S_beta∘K");
  return r;
}

// 3. Fast γ against the brute-force permutation oracle.
Result ac3() {
  Result r;
  std::size_t instances = 0;
  for (const corpus::Instance& inst : corpus::up_to(5)) {
    ++instances;
    r.expect(gamma_oracle(inst.table, 4) == gamma(inst.table), "gamma " + inst.name);
    r.expect(oracle::classes_of(gamma(inst.table)) == oracle::gamma(inst.table, 4), "test oracle " + inst.name);
  }
  const HyperTable& h = fixture("h9");
  r.expect(gamma_oracle(h, 4) == gamma(h), "gamma h9");
  r.expect(instances >= 12, "corpus too small");
  r.detail += r.ok ? std::to_string(instances + 1) + " instances" : "";
  return r;
}

// 4. Both routes to the heart and the derived subhypergroup.
Result ac4() {
  Result r;
  for (const corpus::Instance& inst : corpus::all()) {
    const HyperTable& h = inst.table;
    const ElementSet hb = heart_by_complete_parts(h);
    r.expect(hb == kernel_S(h, beta(h)), "heart " + inst.name);
    r.expect(derived_by_complete_parts(h) == kernel_S(h, gamma(h)), "derived " + inst.name);
    if (h.size() <= 9) r.expect(oracle::to_set(hb) == oracle::least_complete_part(h, {}), "oracle heart " + inst.name);
  }
  return r;
}

// 5. Group and abelian-group quotients by closed subhypergroups.
Result ac5() {
  Result r;
  std::size_t closed = 0;
  for (const corpus::Instance& inst : corpus::all()) {
    const HyperTable& h = inst.table;
    const SubLattice lat = subhypergroups(h);
    for (const SubhypergroupEntry& e : lat.all) {
      if (!e.closed) continue;
      ++closed;
      const std::string tag = inst.name + " " + format_set(h, e.set);
      r.expect(check_group_quotient(h, e.set) == (e.normal && e.contains_s_beta), "group " + tag);
      r.expect(check_abelian_quotient(h, e.set) == e.contains_s_gamma, "abelian " + tag);
    }
  }
  if (r.ok) r.detail = std::to_string(closed) + " closed subhypergroups";
  return r;
}

// 6. Kernel, isomorphism and pullback/join identities on canonical pairs.
Result ac6() {
  Result r;
  const auto pairs = corpus::canonical_pairs();
  r.expect(pairs.size() >= 6, "pairs");
  for (const auto& [name, k] : pairs) {
    const CorrespondenceReport c = correspondence_check(corpus::get(name), k);
    for (const RelationCorrespondence& rc : c.relations) {
      const std::string tag = name + " " + format_set(corpus::get(name), k) + " " + rc.relation;
      r.expect(rc.kernel_identity, tag + " kernel");
      r.expect(rc.quotient_isomorphism, tag + " isomorphism");
      r.expect(rc.pullback_equals_join, tag + " pullback");
      r.expect(rc.join_equals_lift, tag + " lift");
    }
    // Independent coset table.
    const oracle::Cosets want = oracle::coset_quotient(corpus::get(name), oracle::to_set(k));
    for (std::size_t i = 0; i < want.cosets.size(); ++i) {
      for (std::size_t j = 0; j < want.cosets.size(); ++j) {
        r.expect(oracle::to_set(c.quotient.table.cell(i, j)) == want.table[i][j], name + " coset table");
      }
    }
  }
  return r;
}

// 7. |SR(H)| against closed normal subhypergroups over the heart.
Result ac7() {
  Result r;
  for (const corpus::Instance& inst : corpus::up_to(6)) {
    const HyperTable& h = inst.table;
    const std::size_t sr = enumerate_strongly_regular(h).size();
    std::size_t subs = 0;
    for (const SubhypergroupEntry& e : subhypergroups(h).all) subs += e.normal && e.closed && e.contains_s_beta;
    r.expect(sr == subs, inst.name + ": " + std::to_string(sr) + " vs " + std::to_string(subs));
    r.expect(oracle::strongly_regular(h).size() == sr, "oracle SR " + inst.name);
  }
  return r;
}

// 8. Direct products.
Result ac8() {
  Result r;
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"h9", "z2"}, {"z2", "z3"}, {"s3", "z2"}, {"t2", "z2"}, {"krasner", "z2"}, {"t2", "t2"}, {"v4", "s3"},
      {"sign", "z3"}};
  for (const auto& [a, b] : pairs) {
    const HyperTable& h1 = corpus::get(a);
    const HyperTable& h2 = corpus::get(b);
    const ProductReport p = product_identities_check(h1, h2);
    const std::string tag = a + "x" + b;
    r.expect(p.heart_identity, tag + " heart");
    r.expect(p.derived_identity, tag + " derived");
    r.expect(p.gamma_isomorphism, tag + " gamma");
    r.expect(p.beta_isomorphism.value_or(true), tag + " beta");
    // Independent: product classes against paired oracle classes.
    const HyperTable prod = direct_product(h1, h2);
    const auto h1b = oracle::beta(h1);
    const auto h2b = oracle::beta(h2);
    r.expect(oracle::beta(prod).size() == h1b.size() * h2b.size(), tag + " class count");
  }
  return r;
}

int s3_sign(const GroupTable& s3, Element g) {
  const std::string& n = s3.name(g);
  return (n == "s" || n == "t" || n == "w") ? 1 : 0;
}

// 9. Free products: associativity, inverses, φ, ψ and a four-factor group product.
Result ac9() {
  Result r;
  std::mt19937_64 rng(2024);
  std::size_t pairs = 0;
  std::size_t commutators = 0;
  std::size_t unique_checks = 0;
  const std::vector<std::vector<std::string>> registries{{"h9", "v4"}, {"h9", "s3"}, {"h9", "v4", "s3"}};
  for (const auto& names : registries) {
    std::vector<HyperTable> tables;
    for (const std::string& n : names) tables.push_back(corpus::get(n));
    const FactorRegistry reg(tables);
    const oracle::FreeFactors of = oracle::free_factors(tables);
    const GroupFreeProduct target(reg.quotient_groups());
    const AbelianizedFamily fam(reg.quotient_groups());
    for (int i = 0; i < 400; ++i) {
      const ReducedWord a = random_word(reg, 4, rng);
      const ReducedWord b = random_word(reg, 4, rng);
      const ReducedWord c = random_word(reg, 4, rng);
      ++pairs;
      const WordSet ab = multiply(reg, a, b);
      // Oracle product.
      std::set<oracle::Word> want;
      {
        oracle::Word wa;
        oracle::Word wb;
        for (const Letter& l : a.letters) wa.emplace_back(int(l.factor), int(l.elem));
        for (const Letter& l : b.letters) wb.emplace_back(int(l.factor), int(l.elem));
        want = oracle::multiply(of, wa, wb);
      }
      std::set<oracle::Word> got;
      for (const ReducedWord& w : ab) {
        oracle::Word ow;
        for (const Letter& l : w.letters) ow.emplace_back(int(l.factor), int(l.elem));
        got.insert(ow);
      }
      r.expect(got == want, "oracle product");
      r.expect(multiply(reg, multiply(reg, WordSet{a}, WordSet{b}), WordSet{c}) ==
                   multiply(reg, WordSet{a}, multiply(reg, WordSet{b}, WordSet{c})),
               "associativity");
      const ReducedWord pa = phi(reg, target, a);
      const ReducedWord pb = phi(reg, target, b);
      for (const ReducedWord& w : ab) r.expect(phi(reg, target, w) == target.multiply(pa, pb), "phi");
      r.expect(psi(fam, target.multiply(pa, pb)) == direct_sum_add(fam, psi(fam, pa), psi(fam, pb)), "psi additive");
      const ReducedWord comm = target.multiply(target.multiply(pa, pb), target.inverse(target.multiply(pb, pa)));
      r.expect(psi(fam, comm).is_zero(), "psi commutator");
      ++commutators;
      const ReducedWord inv = inverse_word(reg, a);
      r.expect(multiply(reg, a, inv).contains(ReducedWord{}) && multiply(reg, inv, a).contains(ReducedWord{}),
               "inverse");
      if (i % 10 == 0) {
        r.expect(word_inverse_unique(reg, a, a.size()), "unique inverse");
        ++unique_checks;
      }
    }
  }

  // Four group factors X = S3, Y = Z3, Z = V4, W = Z4 over every letter choice.
  const GroupTable s3 = symmetric_group_3();
  const GroupTable z3 = cyclic_group(3);
  const GroupTable v4 = klein_four_group();
  const GroupTable z4 = cyclic_group(4);
  const GroupFreeProduct g({s3, z3, v4, z4});
  const AbelianizedFamily fam({s3, z3, v4, z4});
  for (Element p = 0; p < 4; ++p) {
    for (Element q = 0; q < 4; ++q) r.expect(v4.mul(p, q) == (p ^ q), "V4 labelling");
  }
  // Expected sums from parity and modular arithmetic.
  const Element odd =
      static_cast<Element>(std::find(s3.names().begin(), s3.names().end(), "s") - s3.names().begin());
  const auto expected = [&](int sign, Element y, Element z, Element w) {
    DirectSumElement d;
    if (sign % 2 != 0) d.support[0] = fam.project(0, odd);
    if (y % 3 != 0) d.support[1] = fam.project(1, y % 3);
    if (z != 0) d.support[2] = fam.project(2, z);
    if (w % 4 != 0) d.support[3] = fam.project(3, w % 4);
    return d;
  };
  const auto letters = [](const GroupTable& t) {
    std::vector<Element> out;
    for (Element x = 0; x < t.size(); ++x) {
      if (x != t.identity()) out.push_back(x);
    }
    return out;
  };
  std::size_t four_factor = 0;
  for (Element x1 : letters(s3)) {
    for (Element x2 : letters(s3)) {
      for (Element y1 : letters(z3)) {
        for (Element y2 : letters(z3)) {
          for (Element z1 : letters(v4)) {
            for (Element z2 : letters(v4)) {
              for (Element w1 : letters(z4)) {
                for (Element w2 : letters(z4)) {
                  const ReducedWord a = g.make_word({{0, x1}, {1, y1}});
                  const ReducedWord b = g.make_word({{2, z1}, {3, w1}});
                  const ReducedWord c = g.make_word({{1, y2}, {2, z2}, {0, x2}});
                  const ReducedWord d = g.make_word({{1, z3.inverse(y1)}, {0, x2}, {3, w2}});
                  const int sx1 = s3_sign(s3, x1);
                  const int sx2 = s3_sign(s3, x2);
                  r.expect(psi(fam, g.multiply(a, b)) == expected(sx1, y1, z1, w1), "psi(w1 w2)");
                  r.expect(psi(fam, g.multiply(a, c)) == expected(sx1 + sx2, y1 + y2, z2, 0), "psi(w1 w3)");
                  r.expect(psi(fam, g.multiply(a, d)) == expected(sx1 + sx2, 0, 0, w2), "psi(w1 w4)");
                  const ReducedWord comm =
                      g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
                  r.expect(psi(fam, comm).is_zero(), "psi(commutator)");
                  ++four_factor;
                }
              }
            }
          }
        }
      }
    }
  }
  // Sampled commutators in the group free product.
  std::mt19937_64 grng(99);
  std::uniform_int_distribution<std::size_t> pick_len(0, 4);
  for (int i = 0; i < 300; ++i) {
    const auto sample = [&] {
      std::vector<Letter> ls;
      const std::size_t len = pick_len(grng);
      for (std::size_t k = 0; k < len; ++k) {
        const std::size_t f = grng() % 4;
        ls.push_back({f, static_cast<Element>(grng() % g.group(f).size())});
      }
      return g.reduce(ls);
    };
    const ReducedWord a = sample();
    const ReducedWord b = sample();
    r.expect(psi(fam, g.multiply(g.multiply(a, b), g.inverse(g.multiply(b, a)))).is_zero(), "sampled commutator");
    ++commutators;
  }
  r.expect(pairs >= 1000, "too few pairs");
  r.expect(commutators >= 200, "too few commutators");
  if (r.ok) {
    r.detail = std::to_string(pairs) + " pairs, " + std::to_string(commutators) + " commutators, " + std::to_string(unique_checks) + " inverse searches, " +
               std::to_string(four_factor) + " four-factor words";
  }
  return r;
}

// 10. Reversibility in free products of polygroups.
Result ac10() {
  Result r;
  const std::vector<std::vector<HyperTable>> registries{
      {fixture("h9"), fixture("v4")},
      {fixture("h9"), fixture("s3")},
      {fixture("h9"), fixture("v4"), fixture("s3")},
      {corpus::krasner(), corpus::sign_hyperfield(), fixture("z3")}};
  std::uint64_t seed = 17;
  for (const auto& tables : registries) {
    const FactorRegistry reg(tables);
    const ClosureReport c = polygroup_closure_check(reg, 4, 500, seed++);
    r.expect(c.triples >= 500, "triples");
    r.expect(c.holds(), std::to_string(c.failures) + " failures");
  }
  return r;
}

// 11. Determinism and lossless round trips.
Result ac11() {
  Result r;
  const std::vector<std::vector<std::string>> commands{
      {"check", "h9"},
      {"beta", "h9"},
      {"gamma", "s3", "--oracle"},
      {"heart", "h9"},
      {"derived", "h9"},
      {"subs", "h9", "--normal"},
      {"quotient", "h9", "--sub", "e,a"},
      {"product", "h9", "z2"},
      {"sr-enum", "v4"},
      {"freeprod", "--factors", "h9,s3", "eval", "x@0 s@1 * s@1 y@0"},
      {"freeprod", "--factors", "h9,s3", "psi", "x@0 s@1 z@0"},
      {"freeprod", "--factors", "h9,v4,s3", "closure", "--samples", "200"},
      {"freeprod", "--factors", "h9,s3", "conjecture", "--subs", "e,a;e"},
      {"fixture"},
      {"fixture", "h9", "--format", "json"}};
  for (const auto& cmd : commands) {
    for (bool as_json : {false, true}) {
      std::vector<std::string> args = cmd;
      if (as_json) args.insert(args.begin(), "--json");
      args.insert(args.begin(), {"--seed", "5"});
      int c1 = 0;
      int c2 = 0;
      const std::string a = run_cli(args, &c1);
      const std::string b = run_cli(args, &c2);
      std::string tag;
      for (const std::string& s : args) tag += s + " ";
      r.expect(c1 == cli::kExitOk, "exit " + tag);
      r.expect(a == b && c1 == c2, "output " + tag);
    }
  }
  for (const std::string& name : fixture_names()) {
    const std::string text = run_cli({"fixture", name});
    const HypDocument doc = parse_hyp(text);
    r.expect(doc.table == fixture(name), "parse " + name);
    r.expect(emit_hyp(doc.table, doc.name) == text, "emit " + name);
    const HypDocument js = parse_hyp_json(emit_hyp_json(doc.table, doc.name));
    r.expect(js.table == doc.table && js.name == doc.name, "json " + name);
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"AC1 beta of h9", ac1},
      {"AC2 coset quotient h9/{e,a}", ac2},
      {"AC3 gamma matches brute force", ac3},
      {"AC4 heart and derived routes agree", ac4},
      {"AC5 group quotients by closed subhypergroups", ac5},
      {"AC6 quotient correspondence", ac6},
      {"AC7 strongly regular count", ac7},
      {"AC8 direct product identities", ac8},
      {"AC9 free product arithmetic", ac9},
      {"AC10 polygroup closure", ac10},
      {"AC11 determinism and round trips", ac11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += r.ok ? 0 : 1;
    std::printf("%s %s (%zu checks, %.1fs)%s%s\n", r.ok ? "PASS" : "FAIL", name.c_str(), r.checks, secs,
                r.detail.empty() ? "" : ": ", r.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
