#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "hyperkernel/error.hpp"
#include "hyperkernel/fixtures.hpp"
#include "hyperkernel/freeprod.hpp"
#include "oracles.hpp"

using namespace hyperkernel;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

oracle::Word to_oracle(const ReducedWord& w) {
  oracle::Word out;
  for (const Letter& l : w.letters) out.emplace_back(static_cast<int>(l.factor), static_cast<int>(l.elem));
  return out;
}

std::set<oracle::Word> to_oracle(const WordSet& ws) {
  std::set<oracle::Word> out;
  for (const ReducedWord& w : ws) out.insert(to_oracle(w));
  return out;
}

}  // namespace

TEST(Registry, RejectsNonStronglyRegular) {
  EXPECT_EQ(kind_of([] { FactorRegistry({total_hypergroup(2)}); }), ErrorKind::NotStronglyRegular);
  const FactorRegistry reg({fixture("h9"), fixture("z3")});
  EXPECT_EQ(reg.size(), 2U);
  EXPECT_TRUE(isomorphic(reg.factor(0).quotient, klein_four_group()));
  EXPECT_TRUE(reg.all_polygroups());
  EXPECT_FALSE(FactorRegistry({corpus::lopsided2()}).all_polygroups());
}

TEST(Words, MakeWordErrors) {
  const FactorRegistry reg({fixture("z3"), fixture("z2")});
  EXPECT_EQ(kind_of([&] { make_word(reg, {{2, 1}}); }), ErrorKind::InvalidLetter);
  EXPECT_EQ(kind_of([&] { make_word(reg, {{1, 5}}); }), ErrorKind::InvalidLetter);
  EXPECT_EQ(kind_of([&] { make_word(reg, {{0, 0}}); }), ErrorKind::IdentityLetter);
  EXPECT_EQ(kind_of([&] { make_word(reg, {{0, 1}, {0, 2}}); }), ErrorKind::AdjacentSameFactor);
  const ReducedWord w = make_word(reg, {{0, 1}, {1, 1}, {0, 2}});
  EXPECT_EQ(w.size(), 3U);
  EXPECT_EQ(support(w).size(), 3U);
  EXPECT_TRUE(embed(reg, 0, 0).empty());
}

TEST(Words, OrderIsLengthThenFactorsThenElements) {
  const FactorRegistry reg({fixture("z3"), fixture("z3")});
  const ReducedWord a = make_word(reg, {{1, 1}});
  const ReducedWord b = make_word(reg, {{0, 2}, {1, 1}});
  const ReducedWord c = make_word(reg, {{1, 1}, {0, 1}});
  const ReducedWord d = make_word(reg, {{0, 1}, {1, 2}});
  EXPECT_LT(ReducedWord{}, a);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_LT(d, b);
}

TEST(Words, CountsAndEnumeration) {
  const FactorRegistry reg({fixture("z3"), fixture("z3")});
  // 1 + 4 + 2*2*2.
  EXPECT_EQ(count_words(reg, 2), 13U);
  const std::vector<ReducedWord> ws = enumerate_words(reg, 2);
  EXPECT_EQ(ws.size(), 13U);
  EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
  EXPECT_EQ(kind_of([&] { enumerate_words(reg, 6, 100); }), ErrorKind::BudgetExceeded);

  const FactorRegistry h(std::vector<HyperTable>{fixture("h9"), fixture("s3")});
  // Alternating words: nonidentity counts 8 and 5.
  std::uint64_t expected = 1;
  std::uint64_t ending0 = 8;
  std::uint64_t ending1 = 5;
  for (int len = 1; len <= 3; ++len) {
    expected += ending0 + ending1;
    const std::uint64_t next0 = ending1 * 8;
    ending1 = ending0 * 5;
    ending0 = next0;
  }
  EXPECT_EQ(count_words(h, 3), expected);
}

TEST(Multiply, AgreesWithOracle) {
  const std::vector<std::vector<HyperTable>> families{
      {fixture("h9"), fixture("z3")}, {fixture("s3"), corpus::krasner()}, {corpus::sign_hyperfield(), fixture("v4")}};
  for (const auto& tables : families) {
    const FactorRegistry reg(tables);
    const oracle::FreeFactors f = oracle::free_factors(tables);
    const std::vector<ReducedWord> ws = enumerate_words(reg, 2);
    for (std::size_t i = 0; i < ws.size(); i += 3) {
      for (std::size_t j = 0; j < ws.size(); j += 5) {
        EXPECT_EQ(to_oracle(multiply(reg, ws[i], ws[j])), oracle::multiply(f, to_oracle(ws[i]), to_oracle(ws[j])));
      }
    }
  }
}

TEST(Multiply, ExampleAndAssociativity) {
  const FactorRegistry reg({fixture("h9"), fixture("z3")});
  const WordSet xx = multiply(reg, parse_word(reg, "x@0"), parse_word(reg, "x@0"));
  EXPECT_EQ(xx, (WordSet{parse_word(reg, "b@0"), parse_word(reg, "c@0")}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const WordSet a{random_word(reg, 3, rng)};
    const WordSet b{random_word(reg, 3, rng)};
    const WordSet c{random_word(reg, 3, rng)};
    EXPECT_EQ(multiply(reg, multiply(reg, a, b), c), multiply(reg, a, multiply(reg, b, c)));
  }
}

TEST(Multiply, InversesAreUnique) {
  const FactorRegistry reg({fixture("h9"), fixture("s3")});
  const std::vector<ReducedWord> ws = enumerate_words(reg, 2);
  for (std::size_t i = 0; i < ws.size(); i += 4) EXPECT_TRUE(word_inverse_unique(reg, ws[i], 2));
  for (const ReducedWord& w : ws) {
    EXPECT_TRUE(multiply(reg, w, inverse_word(reg, w)).contains(ReducedWord{}));
    EXPECT_EQ(inverse_word(reg, inverse_word(reg, w)), w);
  }
}

TEST(GroupFreeProduct, ReduceCascades) {
  const GroupFreeProduct g({cyclic_group(3), cyclic_group(2)});
  EXPECT_TRUE(g.reduce({{0, 1}, {1, 1}, {1, 1}, {0, 2}}).empty());
  EXPECT_EQ(g.reduce({{0, 1}, {0, 1}, {1, 0}}), g.make_word({{0, 2}}));
  const ReducedWord w = g.make_word({{0, 1}, {1, 1}});
  EXPECT_TRUE(g.multiply(w, g.inverse(w)).empty());
  EXPECT_EQ(format_group_word(g, w), "1@0 1@1");
}

TEST(Homomorphisms, PhiAndPsiOnSamples) {
  const FactorRegistry reg({fixture("h9"), fixture("s3")});
  const GroupFreeProduct target(reg.quotient_groups());
  const AbelianizedFamily fam(reg.quotient_groups());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const ReducedWord a = random_word(reg, 4, rng);
    const ReducedWord b = random_word(reg, 4, rng);
    for (const ReducedWord& c : multiply(reg, a, b)) {
      EXPECT_EQ(phi(reg, target, c), target.multiply(phi(reg, target, a), phi(reg, target, b)));
    }
    const ReducedWord pa = phi(reg, target, a);
    const ReducedWord pb = phi(reg, target, b);
    EXPECT_EQ(psi(fam, target.multiply(pa, pb)), direct_sum_add(fam, psi(fam, pa), psi(fam, pb)));
    const ReducedWord comm = target.multiply(target.multiply(pa, pb), target.inverse(target.multiply(pb, pa)));
    EXPECT_TRUE(psi(fam, comm).is_zero());
  }
}

TEST(Closure, PolygroupsPassAndOthersAreRejected) {
  const FactorRegistry reg({fixture("h9"), corpus::krasner(), fixture("s3")});
  const ClosureReport r = polygroup_closure_check(reg, 3, 300, 5);
  EXPECT_GE(r.triples, 300U);
  EXPECT_TRUE(r.holds());
  const FactorRegistry lop({corpus::lopsided2(), fixture("z2")});
  EXPECT_EQ(kind_of([&] { polygroup_closure_check(lop, 2, 10, 1); }), ErrorKind::FactorsNotPolygroups);
}

TEST(Text, ParseAndFormat) {
  const FactorRegistry reg({fixture("h9"), fixture("z3")});
  const ReducedWord w = parse_word(reg, "x@0 2@1 a@0");
  EXPECT_EQ(format_word(reg, w), "x@0 2@1 a@0");
  EXPECT_TRUE(parse_word(reg, "1").empty());
  EXPECT_EQ(format_word(reg, ReducedWord{}), "1");
  EXPECT_EQ(kind_of([&] { parse_word(reg, "x@7"); }), ErrorKind::InvalidLetter);
  EXPECT_EQ(kind_of([&] { parse_word(reg, "q@0"); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([&] { parse_word(reg, "x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { parse_word(reg, "x@0 y@0"); }), ErrorKind::AdjacentSameFactor);
}
