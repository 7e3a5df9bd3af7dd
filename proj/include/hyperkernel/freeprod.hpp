#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperkernel/group.hpp"
#include "hyperkernel/hypertable.hpp"
#include "hyperkernel/partition.hpp"
#include "hyperkernel/relations.hpp"

namespace hyperkernel {

inline constexpr std::uint64_t kDefaultWordBudget = 1'000'000;

/// Element `elem` of factor `factor`.
struct Letter {
  std::size_t factor = 0;
  Element elem = 0;

  auto operator<=>(const Letter&) const = default;
};

/// Finite letter sequence; the empty sequence is the empty word 1. Ordered
/// by length, then factor indices, then element indices.
struct ReducedWord {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const ReducedWord&) const = default;
  std::strong_ordering operator<=>(const ReducedWord& other) const;
};

using WordSet = std::set<ReducedWord>;

/// One strongly regular factor with everything the word arithmetic needs.
struct Factor {
  HyperTable table;
  Element identity = 0;
  std::vector<Element> inverse;
  Partition beta;
  Partition gamma;
  ElementSet kernel;        // S_i, the identity β-class
  GroupTable quotient;      // H_i/S_i
  std::vector<Element> projection;  // x ↦ its β-class in `quotient`
  bool polygroup = false;
};

class FactorRegistry {
 public:
  /// Throws NotStronglyRegular unless each factor is a strongly regular
  /// hypergroup with a single identity.
  explicit FactorRegistry(std::vector<HyperTable> factors, std::size_t census_cap = kDefaultCensusCap);

  std::size_t size() const { return factors_.size(); }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }
  /// H_i/S_i in factor order.
  std::vector<GroupTable> quotient_groups() const;
  bool all_polygroups() const;

 private:
  std::vector<Factor> factors_;
};

/// Throws InvalidLetter, IdentityLetter or AdjacentSameFactor. Never reduces.
ReducedWord make_word(const FactorRegistry& registry, std::vector<Letter> letters);
ReducedWord inverse_word(const FactorRegistry& registry, const ReducedWord& w);
/// t_i(x): one letter, or 1 when x is the identity of factor i.
ReducedWord embed(const FactorRegistry& registry, std::size_t i, Element x);
std::set<Letter> support(const ReducedWord& w);

/// w1·w2. At a same-factor boundary every x ∈ aₙ∘b₁ contributes: the
/// identity recurses on the shortened words, anything else becomes the
/// middle letter. Throws InvariantViolation if the identity shows up when
/// b₁ ≠ aₙ⁻¹.
WordSet multiply(const FactorRegistry& registry, const ReducedWord& w1, const ReducedWord& w2);
/// Union of u·v over u ∈ a, v ∈ b.
WordSet multiply(const FactorRegistry& registry, const WordSet& a, const WordSet& b);

/// Free product of groups: single-valued multiplication with cascading
/// cancellation.
class GroupFreeProduct {
 public:
  explicit GroupFreeProduct(std::vector<GroupTable> groups);

  std::size_t size() const { return groups_.size(); }
  const GroupTable& group(std::size_t i) const { return groups_.at(i); }

  /// Throws InvalidLetter, IdentityLetter or AdjacentSameFactor.
  ReducedWord make_word(std::vector<Letter> letters) const;
  /// Multiplies arbitrary letters left to right into normal form;
  /// identity letters vanish.
  ReducedWord reduce(const std::vector<Letter>& letters) const;
  ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) const;
  ReducedWord inverse(const ReducedWord& w) const;

 private:
  std::vector<GroupTable> groups_;
};

/// The letterwise projection into the free product of the H_i/S_i.
ReducedWord phi(const FactorRegistry& registry, const GroupFreeProduct& target, const ReducedWord& w);
/// Sum of the abelianized letters. Throws FamilyMismatch.
DirectSumElement psi(const AbelianizedFamily& family, const ReducedWord& w);

/// Every reduced word of length <= max_len in canonical order. Throws
/// BudgetExceeded when there are more than `budget`.
std::vector<ReducedWord> enumerate_words(const FactorRegistry& registry, std::size_t max_len,
                                         std::uint64_t budget = kDefaultWordBudget);
std::uint64_t count_words(const FactorRegistry& registry, std::size_t max_len);

/// Exactly one enumerated v has 1 ∈ w·v ∩ v·w, and it is inverse_word(w).
bool word_inverse_unique(const FactorRegistry& registry, const ReducedWord& w, std::size_t max_len,
                         std::uint64_t budget = kDefaultWordBudget);

/// Uniform length in [0, max_len], then letters avoiding the previous factor.
ReducedWord random_word(const FactorRegistry& registry, std::size_t max_len, std::mt19937_64& rng);

struct ClosureReport {
  std::size_t triples = 0;
  std::size_t failures = 0;
  std::optional<std::vector<ReducedWord>> first_failure;  // w1, w2, w3

  bool holds() const { return failures == 0; }
};

/// Samples w1 ∈ w2·w3 and checks w2 ∈ w1·w3⁻¹ and w3 ∈ w2⁻¹·w1. Throws
/// FactorsNotPolygroups.
ClosureReport polygroup_closure_check(const FactorRegistry& registry, std::size_t max_len, std::size_t samples,
                                      std::uint64_t seed);

/// Bounded-window evidence for ∏*(H_i/K_i) against ∏*H_i modulo ∏*K_i.
/// Nothing here is asserted; callers report the counts.
struct ConjectureEvidence {
  bool applicable = false;
  std::string note;
  std::size_t max_len = 0;
  std::uint64_t quotient_words = 0;  // reduced words over the H_i/K_i
  std::uint64_t images_hit = 0;      // of those, images of words over the H_i
  std::size_t pairs = 0;
  std::size_t homomorphic_pairs = 0;  // π(w1·w2) == π(w1)·π(w2)
};

ConjectureEvidence quotient_conjecture_check(const FactorRegistry& registry, const std::vector<ElementSet>& subs,
                                             std::size_t max_len, std::size_t samples, std::uint64_t seed);

/// `name@factor` letters separated by spaces; "1" is the empty word.
/// Throws ParseError or UnknownLabel, then validates like make_word.
ReducedWord parse_word(const FactorRegistry& registry, const std::string& text);
std::string format_word(const FactorRegistry& registry, const ReducedWord& w);
std::string format_group_word(const GroupFreeProduct& product, const ReducedWord& w);

}  // namespace hyperkernel
