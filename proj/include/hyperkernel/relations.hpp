#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperkernel/group.hpp"
#include "hyperkernel/hypertable.hpp"
#include "hyperkernel/partition.hpp"

namespace hyperkernel {

inline constexpr std::size_t kDefaultCensusCap = 100000;
inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultSrBudget = 30000;
inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 20;

/// Resource caps shared by the exhaustive routines.
struct Limits {
  std::size_t census_cap = kDefaultCensusCap;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::uint64_t sr_budget = kDefaultSrBudget;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
};

enum class CapPolicy { kThrow, kTruncate };

/// Every distinct product x1∘...∘xn with n >= 2, in first-discovery order.
struct ProductCensus {
  std::vector<ElementSet> sets;
  std::size_t cap = kDefaultCensusCap;
  bool complete = true;
};

/// Breadth-first closure of the singletons under right multiplication by
/// each element (in index order). Requires a semihypergroup, where every
/// product equals a left-nested one. Exceeding `cap` distinct sets throws
/// CapExceeded, or with kTruncate returns a census marked incomplete.
ProductCensus product_census(const HyperTable& h, std::size_t cap = kDefaultCensusCap,
                             CapPolicy policy = CapPolicy::kThrow);

/// β*: transitive closure of "lie together in some product".
Partition beta(const HyperTable& h, std::size_t census_cap = kDefaultCensusCap);

/// γ* by brute force: for every tuple of length <= nmax and every
/// permutation, relates all members of the product with all members of
/// the permuted product. Independent of beta(); throws BudgetExceeded when
/// the number of evaluated products would exceed `budget`.
Partition gamma_oracle(const HyperTable& h, std::size_t nmax,
                       std::uint64_t budget = kDefaultOracleBudget);

/// γ* as the pullback of the mod-commutator congruence of H/β through β.
Partition gamma(const HyperTable& h, std::size_t census_cap = kDefaultCensusCap);

Verdict is_regular(const HyperTable& h, const Partition& r);
Verdict is_strongly_regular(const HyperTable& h, const Partition& r);

struct QuotientStructure {
  HyperTable parent;
  Partition relation;
  /// Class-level table; class i is named "[rep]" after its least member.
  HyperTable table;
  bool is_group = false;
  std::optional<GroupTable> group;
};

/// H/R. Throws NotRegular with the least witnessing triple.
QuotientStructure quotient_by(const HyperTable& h, const Partition& r);

/// S_R: the class acting as the identity of the quotient group.
ElementSet kernel_S(const HyperTable& h, const Partition& r);

/// x ≡ y iff x∘K = y∘K. Throws NotASubhypergroup.
Partition congruence_mod(const HyperTable& h, ElementSet k);

/// σ∗ρ: a, b related iff their ρ-classes are σ-related. `sigma` lives on
/// the class ids of `rho`.
Partition pullback(const Partition& sigma, const Partition& rho);

/// Smallest equivalence containing both.
Partition join(const Partition& r1, const Partition& r2);

/// Bell number, saturating at UINT64_MAX.
std::uint64_t bell_number(std::size_t n);

/// All partitions of {0..n-1} in restricted-growth-string order.
std::vector<Partition> enumerate_partitions(std::size_t n, std::uint64_t budget = kDefaultSrBudget);

/// SR(H): every strongly regular equivalence, in restricted-growth order.
std::vector<Partition> enumerate_strongly_regular(const HyperTable& h,
                                                  std::uint64_t budget = kDefaultSrBudget);

}  // namespace hyperkernel
