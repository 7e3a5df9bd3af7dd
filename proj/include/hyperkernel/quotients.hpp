#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperkernel/group.hpp"
#include "hyperkernel/hypertable.hpp"
#include "hyperkernel/partition.hpp"
#include "hyperkernel/relations.hpp"

namespace hyperkernel {

/// C meets a product only if it swallows it. Throws CensusIncomplete on a
/// truncated census.
bool is_complete_part(const HyperTable& h, ElementSet c, const ProductCensus& census);

/// Every subhypergroup, ascending by bitmask. Throws BudgetExceeded when
/// 2^n exceeds `subset_budget`.
std::vector<ElementSet> enumerate_subhypergroups(const HyperTable& h,
                                                 std::uint64_t subset_budget = kDefaultSubsetBudget);

struct SubhypergroupEntry {
  ElementSet set;
  bool closed = false;
  bool normal = false;
  bool complete_part = false;
  bool conjugable = false;
  bool contains_s_beta = false;
  bool contains_s_gamma = false;
};

struct SubLattice {
  std::vector<SubhypergroupEntry> all;
  ElementSet s_beta;
  ElementSet s_gamma;
};

/// Subhypergroups of a hypergroup with every flag evaluated.
SubLattice subhypergroups(const HyperTable& h, const Limits& limits = {});

/// Intersection of all complete-part subhypergroups.
ElementSet heart_by_complete_parts(const HyperTable& h, const Limits& limits = {});
/// The heart, cross-checked against kernel_S(h, beta(h)); a disagreement
/// throws InconsistentHeart.
ElementSet heart(const HyperTable& h, const Limits& limits = {});

/// D = D1 ∪ D2 with D1 the divisions z/w = {t : z ∈ t∘w} and D2 the
/// divisions z\w = {t : w ∈ z∘t}, over z ∈ x∘y, w ∈ y∘x for all x, y.
ElementSet derived_generators(const HyperTable& h);
/// Intersection of the complete-part subhypergroups containing D.
ElementSet derived_by_complete_parts(const HyperTable& h, const Limits& limits = {});
/// H', cross-checked against kernel_S(h, gamma(h)); a disagreement throws
/// InconsistentDerived.
ElementSet derived(const HyperTable& h, const Limits& limits = {});

/// H/K = {x∘K}. Coset i has the least generating element as representative
/// and is labelled "K" or "r∘K".
struct CosetQuotient {
  HyperTable table;
  std::vector<ElementSet> cosets;
  std::vector<Element> representatives;
  /// x ≡ y iff x∘K = y∘K; class ids coincide with coset indices.
  Partition congruence;

  std::size_t coset_of(Element x) const { return congruence.class_of(x); }
  /// {t∘K : t ∈ s} as coset indices.
  ElementSet cosets_met(ElementSet s) const { return congruence.classes_met(s); }
};

/// Throws NotASubhypergroup, NotNormal, or NotRegular when the coset
/// product depends on representatives.
CosetQuotient quotient_hypergroup(const HyperTable& h, ElementSet k);

/// The quotient table as a group, when it is single valued and one.
std::optional<GroupTable> as_group(const HyperTable& table);

/// Whether H/K is a group, for a closed subhypergroup K (NotClosed
/// otherwise). Non-normal K has no coset quotient and yields false.
bool check_group_quotient(const HyperTable& h, ElementSet k);
/// Whether H/K is an abelian group, for a closed subhypergroup K.
bool check_abelian_quotient(const HyperTable& h, ElementSet k);

struct RelationCorrespondence {
  std::string relation;       // "beta" or "gamma"
  ElementSet kernel;          // S_ρ
  ElementSet kernel_times_k;  // S_ρ∘K
  ElementSet quotient_kernel; // S of the relation recomputed on H/K (coset indices)
  ElementSet lifted_kernel;   // (S_ρ∘K)/K (coset indices)
  bool kernel_identity = false;       // quotient_kernel == lifted_kernel
  bool quotient_isomorphism = false;  // ρ(H/K) ≅ H/(S_ρ∘K)
  bool pullback_equals_join = false;  // 𝛒∗σ == ρ∨σ
  bool join_equals_lift = false;      // ρ∨σ == σ′∗ρ
  std::string detail;

  bool holds() const {
    return kernel_identity && quotient_isomorphism && pullback_equals_join && join_equals_lift;
  }
};

struct CorrespondenceReport {
  CosetQuotient quotient;
  std::vector<RelationCorrespondence> relations;
  /// |SR(H/K)| against |{ρ∨σ : ρ ∈ SR(H)}|, when both enumerations fit the budget.
  std::optional<std::size_t> sr_quotient_count;
  std::optional<std::size_t> sr_joined_count;

  bool holds() const;
};

/// Evaluates both sides of the quotient correspondence identities for
/// ρ ∈ {β, γ} on a canonical H and a canonical subhypergroup K (one
/// containing the identity). Throws NotCanonical otherwise.
CorrespondenceReport correspondence_check(const HyperTable& h, ElementSet k, const Limits& limits = {});

struct ProductReport {
  HyperTable product;
  ElementSet heart_of_product;  // S_β(H1×H2)
  ElementSet paired_hearts;     // S_β(H1)×S_β(H2) under row-major pairing
  ElementSet derived_of_product; // S_γ(H1×H2)
  ElementSet paired_derived;     // S_γ(H1)×S_γ(H2)
  bool heart_identity = false;
  bool derived_identity = false;
  bool gamma_isomorphism = false;  // γ(H1×H2) ≅ γ(H1)×γ(H2)
  std::optional<bool> beta_isomorphism;  // evaluated when the groups are small enough

  bool holds() const {
    return heart_identity && derived_identity && gamma_isomorphism && beta_isomorphism.value_or(true);
  }
};

/// Both sides of the direct-product identities for β and γ.
ProductReport product_identities_check(const HyperTable& h1, const HyperTable& h2,
                                       const Limits& limits = {});

}  // namespace hyperkernel
