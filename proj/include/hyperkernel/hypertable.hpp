#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperkernel/element_set.hpp"
#include "hyperkernel/group.hpp"

namespace hyperkernel {

/// Finite hypergroupoid given by its Cayley table: cell(a, b) is the
/// nonempty set a∘b. Immutable after construction.
class HyperTable {
 public:
  HyperTable() = default;
  /// `cells` is row-major n*n. Throws DuplicateLabel, EmptyCell,
  /// InvalidTable or SizeExceeded.
  HyperTable(std::vector<std::string> names, std::vector<ElementSet> cells);

  std::size_t size() const { return names_.size(); }
  ElementSet carrier() const { return ElementSet::full(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element x) const { return names_[x]; }
  std::optional<Element> find(std::string_view label) const;

  ElementSet cell(Element a, Element b) const { return cells_[a * size() + b]; }
  const std::vector<ElementSet>& cells() const { return cells_; }

  bool operator==(const HyperTable&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<ElementSet> cells_;
};

/// Outcome of a quantified predicate. A failed verdict carries the
/// lexicographically least failing witness.
struct Witness {
  std::string reason;
  std::vector<Element> elements;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
  static Verdict pass() { return {}; }
  static Verdict failure(std::string reason, std::vector<Element> elements = {}) {
    return {false, Witness{std::move(reason), std::move(elements)}};
  }
};

// Set algebra.

/// A∘B. Throws EmptyOperand when either operand is empty.
ElementSet hyperproduct(const HyperTable& h, ElementSet a, ElementSet b);
/// b/c = {w : b ∈ w∘c}.
ElementSet right_division(const HyperTable& h, Element b, Element c);
/// c\b = {w : b ∈ c∘w}.
ElementSet left_division(const HyperTable& h, Element b, Element c);

// Axioms.

Verdict is_semihypergroup(const HyperTable& h);
Verdict is_quasihypergroup(const HyperTable& h);
Verdict is_hypergroup(const HyperTable& h);
Verdict is_commutative(const HyperTable& h);

/// E_H: elements e with x ∈ e∘x ∩ x∘e for every x.
ElementSet identities(const HyperTable& h);

struct InverseCandidates {
  ElementSet left;   // C_L(x) = {y : E_H ∩ y∘x ≠ ∅}
  ElementSet right;  // C_R(x) = {y : E_H ∩ x∘y ≠ ∅}
  ElementSet both;   // C(x) = C_L(x) ∩ C_R(x)
};
InverseCandidates inverse_candidates(const HyperTable& h, Element x);

/// Both throw NotAHypergroup on a non-hypergroup.
Verdict is_regular_hg(const HyperTable& h);
Verdict is_strongly_regular_hg(const HyperTable& h);

/// Hypergroup with a scalar identity (e∘x = x∘e = {x}), unique inverses and
/// reversibility: x ∈ y∘z implies z ∈ y⁻¹∘x and y ∈ x∘z⁻¹.
Verdict is_polygroup(const HyperTable& h);
/// Commutative polygroup.
Verdict is_canonical(const HyperTable& h);

/// Scalar identity and inverse map of a polygroup-like structure, when both
/// exist and inverses are unique.
struct ScalarInverses {
  Element identity;
  std::vector<Element> inverse;
};
std::optional<ScalarInverses> scalar_inverses(const HyperTable& h);

// Subsets.

/// k∘K = K∘k = K for every k ∈ K (K nonempty).
Verdict is_subhypergroup(const HyperTable& h, ElementSet k);
/// For a, b ∈ K and x ∈ H: b ∈ a∘x or b ∈ x∘a implies x ∈ K.
Verdict is_closed(const HyperTable& h, ElementSet k);
/// x∘K = K∘x for every x.
Verdict is_normal(const HyperTable& h, ElementSet k);
/// Closed on both sides, and every x has x', x'' with x'∘x ⊆ K and x∘x'' ⊆ K.
Verdict is_conjugable(const HyperTable& h, ElementSet k);

struct StructureReport {
  Verdict semihypergroup;
  Verdict quasihypergroup;
  Verdict hypergroup;
  Verdict commutative;
  Verdict canonical;
  Verdict regular_hg;
  Verdict strongly_regular_hg;
  Verdict polygroup;
  ElementSet identities;
};
StructureReport structure_report(const HyperTable& h);

// Constructions.

HyperTable from_group(const GroupTable& g);
/// T_n: every cell is the whole carrier. Elements are named t0, t1, ...
HyperTable total_hypergroup(std::size_t n);
/// Componentwise product on carrier index i1 * n2 + i2; names "(a,b)".
HyperTable direct_product(const HyperTable& h1, const HyperTable& h2);

/// Labels of a set's members in index order, joined as "{a,b}".
std::string format_set(const HyperTable& h, ElementSet s);

}  // namespace hyperkernel
