#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperkernel/element_set.hpp"
#include "hyperkernel/partition.hpp"

namespace hyperkernel {

/// Finite group given by a validated single-valued Cayley table.
class GroupTable {
 public:
  /// Validates associativity, identity and inverses. `table` is row-major
  /// n*n. Throws InvalidGroupTable (shape), NotAssociative, NoIdentity or
  /// NoInverse, naming the lexicographically least witness.
  static GroupTable validate(std::vector<std::string> names, std::vector<Element> table);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element g) const { return names_[g]; }
  const std::vector<Element>& table() const { return table_; }

  Element mul(Element a, Element b) const { return table_[a * size() + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element identity() const { return identity_; }
  std::size_t order_of(Element g) const;
  ElementSet carrier() const { return ElementSet::full(size()); }

  bool operator==(const GroupTable&) const = default;

 private:
  GroupTable() = default;

  std::vector<std::string> names_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

inline GroupTable validate_group(std::vector<std::string> names, std::vector<Element> table) {
  return GroupTable::validate(std::move(names), std::move(table));
}

GroupTable cyclic_group(std::size_t n);
GroupTable klein_four_group();
GroupTable symmetric_group_3();
/// Row-major pairing (g1, g2) -> g1 * |G2| + g2.
GroupTable group_direct_product(const GroupTable& g1, const GroupTable& g2);

bool is_abelian(const GroupTable& g);
ElementSet subgroup_generated(const GroupTable& g, ElementSet generators);
ElementSet commutator_subgroup(const GroupTable& g);
bool is_subgroup(const GroupTable& g, ElementSet s);
bool is_normal_subgroup(const GroupTable& g, ElementSet n);

/// Left cosets gN. Throws NotNormal unless N is a normal subgroup.
Partition cosets(const GroupTable& g, ElementSet n);
/// G/N on canonical coset representatives (least member index); coset i is
/// named after its representative.
GroupTable quotient_group(const GroupTable& g, ElementSet n);
GroupTable abelianization(const GroupTable& g);

inline constexpr std::size_t kIsomorphismSizeLimit = 16;

/// A bijection f with f(ab) = f(a)f(b), when one exists. Throws SizeExceeded
/// when the common order exceeds `size_limit`.
std::optional<std::vector<Element>> find_isomorphism(const GroupTable& g1, const GroupTable& g2,
                                                     std::size_t size_limit = kIsomorphismSizeLimit);
bool isomorphic(const GroupTable& g1, const GroupTable& g2,
                std::size_t size_limit = kIsomorphismSizeLimit);

/// Family of groups together with their abelianizations, the target of the
/// direct sum of the G_i/G_i'.
class AbelianizedFamily {
 public:
  explicit AbelianizedFamily(std::vector<GroupTable> groups);

  std::size_t size() const { return groups_.size(); }
  const GroupTable& group(std::size_t i) const { return groups_[i]; }
  const GroupTable& abelianization(std::size_t i) const { return abelian_[i]; }
  /// Coset gG_i' as an element of abelianization(i).
  Element project(std::size_t i, Element g) const { return projection_[i][g]; }

 private:
  std::vector<GroupTable> groups_;
  std::vector<GroupTable> abelian_;
  std::vector<std::vector<Element>> projection_;
};

/// Finitely supported element of the direct sum of the G_i/G_i'. Only
/// non-identity cosets are stored.
struct DirectSumElement {
  std::map<std::size_t, Element> support;

  bool is_zero() const { return support.empty(); }
  bool operator==(const DirectSumElement&) const = default;
  auto operator<=>(const DirectSumElement&) const = default;
};

/// t_i(g): the element supported only at factor i, with component gG_i'.
DirectSumElement direct_sum_embed(const AbelianizedFamily& family, std::size_t i, Element g);
DirectSumElement direct_sum_add(const AbelianizedFamily& family, const DirectSumElement& a,
                                const DirectSumElement& b);
DirectSumElement direct_sum_negate(const AbelianizedFamily& family, const DirectSumElement& a);

}  // namespace hyperkernel
