#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperkernel/element_set.hpp"

namespace hyperkernel {

/// Equivalence relation on {0, ..., n-1} in canonical form: class ids are
/// assigned in order of least member, so two equal relations compare equal.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes arbitrary labels; labels[x] names the class of x.
  static Partition from_labels(std::span<const std::size_t> labels);
  /// Throws ShapeMismatch unless the classes are nonempty, disjoint and cover {0..n-1}.
  static Partition from_classes(std::size_t n, std::span<const ElementSet> classes);
  static Partition discrete(std::size_t n);
  static Partition full(std::size_t n);

  std::size_t size() const { return class_of_.size(); }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t class_of(Element x) const { return class_of_[x]; }
  ElementSet class_members(std::size_t id) const { return classes_[id]; }
  /// The class containing x.
  ElementSet block(Element x) const { return classes_[class_of_[x]]; }
  const std::vector<ElementSet>& classes() const { return classes_; }
  const std::vector<std::size_t>& labels() const { return class_of_; }

  bool same(Element a, Element b) const { return class_of_[a] == class_of_[b]; }
  /// Set of class ids met by `s`.
  ElementSet classes_met(ElementSet s) const;

  /// True when every pair related here is related in `coarser`.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::size_t> class_of_;
  std::vector<ElementSet> classes_;
};

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  /// Merges every member of `s` into one block.
  void unite_all(ElementSet s);

  Partition to_partition();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace hyperkernel
