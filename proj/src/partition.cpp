#include "hyperkernel/partition.hpp"

#include <numeric>
#include <string>

#include "hyperkernel/error.hpp"

namespace hyperkernel {

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  if (labels.size() > kMaxCarrier) {
    fail(ErrorKind::SizeExceeded, "partition carrier " + std::to_string(labels.size()) + " exceeds " +
                                      std::to_string(kMaxCarrier));
  }
  Partition p;
  p.class_of_.resize(labels.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // label -> canonical id
  for (std::size_t x = 0; x < labels.size(); ++x) {
    std::size_t id = seen.size();
    for (const auto& [label, canon] : seen) {
      if (label == labels[x]) {
        id = canon;
        break;
      }
    }
    if (id == seen.size()) {
      seen.emplace_back(labels[x], id);
      p.classes_.emplace_back();
    }
    p.class_of_[x] = id;
    p.classes_[id].insert(static_cast<Element>(x));
  }
  return p;
}

Partition Partition::from_classes(std::size_t n, std::span<const ElementSet> classes) {
  std::vector<std::size_t> labels(n, n);
  const ElementSet carrier = ElementSet::full(n);
  for (std::size_t id = 0; id < classes.size(); ++id) {
    if (classes[id].empty()) fail(ErrorKind::ShapeMismatch, "empty class in partition");
    if (!classes[id].is_subset_of(carrier)) fail(ErrorKind::ShapeMismatch, "class member outside carrier");
    for (Element x : classes[id]) {
      if (labels[x] != n) fail(ErrorKind::ShapeMismatch, "classes overlap at element " + std::to_string(x));
      labels[x] = id;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (labels[x] == n) fail(ErrorKind::ShapeMismatch, "element " + std::to_string(x) + " not covered");
  }
  return from_labels(labels);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

Partition Partition::full(std::size_t n) { return from_labels(std::vector<std::size_t>(n, 0)); }

ElementSet Partition::classes_met(ElementSet s) const {
  ElementSet ids;
  for (Element x : s) ids.insert(static_cast<Element>(class_of_[x]));
  return ids;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  for (const ElementSet& c : classes_) {
    if (coarser.classes_met(c).size() != 1) return false;
  }
  return true;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

void UnionFind::unite_all(ElementSet s) {
  if (s.empty()) return;
  const Element head = s.first();
  for (Element x : s) unite(head, x);
}

Partition UnionFind::to_partition() {
  std::vector<std::size_t> labels(parent_.size());
  for (std::size_t x = 0; x < parent_.size(); ++x) labels[x] = find(x);
  return Partition::from_labels(labels);
}

}  // namespace hyperkernel
