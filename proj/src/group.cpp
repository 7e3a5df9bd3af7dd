#include "hyperkernel/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <string>

#include "hyperkernel/error.hpp"

namespace hyperkernel {

namespace {

std::string triple(const std::vector<std::string>& names, Element a, Element b, Element c) {
  return "(" + names[a] + ", " + names[b] + ", " + names[c] + ")";
}

}  // namespace

GroupTable GroupTable::validate(std::vector<std::string> names, std::vector<Element> table) {
  const std::size_t n = names.size();
  if (n == 0) fail(ErrorKind::InvalidGroupTable, "empty carrier");
  if (n > kMaxCarrier) {
    fail(ErrorKind::SizeExceeded, "group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxCarrier));
  }
  if (table.size() != n * n) {
    fail(ErrorKind::InvalidGroupTable, "table has " + std::to_string(table.size()) + " cells, expected " +
                                           std::to_string(n * n));
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != n) {
    fail(ErrorKind::InvalidGroupTable, "duplicate element names");
  }
  for (Element v : table) {
    if (v >= n) fail(ErrorKind::InvalidGroupTable, "entry " + std::to_string(v) + " outside carrier");
  }
  auto at = [&](Element a, Element b) { return table[a * n + b]; };
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) fail(ErrorKind::NotAssociative, triple(names, a, b, c));
      }
    }
  }
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) fail(ErrorKind::NoIdentity, "no two-sided identity");
  std::vector<Element> inverse(n);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (at(a, b) == *identity && at(b, a) == *identity) {
        inverse[a] = b;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::NoInverse, "element " + names[a] + " has no inverse");
  }
  GroupTable g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.identity_ = *identity;
  g.inverse_ = std::move(inverse);
  return g;
}

std::size_t GroupTable::order_of(Element g) const {
  std::size_t k = 1;
  for (Element p = g; p != identity_; p = mul(p, g)) ++k;
  return k;
}

GroupTable cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return GroupTable::validate(std::move(names), std::move(table));
}

GroupTable klein_four_group() {
  // e, p, q, r with every non-identity element an involution: index xor.
  std::vector<Element> table(16);
  for (Element i = 0; i < 4; ++i) {
    for (Element j = 0; j < 4; ++j) table[i * 4 + j] = i ^ j;
  }
  return GroupTable::validate({"e", "p", "q", "r"}, std::move(table));
}

GroupTable symmetric_group_3() {
  // Permutations of {0,1,2} in one-line notation, composed as (ab)(i) = a(b(i)).
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                                 {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "s", "t", "w", "r", "q"};
  std::vector<Element> table(36);
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a * 6 + b] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable::validate(names, std::move(table));
}

GroupTable group_direct_product(const GroupTable& g1, const GroupTable& g2) {
  const std::size_t n1 = g1.size();
  const std::size_t n2 = g2.size();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) names.push_back("(" + g1.names()[a] + "," + g2.names()[b] + ")");
  }
  std::vector<Element> table(n1 * n2 * n1 * n2);
  for (Element x = 0; x < n1 * n2; ++x) {
    for (Element y = 0; y < n1 * n2; ++y) {
      const Element a = g1.mul(static_cast<Element>(x / n2), static_cast<Element>(y / n2));
      const Element b = g2.mul(static_cast<Element>(x % n2), static_cast<Element>(y % n2));
      table[x * n1 * n2 + y] = static_cast<Element>(a * n2 + b);
    }
  }
  return GroupTable::validate(std::move(names), std::move(table));
}

bool is_abelian(const GroupTable& g) {
  for (Element a = 0; a < g.size(); ++a) {
    for (Element b = a + 1; b < g.size(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

ElementSet subgroup_generated(const GroupTable& g, ElementSet generators) {
  ElementSet closure = ElementSet::singleton(g.identity()) | generators;
  for (Element s : generators) closure.insert(g.inverse(s));
  // In a finite group closure under products already yields inverses.
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element a : closure) {
      for (Element b : closure) {
        const Element c = g.mul(a, b);
        if (!closure.contains(c)) {
          closure.insert(c);
          grew = true;
        }
      }
    }
  }
  return closure;
}

ElementSet commutator_subgroup(const GroupTable& g) {
  ElementSet commutators;
  for (Element a = 0; a < g.size(); ++a) {
    for (Element b = 0; b < g.size(); ++b) {
      commutators.insert(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
    }
  }
  return subgroup_generated(g, commutators);
}

bool is_subgroup(const GroupTable& g, ElementSet s) {
  if (!s.contains(g.identity()) || !s.is_subset_of(g.carrier())) return false;
  for (Element a : s) {
    if (!s.contains(g.inverse(a))) return false;
    for (Element b : s) {
      if (!s.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const GroupTable& g, ElementSet n) {
  if (!is_subgroup(g, n)) return false;
  for (Element x = 0; x < g.size(); ++x) {
    for (Element k : n) {
      if (!n.contains(g.mul(g.mul(x, k), g.inverse(x)))) return false;
    }
  }
  return true;
}

Partition cosets(const GroupTable& g, ElementSet n) {
  if (!is_normal_subgroup(g, n)) fail(ErrorKind::NotNormal, "subset is not a normal subgroup");
  std::vector<std::size_t> labels(g.size());
  for (Element x = 0; x < g.size(); ++x) {
    ElementSet coset;
    for (Element k : n) coset.insert(g.mul(x, k));
    labels[x] = coset.first();
  }
  return Partition::from_labels(labels);
}

GroupTable quotient_group(const GroupTable& g, ElementSet n) {
  const Partition p = cosets(g, n);
  const std::size_t m = p.num_classes();
  std::vector<std::string> names;
  for (const ElementSet& c : p.classes()) names.push_back(g.name(c.first()));
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Element r = g.mul(p.class_members(i).first(), p.class_members(j).first());
      table[i * m + j] = static_cast<Element>(p.class_of(r));
    }
  }
  return GroupTable::validate(std::move(names), std::move(table));
}

GroupTable abelianization(const GroupTable& g) { return quotient_group(g, commutator_subgroup(g)); }

namespace {

std::map<std::size_t, std::size_t> order_profile(const GroupTable& g) {
  std::map<std::size_t, std::size_t> profile;
  for (Element x = 0; x < g.size(); ++x) ++profile[g.order_of(x)];
  return profile;
}

std::vector<Element> generating_set(const GroupTable& g) {
  // Prefer high-order elements so the generating set stays small.
  std::vector<Element> by_order(g.size());
  for (Element x = 0; x < g.size(); ++x) by_order[x] = x;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.order_of(a) > g.order_of(b); });
  std::vector<Element> gens;
  ElementSet span = ElementSet::singleton(g.identity());
  for (Element x : by_order) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    ElementSet s;
    for (Element y : gens) s.insert(y);
    span = subgroup_generated(g, s);
  }
  return gens;
}

// Extends generator images to a map by breadth-first search over the Cayley
// graph; returns nothing if the images are inconsistent or not bijective.
std::optional<std::vector<Element>> extend(const GroupTable& g1, const GroupTable& g2,
                                           const std::vector<Element>& gens,
                                           const std::vector<Element>& images) {
  const std::size_t n = g1.size();
  const Element unset = static_cast<Element>(n);
  std::vector<Element> f(n, unset);
  f[g1.identity()] = g2.identity();
  std::deque<Element> queue{g1.identity()};
  while (!queue.empty()) {
    const Element h = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element x = g1.mul(h, gens[k]);
      const Element image = g2.mul(f[h], images[k]);
      if (f[x] == unset) {
        f[x] = image;
        queue.push_back(x);
      } else if (f[x] != image) {
        return std::nullopt;
      }
    }
  }
  ElementSet hit;
  for (Element x = 0; x < n; ++x) {
    if (f[x] == unset) return std::nullopt;
    hit.insert(f[x]);
  }
  if (hit.size() != n) return std::nullopt;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (f[g1.mul(a, b)] != g2.mul(f[a], f[b])) return std::nullopt;
    }
  }
  return f;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const GroupTable& g1, const GroupTable& g2,
                                                     std::size_t size_limit) {
  if (g1.size() != g2.size()) return std::nullopt;
  if (g1.size() > size_limit) {
    fail(ErrorKind::SizeExceeded, "isomorphism search limited to order " + std::to_string(size_limit));
  }
  if (order_profile(g1) != order_profile(g2)) return std::nullopt;

  const std::vector<Element> gens = generating_set(g1);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t order = g1.order_of(gens[k]);
    for (Element y = 0; y < g2.size(); ++y) {
      if (g2.order_of(y) == order) candidates[k].push_back(y);
    }
  }
  std::vector<Element> images(gens.size());
  std::optional<std::vector<Element>> found;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      found = extend(g1, g2, gens, images);
      return found.has_value();
    }
    for (Element y : candidates[k]) {
      images[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

bool isomorphic(const GroupTable& g1, const GroupTable& g2, std::size_t size_limit) {
  return find_isomorphism(g1, g2, size_limit).has_value();
}

AbelianizedFamily::AbelianizedFamily(std::vector<GroupTable> groups) : groups_(std::move(groups)) {
  for (const GroupTable& g : groups_) {
    const ElementSet derived = commutator_subgroup(g);
    const Partition p = cosets(g, derived);
    abelian_.push_back(quotient_group(g, derived));
    std::vector<Element> proj(g.size());
    for (Element x = 0; x < g.size(); ++x) proj[x] = static_cast<Element>(p.class_of(x));
    projection_.push_back(std::move(proj));
  }
}

namespace {

void check_member(const AbelianizedFamily& family, const DirectSumElement& a) {
  for (const auto& [i, coset] : a.support) {
    if (i >= family.size()) {
      fail(ErrorKind::FamilyMismatch, "factor " + std::to_string(i) + " not in family of " +
                                          std::to_string(family.size()));
    }
    if (coset >= family.abelianization(i).size() || coset == family.abelianization(i).identity()) {
      fail(ErrorKind::FamilyMismatch, "component at factor " + std::to_string(i) + " is not a stored coset");
    }
  }
}

}  // namespace

DirectSumElement direct_sum_embed(const AbelianizedFamily& family, std::size_t i, Element g) {
  if (i >= family.size() || g >= family.group(i).size()) {
    fail(ErrorKind::FamilyMismatch, "letter outside registered family");
  }
  DirectSumElement out;
  const Element coset = family.project(i, g);
  if (coset != family.abelianization(i).identity()) out.support[i] = coset;
  return out;
}

DirectSumElement direct_sum_add(const AbelianizedFamily& family, const DirectSumElement& a,
                                const DirectSumElement& b) {
  check_member(family, a);
  check_member(family, b);
  DirectSumElement out = a;
  for (const auto& [i, coset] : b.support) {
    const GroupTable& q = family.abelianization(i);
    auto it = out.support.find(i);
    const Element sum = it == out.support.end() ? coset : q.mul(it->second, coset);
    if (sum == q.identity()) {
      if (it != out.support.end()) out.support.erase(it);
    } else {
      out.support[i] = sum;
    }
  }
  return out;
}

DirectSumElement direct_sum_negate(const AbelianizedFamily& family, const DirectSumElement& a) {
  check_member(family, a);
  DirectSumElement out;
  for (const auto& [i, coset] : a.support) out.support[i] = family.abelianization(i).inverse(coset);
  return out;
}

}  // namespace hyperkernel
