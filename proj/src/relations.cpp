#include "hyperkernel/relations.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "hyperkernel/error.hpp"

namespace hyperkernel {

namespace {

std::string witness_text(const HyperTable& h, const Verdict& v) {
  std::string out = v.witness->reason;
  for (Element x : v.witness->elements) out += " " + h.name(x);
  return out;
}

void require_semihypergroup(const HyperTable& h) {
  const Verdict v = is_semihypergroup(h);
  if (!v) fail(ErrorKind::NotASemihypergroup, witness_text(h, v));
}

}  // namespace

ProductCensus product_census(const HyperTable& h, std::size_t cap, CapPolicy policy) {
  require_semihypergroup(h);
  ProductCensus census;
  census.cap = cap;
  std::unordered_set<ElementSet, ElementSetHash> found;
  std::unordered_set<ElementSet, ElementSetHash> expanded;
  std::deque<ElementSet> queue;
  for (Element x = 0; x < h.size(); ++x) {
    queue.push_back(ElementSet::singleton(x));
    expanded.insert(ElementSet::singleton(x));
  }
  while (!queue.empty()) {
    const ElementSet s = queue.front();
    queue.pop_front();
    for (Element g = 0; g < h.size(); ++g) {
      const ElementSet p = hyperproduct(h, s, ElementSet::singleton(g));
      if (!found.insert(p).second) continue;
      if (census.sets.size() == cap) {
        if (policy == CapPolicy::kThrow) {
          fail(ErrorKind::CapExceeded, "product census exceeds cap " + std::to_string(cap));
        }
        census.complete = false;
        return census;
      }
      census.sets.push_back(p);
      if (expanded.insert(p).second) queue.push_back(p);
    }
  }
  return census;
}

Partition beta(const HyperTable& h, std::size_t census_cap) {
  const ProductCensus census = product_census(h, census_cap);
  UnionFind uf(h.size());
  for (ElementSet s : census.sets) uf.unite_all(s);
  return uf.to_partition();
}

Partition gamma_oracle(const HyperTable& h, std::size_t nmax, std::uint64_t budget) {
  const std::size_t n = h.size();
  std::uint64_t cost = 0;
  std::uint64_t tuples = 1;
  std::uint64_t perms = 1;
  for (std::size_t len = 1; len <= nmax; ++len) {
    tuples *= n;
    perms *= len;
    if (len >= 2) cost += tuples * perms;
    if (cost > budget) {
      fail(ErrorKind::BudgetExceeded, "oracle needs more than " + std::to_string(budget) + " products");
    }
  }

  UnionFind uf(n);
  for (std::size_t len = 2; len <= nmax; ++len) {
    std::vector<Element> tuple(len, 0);
    std::vector<std::size_t> order(len);
    while (true) {
      ElementSet related;
      std::iota(order.begin(), order.end(), std::size_t{0});
      do {
        ElementSet p = ElementSet::singleton(tuple[order[0]]);
        for (std::size_t i = 1; i < len; ++i) p = hyperproduct(h, p, ElementSet::singleton(tuple[order[i]]));
        related |= p;
      } while (std::next_permutation(order.begin(), order.end()));
      uf.unite_all(related);

      std::size_t pos = 0;
      while (pos < len && ++tuple[pos] == n) tuple[pos++] = 0;
      if (pos == len) break;
    }
  }
  return uf.to_partition();
}

Partition gamma(const HyperTable& h, std::size_t census_cap) {
  const Partition b = beta(h, census_cap);
  const QuotientStructure q = quotient_by(h, b);
  if (!q.group) fail(ErrorKind::NotAHypergroup, "fundamental quotient is not a group");
  const Partition delta = cosets(*q.group, commutator_subgroup(*q.group));
  return pullback(delta, b);
}

Verdict is_regular(const HyperTable& h, const Partition& r) {
  if (r.size() != h.size()) return Verdict::failure("partition carrier differs");
  const Element n = static_cast<Element>(h.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!r.same(a, b)) continue;
      for (Element x = 0; x < n; ++x) {
        if (r.classes_met(h.cell(a, x)) != r.classes_met(h.cell(b, x))) {
          return Verdict::failure("a R b but a∘x, b∘x meet different classes", {a, b, x});
        }
        if (r.classes_met(h.cell(x, a)) != r.classes_met(h.cell(x, b))) {
          return Verdict::failure("a R b but x∘a, x∘b meet different classes", {a, b, x});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_strongly_regular(const HyperTable& h, const Partition& r) {
  if (r.size() != h.size()) return Verdict::failure("partition carrier differs");
  const Element n = static_cast<Element>(h.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      if (!r.same(a, b)) continue;
      for (Element x = 0; x < n; ++x) {
        if (r.classes_met(h.cell(a, x) | h.cell(b, x)).size() != 1) {
          return Verdict::failure("a R b but a∘x ∪ b∘x meets two classes", {a, b, x});
        }
        if (r.classes_met(h.cell(x, a) | h.cell(x, b)).size() != 1) {
          return Verdict::failure("a R b but x∘a ∪ x∘b meets two classes", {a, b, x});
        }
      }
    }
  }
  return Verdict::pass();
}

QuotientStructure quotient_by(const HyperTable& h, const Partition& r) {
  if (r.size() != h.size()) fail(ErrorKind::ShapeMismatch, "partition carrier differs from table");
  const Verdict regular = is_regular(h, r);
  if (!regular) fail(ErrorKind::NotRegular, witness_text(h, regular));

  const std::size_t m = r.num_classes();
  std::vector<std::string> names;
  for (const ElementSet& c : r.classes()) names.push_back("[" + h.name(c.first()) + "]");
  std::vector<ElementSet> cells(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cells[i * m + j] = r.classes_met(h.cell(r.class_members(i).first(), r.class_members(j).first()));
    }
  }
  QuotientStructure q{h, r, HyperTable(names, cells), false, std::nullopt};
  const bool single_valued = std::all_of(cells.begin(), cells.end(), [](ElementSet c) { return c.size() == 1; });
  if (single_valued && is_strongly_regular(h, r)) {
    std::vector<Element> table(m * m);
    for (std::size_t i = 0; i < m * m; ++i) table[i] = cells[i].first();
    try {
      q.group = GroupTable::validate(std::move(names), std::move(table));
      q.is_group = true;
    } catch (const Error&) {
      // Single-valued but not a group (e.g. a semigroup quotient).
    }
  }
  return q;
}

ElementSet kernel_S(const HyperTable& h, const Partition& r) {
  const Verdict strong = is_strongly_regular(h, r);
  if (!strong) fail(ErrorKind::NotStronglyRegular, witness_text(h, strong));
  const QuotientStructure q = quotient_by(h, r);
  if (!q.group) fail(ErrorKind::NotAHypergroup, "strongly regular quotient is not a group");
  return r.class_members(q.group->identity());
}

Partition congruence_mod(const HyperTable& h, ElementSet k) {
  const Verdict sub = is_subhypergroup(h, k);
  if (!sub) fail(ErrorKind::NotASubhypergroup, format_set(h, k) + ": " + sub.witness->reason);
  std::vector<std::size_t> labels(h.size());
  for (Element x = 0; x < h.size(); ++x) {
    labels[x] = static_cast<std::size_t>(hyperproduct(h, ElementSet::singleton(x), k).bits());
  }
  return Partition::from_labels(labels);
}

Partition pullback(const Partition& sigma, const Partition& rho) {
  if (sigma.size() != rho.num_classes()) {
    fail(ErrorKind::ShapeMismatch, "sigma has " + std::to_string(sigma.size()) + " points but rho has " +
                                       std::to_string(rho.num_classes()) + " classes");
  }
  std::vector<std::size_t> labels(rho.size());
  for (Element x = 0; x < rho.size(); ++x) labels[x] = sigma.class_of(static_cast<Element>(rho.class_of(x)));
  return Partition::from_labels(labels);
}

Partition join(const Partition& r1, const Partition& r2) {
  if (r1.size() != r2.size()) fail(ErrorKind::ShapeMismatch, "partitions on different carriers");
  UnionFind uf(r1.size());
  for (ElementSet c : r1.classes()) uf.unite_all(c);
  for (ElementSet c : r2.classes()) uf.unite_all(c);
  return uf.to_partition();
}

std::uint64_t bell_number(std::size_t n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() > kMax - v ? kMax : next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::uint64_t budget) {
  const std::uint64_t count = bell_number(n);
  if (count > budget) {
    fail(ErrorKind::BudgetExceeded, "Bell(" + std::to_string(n) + ") = " + std::to_string(count) +
                                        " exceeds budget " + std::to_string(budget));
  }
  std::vector<Partition> out;
  if (n == 0) return {Partition{}};  // the empty partition
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max of rgs[0..i]
  while (true) {
    out.push_back(Partition::from_labels(rgs));
    // Advance to the next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

std::vector<Partition> enumerate_strongly_regular(const HyperTable& h, std::uint64_t budget) {
  std::vector<Partition> out;
  for (Partition& p : enumerate_partitions(h.size(), budget)) {
    if (is_strongly_regular(h, p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hyperkernel
