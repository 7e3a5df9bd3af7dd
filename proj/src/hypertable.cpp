#include "hyperkernel/hypertable.hpp"

#include <set>

#include "hyperkernel/error.hpp"

namespace hyperkernel {

HyperTable::HyperTable(std::vector<std::string> names, std::vector<ElementSet> cells)
    : names_(std::move(names)), cells_(std::move(cells)) {
  const std::size_t n = names_.size();
  if (n == 0) fail(ErrorKind::InvalidTable, "empty carrier");
  if (n > kMaxCarrier) {
    fail(ErrorKind::SizeExceeded, "carrier of " + std::to_string(n) + " elements exceeds " +
                                      std::to_string(kMaxCarrier));
  }
  if (cells_.size() != n * n) {
    fail(ErrorKind::InvalidTable, "table has " + std::to_string(cells_.size()) + " cells, expected " +
                                      std::to_string(n * n));
  }
  std::set<std::string> seen;
  for (const std::string& name : names_) {
    if (!seen.insert(name).second) fail(ErrorKind::DuplicateLabel, name);
  }
  const ElementSet all = carrier();
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const std::string where = names_[i / n] + "∘" + names_[i % n];
    if (cells_[i].empty()) fail(ErrorKind::EmptyCell, where);
    if (!cells_[i].is_subset_of(all)) fail(ErrorKind::InvalidTable, "cell " + where + " leaves the carrier");
  }
}

std::optional<Element> HyperTable::find(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return static_cast<Element>(i);
  }
  return std::nullopt;
}

ElementSet hyperproduct(const HyperTable& h, ElementSet a, ElementSet b) {
  if (a.empty() || b.empty()) fail(ErrorKind::EmptyOperand, "hyperproduct of an empty set");
  ElementSet out;
  for (Element x : a) {
    for (Element y : b) out |= h.cell(x, y);
  }
  return out;
}

ElementSet right_division(const HyperTable& h, Element b, Element c) {
  ElementSet out;
  for (Element w = 0; w < h.size(); ++w) {
    if (h.cell(w, c).contains(b)) out.insert(w);
  }
  return out;
}

ElementSet left_division(const HyperTable& h, Element b, Element c) {
  ElementSet out;
  for (Element w = 0; w < h.size(); ++w) {
    if (h.cell(c, w).contains(b)) out.insert(w);
  }
  return out;
}

Verdict is_semihypergroup(const HyperTable& h) {
  const Element n = static_cast<Element>(h.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const ElementSet ab = h.cell(a, b);
      for (Element c = 0; c < n; ++c) {
        const ElementSet left = hyperproduct(h, ab, ElementSet::singleton(c));
        const ElementSet right = hyperproduct(h, ElementSet::singleton(a), h.cell(b, c));
        if (left != right) return Verdict::failure("(a∘b)∘c != a∘(b∘c)", {a, b, c});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_quasihypergroup(const HyperTable& h) {
  const Element n = static_cast<Element>(h.size());
  const ElementSet all = h.carrier();
  for (Element a = 0; a < n; ++a) {
    ElementSet row;
    ElementSet column;
    for (Element x = 0; x < n; ++x) {
      row |= h.cell(a, x);
      column |= h.cell(x, a);
    }
    if (row != all) return Verdict::failure("a∘H != H", {a});
    if (column != all) return Verdict::failure("H∘a != H", {a});
  }
  return Verdict::pass();
}

Verdict is_hypergroup(const HyperTable& h) {
  Verdict semi = is_semihypergroup(h);
  if (!semi) return semi;
  return is_quasihypergroup(h);
}

Verdict is_commutative(const HyperTable& h) {
  const Element n = static_cast<Element>(h.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (h.cell(a, b) != h.cell(b, a)) return Verdict::failure("a∘b != b∘a", {a, b});
    }
  }
  return Verdict::pass();
}

ElementSet identities(const HyperTable& h) {
  ElementSet out;
  for (Element e = 0; e < h.size(); ++e) {
    bool ok = true;
    for (Element x = 0; x < h.size() && ok; ++x) ok = h.cell(e, x).contains(x) && h.cell(x, e).contains(x);
    if (ok) out.insert(e);
  }
  return out;
}

InverseCandidates inverse_candidates(const HyperTable& h, Element x) {
  const ElementSet units = identities(h);
  InverseCandidates c;
  for (Element y = 0; y < h.size(); ++y) {
    if (h.cell(y, x).intersects(units)) c.left.insert(y);
    if (h.cell(x, y).intersects(units)) c.right.insert(y);
  }
  c.both = c.left & c.right;
  return c;
}

namespace {

void require_hypergroup(const HyperTable& h) {
  const Verdict v = is_hypergroup(h);
  if (!v) fail(ErrorKind::NotAHypergroup, v.witness->reason);
}

}  // namespace

Verdict is_regular_hg(const HyperTable& h) {
  require_hypergroup(h);
  if (identities(h).empty()) return Verdict::failure("E_H is empty");
  for (Element x = 0; x < h.size(); ++x) {
    if (inverse_candidates(h, x).both.empty()) return Verdict::failure("C(x) is empty", {x});
  }
  return Verdict::pass();
}

Verdict is_strongly_regular_hg(const HyperTable& h) {
  require_hypergroup(h);
  if (identities(h).empty()) return Verdict::failure("E_H is empty");
  for (Element x = 0; x < h.size(); ++x) {
    if (inverse_candidates(h, x).both.size() != 1) return Verdict::failure("|C(x)| != 1", {x});
  }
  return Verdict::pass();
}

std::optional<ScalarInverses> scalar_inverses(const HyperTable& h) {
  const Element n = static_cast<Element>(h.size());
  std::optional<Element> unit;
  for (Element e = 0; e < n && !unit; ++e) {
    bool scalar = true;
    for (Element x = 0; x < n && scalar; ++x) {
      scalar = h.cell(e, x) == ElementSet::singleton(x) && h.cell(x, e) == ElementSet::singleton(x);
    }
    if (scalar) unit = e;
  }
  if (!unit) return std::nullopt;
  ScalarInverses out{*unit, std::vector<Element>(n)};
  for (Element x = 0; x < n; ++x) {
    ElementSet inv;
    for (Element y = 0; y < n; ++y) {
      if (h.cell(x, y).contains(*unit) && h.cell(y, x).contains(*unit)) inv.insert(y);
    }
    if (inv.size() != 1) return std::nullopt;
    out.inverse[x] = inv.first();
  }
  return out;
}

Verdict is_polygroup(const HyperTable& h) {
  Verdict semi = is_semihypergroup(h);
  if (!semi) return semi;
  const Element n = static_cast<Element>(h.size());
  std::optional<Element> unit;
  for (Element e = 0; e < n && !unit; ++e) {
    bool scalar = true;
    for (Element x = 0; x < n && scalar; ++x) {
      scalar = h.cell(e, x) == ElementSet::singleton(x) && h.cell(x, e) == ElementSet::singleton(x);
    }
    if (scalar) unit = e;
  }
  if (!unit) return Verdict::failure("no scalar identity");
  const auto si = scalar_inverses(h);
  if (!si) {
    for (Element x = 0; x < n; ++x) {
      std::size_t count = 0;
      for (Element y = 0; y < n; ++y) {
        if (h.cell(x, y).contains(*unit) && h.cell(y, x).contains(*unit)) ++count;
      }
      if (count != 1) return Verdict::failure("inverse not unique", {x});
    }
    return Verdict::failure("inverse not unique");
  }
  const std::vector<Element>& inv = si->inverse;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (!h.cell(y, z).contains(x)) continue;
        if (!h.cell(inv[y], x).contains(z) || !h.cell(x, inv[z]).contains(y)) {
          return Verdict::failure("x ∈ y∘z but reversibility fails", {x, y, z});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_canonical(const HyperTable& h) {
  Verdict comm = is_commutative(h);
  if (!comm) return comm;
  return is_polygroup(h);
}

Verdict is_subhypergroup(const HyperTable& h, ElementSet k) {
  if (k.empty()) return Verdict::failure("empty subset");
  if (!k.is_subset_of(h.carrier())) return Verdict::failure("subset leaves the carrier");
  for (Element x : k) {
    if (hyperproduct(h, ElementSet::singleton(x), k) != k) return Verdict::failure("k∘K != K", {x});
    if (hyperproduct(h, k, ElementSet::singleton(x)) != k) return Verdict::failure("K∘k != K", {x});
  }
  return Verdict::pass();
}

Verdict is_closed(const HyperTable& h, ElementSet k) {
  const ElementSet outside = h.carrier() - k;
  for (Element a : k) {
    for (Element b : k) {
      for (Element x : outside) {
        if (h.cell(a, x).contains(b) || h.cell(x, a).contains(b)) {
          return Verdict::failure("b ∈ a∘x or b ∈ x∘a with x outside K", {a, b, x});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_normal(const HyperTable& h, ElementSet k) {
  if (k.empty()) return Verdict::failure("empty subset");
  for (Element x = 0; x < h.size(); ++x) {
    const ElementSet sx = ElementSet::singleton(x);
    if (hyperproduct(h, sx, k) != hyperproduct(h, k, sx)) return Verdict::failure("x∘K != K∘x", {x});
  }
  return Verdict::pass();
}

Verdict is_conjugable(const HyperTable& h, ElementSet k) {
  Verdict closed = is_closed(h, k);
  if (!closed) return closed;
  for (Element x = 0; x < h.size(); ++x) {
    bool left = false;
    bool right = false;
    for (Element y = 0; y < h.size(); ++y) {
      left = left || h.cell(y, x).is_subset_of(k);
      right = right || h.cell(x, y).is_subset_of(k);
    }
    if (!left) return Verdict::failure("no x' with x'∘x ⊆ K", {x});
    if (!right) return Verdict::failure("no x' with x∘x' ⊆ K", {x});
  }
  return Verdict::pass();
}

StructureReport structure_report(const HyperTable& h) {
  StructureReport r;
  r.semihypergroup = is_semihypergroup(h);
  r.quasihypergroup = is_quasihypergroup(h);
  r.hypergroup = r.semihypergroup ? r.quasihypergroup : r.semihypergroup;
  r.commutative = is_commutative(h);
  r.polygroup = is_polygroup(h);
  r.canonical = r.commutative ? r.polygroup : r.commutative;
  if (r.hypergroup) {
    r.regular_hg = is_regular_hg(h);
    r.strongly_regular_hg = is_strongly_regular_hg(h);
  } else {
    r.regular_hg = Verdict::failure("not a hypergroup", r.hypergroup.witness->elements);
    r.strongly_regular_hg = r.regular_hg;
  }
  r.identities = identities(h);
  return r;
}

HyperTable from_group(const GroupTable& g) {
  std::vector<ElementSet> cells;
  cells.reserve(g.size() * g.size());
  for (Element v : g.table()) cells.push_back(ElementSet::singleton(v));
  return HyperTable(g.names(), std::move(cells));
}

HyperTable total_hypergroup(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  return HyperTable(std::move(names), std::vector<ElementSet>(n * n, ElementSet::full(n)));
}

HyperTable direct_product(const HyperTable& h1, const HyperTable& h2) {
  const std::size_t n1 = h1.size();
  const std::size_t n2 = h2.size();
  if (n1 * n2 > kMaxCarrier) {
    fail(ErrorKind::SizeExceeded, "product carrier " + std::to_string(n1 * n2) + " exceeds " +
                                      std::to_string(kMaxCarrier));
  }
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) names.push_back("(" + h1.names()[a] + "," + h2.names()[b] + ")");
  }
  const std::size_t n = n1 * n2;
  std::vector<ElementSet> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet first = h1.cell(static_cast<Element>(x / n2), static_cast<Element>(y / n2));
      const ElementSet second = h2.cell(static_cast<Element>(x % n2), static_cast<Element>(y % n2));
      ElementSet c;
      for (Element p : first) {
        for (Element q : second) c.insert(static_cast<Element>(p * n2 + q));
      }
      cells[x * n + y] = c;
    }
  }
  return HyperTable(std::move(names), std::move(cells));
}

std::string format_set(const HyperTable& h, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += h.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace hyperkernel
