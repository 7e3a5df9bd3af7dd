#include "hyperkernel/quotients.hpp"

#include <algorithm>
#include <set>

#include "hyperkernel/error.hpp"

namespace hyperkernel {

namespace {

void require_hypergroup(const HyperTable& h) {
  const Verdict v = is_hypergroup(h);
  if (!v) fail(ErrorKind::NotAHypergroup, v.witness->reason);
}

ProductCensus full_census(const HyperTable& h, const Limits& limits) {
  return product_census(h, limits.census_cap, CapPolicy::kThrow);
}

// Intersection of complete-part subhypergroups containing `floor`.
ElementSet least_complete_part_above(const HyperTable& h, ElementSet floor, const Limits& limits) {
  const ProductCensus census = full_census(h, limits);
  ElementSet meet = h.carrier();
  for (ElementSet k : enumerate_subhypergroups(h, limits.subset_budget)) {
    if (floor.is_subset_of(k) && is_complete_part(h, k, census)) meet &= k;
  }
  return meet;
}

}  // namespace

bool is_complete_part(const HyperTable& h, ElementSet c, const ProductCensus& census) {
  if (!census.complete) fail(ErrorKind::CensusIncomplete, "complete-part test needs a complete census");
  if (c.empty() || !c.is_subset_of(h.carrier())) return false;
  return std::none_of(census.sets.begin(), census.sets.end(),
                      [c](ElementSet s) { return s.intersects(c) && !s.is_subset_of(c); });
}

std::vector<ElementSet> enumerate_subhypergroups(const HyperTable& h, std::uint64_t subset_budget) {
  const std::size_t n = h.size();
  if (n >= 64 || (std::uint64_t{1} << n) > subset_budget) {
    fail(ErrorKind::BudgetExceeded,
         "2^" + std::to_string(n) + " subsets exceed budget " + std::to_string(subset_budget));
  }
  std::vector<ElementSet> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < end; ++bits) {
    const ElementSet k = ElementSet::from_bits(bits);
    bool ok = true;
    for (Element a : k) {
      ElementSet left;
      ElementSet right;
      for (Element b : k) {
        left |= h.cell(a, b);
        right |= h.cell(b, a);
      }
      if (left != k || right != k) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(k);
  }
  return out;
}

SubLattice subhypergroups(const HyperTable& h, const Limits& limits) {
  require_hypergroup(h);
  SubLattice lattice;
  lattice.s_beta = kernel_S(h, beta(h, limits.census_cap));
  lattice.s_gamma = kernel_S(h, gamma(h, limits.census_cap));
  const ProductCensus census = full_census(h, limits);
  for (ElementSet k : enumerate_subhypergroups(h, limits.subset_budget)) {
    SubhypergroupEntry e;
    e.set = k;
    e.closed = static_cast<bool>(is_closed(h, k));
    e.normal = static_cast<bool>(is_normal(h, k));
    e.complete_part = is_complete_part(h, k, census);
    e.conjugable = static_cast<bool>(is_conjugable(h, k));
    e.contains_s_beta = lattice.s_beta.is_subset_of(k);
    e.contains_s_gamma = lattice.s_gamma.is_subset_of(k);
    lattice.all.push_back(e);
  }
  return lattice;
}

ElementSet heart_by_complete_parts(const HyperTable& h, const Limits& limits) {
  require_hypergroup(h);
  return least_complete_part_above(h, ElementSet{}, limits);
}

ElementSet heart(const HyperTable& h, const Limits& limits) {
  const ElementSet by_parts = heart_by_complete_parts(h, limits);
  const ElementSet by_beta = kernel_S(h, beta(h, limits.census_cap));
  if (by_parts != by_beta) {
    fail(ErrorKind::InconsistentHeart,
         "complete parts give " + format_set(h, by_parts) + " but beta gives " + format_set(h, by_beta));
  }
  return by_parts;
}

ElementSet derived_generators(const HyperTable& h) {
  const std::size_t n = h.size();
  // Mark which (z, w) pairs occur before dividing; many (x, y) repeat them.
  std::vector<bool> pair(n * n, false);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z : h.cell(x, y)) {
        for (Element w : h.cell(y, x)) pair[z * n + w] = true;
      }
    }
  }
  ElementSet d;
  for (Element z = 0; z < n; ++z) {
    for (Element w = 0; w < n; ++w) {
      if (!pair[z * n + w]) continue;
      d |= right_division(h, z, w);
      d |= left_division(h, w, z);
    }
  }
  return d;
}

ElementSet derived_by_complete_parts(const HyperTable& h, const Limits& limits) {
  require_hypergroup(h);
  return least_complete_part_above(h, derived_generators(h), limits);
}

ElementSet derived(const HyperTable& h, const Limits& limits) {
  const ElementSet by_parts = derived_by_complete_parts(h, limits);
  const ElementSet by_gamma = kernel_S(h, gamma(h, limits.census_cap));
  if (by_parts != by_gamma) {
    fail(ErrorKind::InconsistentDerived,
         "D-construction gives " + format_set(h, by_parts) + " but gamma gives " + format_set(h, by_gamma));
  }
  return by_parts;
}

CosetQuotient quotient_hypergroup(const HyperTable& h, ElementSet k) {
  const Verdict sub = is_subhypergroup(h, k);
  if (!sub) fail(ErrorKind::NotASubhypergroup, format_set(h, k) + ": " + sub.witness->reason);
  const Verdict normal = is_normal(h, k);
  if (!normal) fail(ErrorKind::NotNormal, format_set(h, k) + " is not normal at " + h.name(normal.witness->elements.at(0)));

  Partition congruence = congruence_mod(h, k);
  const Verdict regular = is_regular(h, congruence);
  if (!regular) fail(ErrorKind::NotRegular, "coset product depends on representatives");

  const std::size_t m = congruence.num_classes();
  std::vector<ElementSet> cosets;
  std::vector<Element> reps;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    const Element r = congruence.class_members(i).first();
    const ElementSet coset = hyperproduct(h, ElementSet::singleton(r), k);
    reps.push_back(r);
    cosets.push_back(coset);
    names.push_back(coset == k ? std::string("K") : h.name(r) + "∘K");
  }
  std::vector<ElementSet> cells(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) cells[i * m + j] = congruence.classes_met(h.cell(reps[i], reps[j]));
  }
  return CosetQuotient{HyperTable(std::move(names), std::move(cells)), std::move(cosets), std::move(reps),
                       std::move(congruence)};
}

std::optional<GroupTable> as_group(const HyperTable& table) {
  std::vector<Element> products;
  products.reserve(table.cells().size());
  for (ElementSet c : table.cells()) {
    if (c.size() != 1) return std::nullopt;
    products.push_back(c.first());
  }
  try {
    return GroupTable::validate(table.names(), std::move(products));
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

std::optional<GroupTable> closed_quotient_group(const HyperTable& h, ElementSet k) {
  const Verdict sub = is_subhypergroup(h, k);
  if (!sub) fail(ErrorKind::NotASubhypergroup, format_set(h, k) + ": " + sub.witness->reason);
  const Verdict closed = is_closed(h, k);
  if (!closed) fail(ErrorKind::NotClosed, format_set(h, k) + ": " + closed.witness->reason);
  if (!is_normal(h, k)) return std::nullopt;
  try {
    return as_group(quotient_hypergroup(h, k).table);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotRegular) return std::nullopt;
    throw;
  }
}

}  // namespace

bool check_group_quotient(const HyperTable& h, ElementSet k) {
  return closed_quotient_group(h, k).has_value();
}

bool check_abelian_quotient(const HyperTable& h, ElementSet k) {
  const std::optional<GroupTable> g = closed_quotient_group(h, k);
  return g && is_abelian(*g);
}

bool CorrespondenceReport::holds() const {
  const bool sr_ok = !sr_quotient_count || !sr_joined_count || *sr_quotient_count == *sr_joined_count;
  return sr_ok && std::all_of(relations.begin(), relations.end(),
                              [](const RelationCorrespondence& r) { return r.holds(); });
}

namespace {

RelationCorrespondence correspond(const HyperTable& h, ElementSet k, const CosetQuotient& q, bool use_gamma,
                                  const Limits& limits) {
  RelationCorrespondence out;
  out.relation = use_gamma ? "gamma" : "beta";
  const auto relation_of = [&](const HyperTable& t) {
    return use_gamma ? gamma(t, limits.census_cap) : beta(t, limits.census_cap);
  };
  const Partition rho = relation_of(h);
  const Partition rho_q = relation_of(q.table);
  const Partition& sigma = q.congruence;

  out.kernel = kernel_S(h, rho);
  out.kernel_times_k = hyperproduct(h, out.kernel, k);
  out.quotient_kernel = kernel_S(q.table, rho_q);
  out.lifted_kernel = q.cosets_met(out.kernel_times_k);
  out.kernel_identity = out.quotient_kernel == out.lifted_kernel;

  const std::optional<GroupTable> lhs = quotient_by(q.table, rho_q).group;
  try {
    const std::optional<GroupTable> rhs = as_group(quotient_hypergroup(h, out.kernel_times_k).table);
    out.quotient_isomorphism = lhs && rhs && isomorphic(*lhs, *rhs);
    if (!out.quotient_isomorphism) out.detail += "quotient of quotient not isomorphic; ";
  } catch (const Error& e) {
    if (e.is_resource_limit()) throw;
    out.detail += std::string("H/(S∘K) unavailable: ") + e.what() + "; ";
  }

  const Partition joined = join(rho, sigma);
  out.pullback_equals_join = pullback(rho_q, sigma) == joined;
  if (!out.pullback_equals_join) out.detail += "pullback through sigma differs from join; ";

  const std::optional<GroupTable> g = quotient_by(h, rho).group;
  try {
    const ElementSet n = rho.classes_met(out.kernel_times_k);
    out.join_equals_lift = g && pullback(cosets(*g, n), rho) == joined;
    if (!out.join_equals_lift) out.detail += "lifted coset relation differs from join; ";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotNormal) throw;
    out.detail += "image of S∘K is not a normal subgroup; ";
  }
  return out;
}

}  // namespace

CorrespondenceReport correspondence_check(const HyperTable& h, ElementSet k, const Limits& limits) {
  const Verdict canonical = is_canonical(h);
  if (!canonical) fail(ErrorKind::NotCanonical, "H is not canonical: " + canonical.witness->reason);
  const std::optional<ScalarInverses> inv = scalar_inverses(h);
  if (!is_subhypergroup(h, k) || !k.contains(inv->identity)) {
    fail(ErrorKind::NotCanonical, format_set(h, k) + " is not a canonical subhypergroup");
  }

  CorrespondenceReport report{quotient_hypergroup(h, k), {}, std::nullopt, std::nullopt};
  report.relations.push_back(correspond(h, k, report.quotient, false, limits));
  report.relations.push_back(correspond(h, k, report.quotient, true, limits));

  try {
    const std::vector<Partition> sr_q = enumerate_strongly_regular(report.quotient.table, limits.sr_budget);
    const std::vector<Partition> sr_h = enumerate_strongly_regular(h, limits.sr_budget);
    std::set<std::vector<std::size_t>> joined;
    for (const Partition& rho : sr_h) joined.insert(join(rho, report.quotient.congruence).labels());
    report.sr_quotient_count = sr_q.size();
    report.sr_joined_count = joined.size();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
  }
  return report;
}

ProductReport product_identities_check(const HyperTable& h1, const HyperTable& h2, const Limits& limits) {
  require_hypergroup(h1);
  require_hypergroup(h2);
  if (h1.size() * h2.size() > kMaxCarrier) {
    fail(ErrorKind::BudgetExceeded, "product of " + std::to_string(h1.size()) + " and " +
                                        std::to_string(h2.size()) + " elements exceeds the carrier limit");
  }
  ProductReport r{direct_product(h1, h2), {}, {}, {}, {}, false, false, false, std::nullopt};
  const std::size_t n2 = h2.size();
  const auto pair = [n2](ElementSet a, ElementSet b) {
    ElementSet out;
    for (Element x : a) {
      for (Element y : b) out.insert(static_cast<Element>(x * n2 + y));
    }
    return out;
  };

  const Partition b1 = beta(h1, limits.census_cap);
  const Partition b2 = beta(h2, limits.census_cap);
  const Partition bp = beta(r.product, limits.census_cap);
  r.heart_of_product = kernel_S(r.product, bp);
  r.paired_hearts = pair(kernel_S(h1, b1), kernel_S(h2, b2));
  r.heart_identity = r.heart_of_product == r.paired_hearts;

  const Partition g1 = gamma(h1, limits.census_cap);
  const Partition g2 = gamma(h2, limits.census_cap);
  const Partition gp = gamma(r.product, limits.census_cap);
  r.derived_of_product = kernel_S(r.product, gp);
  r.paired_derived = pair(kernel_S(h1, g1), kernel_S(h2, g2));
  r.derived_identity = r.derived_of_product == r.paired_derived;

  const auto group_of = [](const HyperTable& t, const Partition& p) { return *quotient_by(t, p).group; };
  r.gamma_isomorphism = isomorphic(group_of(r.product, gp),
                                   group_direct_product(group_of(h1, g1), group_of(h2, g2)));
  const GroupTable bq = group_of(r.product, bp);
  if (bq.size() <= kIsomorphismSizeLimit) {
    r.beta_isomorphism = isomorphic(bq, group_direct_product(group_of(h1, b1), group_of(h2, b2)));
  }
  return r;
}

}  // namespace hyperkernel
