#include "hyperkernel/report.hpp"

#include <algorithm>
#include <sstream>

#include "hyperkernel/error.hpp"

namespace hyperkernel::report {

std::string canonical(const Json& j) { return j.dump() + "\n"; }

Json set_json(const HyperTable& h, ElementSet s) {
  std::vector<std::string> labels;
  for (Element x : s) labels.push_back(h.name(x));
  std::sort(labels.begin(), labels.end());
  return labels;
}

Json partition_json(const HyperTable& h, const Partition& p) {
  std::vector<std::vector<std::string>> classes;
  for (ElementSet c : p.classes()) classes.push_back(set_json(h, c).get<std::vector<std::string>>());
  std::sort(classes.begin(), classes.end());
  return classes;
}

Json verdict_json(const HyperTable& h, const Verdict& v) {
  Json j{{"holds", v.holds}};
  if (v.witness) {
    Json elements = Json::array();
    for (Element x : v.witness->elements) elements.push_back(h.name(x));
    j["witness"] = {{"reason", v.witness->reason}, {"elements", elements}};
  }
  return j;
}

Json table_json(const HyperTable& h) {
  Json cells = Json::array();
  for (Element a = 0; a < h.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < h.size(); ++b) row.push_back(set_json(h, h.cell(a, b)));
    cells.push_back(row);
  }
  return {{"elements", h.names()}, {"cells", cells}};
}

Json group_name(const GroupTable& g) {
  const std::size_t n = g.size();
  for (Element x = 0; x < n; ++x) {
    if (g.order_of(x) == n) return "Z" + std::to_string(n);
  }
  if (n == 4 && isomorphic(g, klein_four_group())) return "V4";
  if (n == 6 && isomorphic(g, symmetric_group_3())) return "S3";
  return nullptr;
}

Json group_json(const GroupTable& g) {
  Json table = Json::array();
  for (Element a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < g.size(); ++b) row.push_back(g.name(g.mul(a, b)));
    table.push_back(row);
  }
  return {{"order", g.size()},
          {"abelian", is_abelian(g)},
          {"name", group_name(g)},
          {"elements", g.names()},
          {"identity", g.name(g.identity())},
          {"table", table}};
}

Json structure_json(const HyperTable& h, const StructureReport& r) {
  return {{"size", h.size()},
          {"semihypergroup", verdict_json(h, r.semihypergroup)},
          {"quasihypergroup", verdict_json(h, r.quasihypergroup)},
          {"hypergroup", verdict_json(h, r.hypergroup)},
          {"commutative", verdict_json(h, r.commutative)},
          {"canonical", verdict_json(h, r.canonical)},
          {"polygroup", verdict_json(h, r.polygroup)},
          {"regular", verdict_json(h, r.regular_hg)},
          {"strongly_regular", verdict_json(h, r.strongly_regular_hg)},
          {"identities", set_json(h, r.identities)}};
}

Json quotient_json(const HyperTable& h, const Partition& r) {
  const QuotientStructure q = quotient_by(h, r);
  Json j{{"classes", partition_json(h, r)}, {"is_group", q.is_group}, {"table", table_json(q.table)}};
  j["group"] = q.group ? group_json(*q.group) : Json(nullptr);
  j["kernel"] = q.group ? set_json(h, r.class_members(q.group->identity())) : Json(nullptr);
  return j;
}

Json sublattice_json(const HyperTable& h, const SubLattice& lattice) {
  Json subs = Json::array();
  for (const SubhypergroupEntry& e : lattice.all) {
    subs.push_back({{"set", set_json(h, e.set)},
                    {"closed", e.closed},
                    {"normal", e.normal},
                    {"complete_part", e.complete_part},
                    {"conjugable", e.conjugable},
                    {"contains_s_beta", e.contains_s_beta},
                    {"contains_s_gamma", e.contains_s_gamma}});
  }
  return {{"s_beta", set_json(h, lattice.s_beta)}, {"s_gamma", set_json(h, lattice.s_gamma)}, {"subhypergroups", subs}};
}

Json coset_quotient_json(const HyperTable& h, const CosetQuotient& q) {
  Json cosets = Json::array();
  for (std::size_t i = 0; i < q.cosets.size(); ++i) {
    cosets.push_back({{"label", q.table.name(static_cast<Element>(i))},
                      {"representative", h.name(q.representatives[i])},
                      {"members", set_json(h, q.cosets[i])}});
  }
  return {{"cosets", cosets}, {"table", table_json(q.table)}};
}

Json correspondence_json(const HyperTable& h, const CorrespondenceReport& r) {
  Json relations = Json::array();
  const HyperTable& qt = r.quotient.table;
  for (const RelationCorrespondence& c : r.relations) {
    relations.push_back({{"relation", c.relation},
                         {"kernel", set_json(h, c.kernel)},
                         {"kernel_times_k", set_json(h, c.kernel_times_k)},
                         {"quotient_kernel", set_json(qt, c.quotient_kernel)},
                         {"lifted_kernel", set_json(qt, c.lifted_kernel)},
                         {"kernel_identity", c.kernel_identity},
                         {"quotient_isomorphism", c.quotient_isomorphism},
                         {"pullback_equals_join", c.pullback_equals_join},
                         {"join_equals_lift", c.join_equals_lift},
                         {"holds", c.holds()}});
  }
  Json j{{"relations", relations}, {"holds", r.holds()}};
  j["sr_quotient_count"] = r.sr_quotient_count ? Json(*r.sr_quotient_count) : Json(nullptr);
  j["sr_joined_count"] = r.sr_joined_count ? Json(*r.sr_joined_count) : Json(nullptr);
  return j;
}

Json product_json(const ProductReport& r) {
  const HyperTable& p = r.product;
  Json j{{"size", p.size()},
         {"heart_of_product", set_json(p, r.heart_of_product)},
         {"paired_hearts", set_json(p, r.paired_hearts)},
         {"heart_identity", r.heart_identity},
         {"derived_of_product", set_json(p, r.derived_of_product)},
         {"paired_derived", set_json(p, r.paired_derived)},
         {"derived_identity", r.derived_identity},
         {"gamma_isomorphism", r.gamma_isomorphism},
         {"holds", r.holds()}};
  j["beta_isomorphism"] = r.beta_isomorphism ? Json(*r.beta_isomorphism) : Json(nullptr);
  return j;
}

Json direct_sum_json(const AbelianizedFamily& family, const DirectSumElement& s) {
  Json components = Json::array();
  for (const auto& [factor, coset] : s.support) {
    components.push_back({{"factor", factor}, {"coset", family.abelianization(factor).name(coset)}});
  }
  return {{"zero", s.is_zero()}, {"support", components}};
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_structured()) return true;
  if (!j.is_array()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return !x.is_structured(); });
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? "," : "") + scalar_text(j[i]);
    return out + "}";
  }
  return j.dump();
}

void render(const Json& j, std::size_t indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << scalar_text(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const Json& item : j) {
      if (is_flat(item)) {
        out << pad << "- " << scalar_text(item) << "\n";
      } else if (item.is_array() && std::all_of(item.begin(), item.end(), is_flat)) {
        std::string line;
        for (const Json& x : item) line += (line.empty() ? "" : " ") + scalar_text(x);
        out << pad << "- " << line << "\n";
      } else {
        out << pad << "-\n";
        render(item, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string human(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace hyperkernel::report
