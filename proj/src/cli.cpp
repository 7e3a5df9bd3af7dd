#include "hyperkernel/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperkernel/error.hpp"
#include "hyperkernel/fixtures.hpp"
#include "hyperkernel/freeprod.hpp"
#include "hyperkernel/hypfile.hpp"
#include "hyperkernel/quotients.hpp"
#include "hyperkernel/relations.hpp"
#include "hyperkernel/report.hpp"

namespace hyperkernel::cli {

namespace {

using report::Json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? std::string() : item.substr(first, last - first + 1));
  }
  return out;
}

ElementSet parse_subset(const HyperTable& h, const std::string& text) {
  ElementSet k;
  for (const std::string& label : split(text, ',')) {
    if (label.empty()) continue;
    const std::optional<Element> x = h.find(label);
    if (!x) fail(ErrorKind::UnknownLabel, "no element named '" + label + "'");
    k.insert(*x);
  }
  if (k.empty()) fail(ErrorKind::ParseError, "empty subset '" + text + "'");
  return k;
}

std::size_t census_cap_from_env() {
  const char* env = std::getenv("HYPERKERNEL_CENSUS_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCensusCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) fail(ErrorKind::ParseError, std::string("bad HYPERKERNEL_CENSUS_CAP: ") + env);
  return static_cast<std::size_t>(v);
}

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t census_cap = 0;  // 0: environment or default

  std::string file;
  std::string file2;
  bool oracle = false;
  std::size_t nmax = 4;
  bool only_closed = false;
  bool only_normal = false;
  bool only_complete_part = false;
  bool only_contains_heart = false;
  std::string sub;
  std::uint64_t budget = kDefaultSrBudget;
  std::string factors;
  std::string expression;
  std::string subs;
  std::size_t max_len = 4;
  std::size_t samples = 500;
  std::string fixture_name;
  std::string format = "hyp";
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    limits_.census_cap = o.census_cap != 0 ? o.census_cap : census_cap_from_env();
  }

  int check() {
    const HyperTable h = load(o_.file);
    return emit(report::structure_json(h, structure_report(h)));
  }

  int beta_cmd() {
    const HyperTable h = load(o_.file);
    return emit(report::quotient_json(h, beta(h, limits_.census_cap)));
  }

  int gamma_cmd() {
    const HyperTable h = load(o_.file);
    const Partition g = gamma(h, limits_.census_cap);
    Json j = report::quotient_json(h, g);
    if (o_.oracle) {
      const Partition brute = gamma_oracle(h, o_.nmax, limits_.oracle_budget);
      j["oracle"] = {{"nmax", o_.nmax}, {"classes", report::partition_json(h, brute)}, {"agrees", brute == g}};
    }
    return emit(j);
  }

  int heart_cmd() {
    const HyperTable h = load(o_.file);
    const ElementSet parts = heart_by_complete_parts(h, limits_);
    const ElementSet kernel = kernel_S(h, beta(h, limits_.census_cap));
    const Json j{{"heart", report::set_json(h, parts)},
                 {"routes", {{"complete_parts", report::set_json(h, parts)}, {"beta_kernel", report::set_json(h, kernel)}}},
                 {"agree", parts == kernel}};
    emit(j);
    return parts == kernel ? kExitOk : kExitError;
  }

  int derived_cmd() {
    const HyperTable h = load(o_.file);
    const ElementSet parts = derived_by_complete_parts(h, limits_);
    const ElementSet kernel = kernel_S(h, gamma(h, limits_.census_cap));
    const Json j{{"derived", report::set_json(h, parts)},
                 {"generators", report::set_json(h, derived_generators(h))},
                 {"routes", {{"complete_parts", report::set_json(h, parts)}, {"gamma_kernel", report::set_json(h, kernel)}}},
                 {"agree", parts == kernel}};
    emit(j);
    return parts == kernel ? kExitOk : kExitError;
  }

  int subs_cmd() {
    const HyperTable h = load(o_.file);
    SubLattice lattice = subhypergroups(h, limits_);
    std::erase_if(lattice.all, [&](const SubhypergroupEntry& e) {
      return (o_.only_closed && !e.closed) || (o_.only_normal && !e.normal) ||
             (o_.only_complete_part && !e.complete_part) || (o_.only_contains_heart && !e.contains_s_beta);
    });
    return emit(report::sublattice_json(h, lattice));
  }

  int quotient_cmd() {
    const HyperTable h = load(o_.file);
    const ElementSet k = parse_subset(h, o_.sub);
    const CosetQuotient q = quotient_hypergroup(h, k);
    const std::optional<GroupTable> g = as_group(q.table);
    Json j = report::coset_quotient_json(h, q);
    j["sub"] = report::set_json(h, k);
    j["closed"] = static_cast<bool>(is_closed(h, k));
    j["normal"] = true;
    j["is_group"] = g.has_value();
    j["is_abelian_group"] = g && is_abelian(*g);
    j["quotient_beta"] = report::partition_json(q.table, beta(q.table, limits_.census_cap));
    j["correspondence"] = nullptr;
    const std::optional<ScalarInverses> inv = scalar_inverses(h);
    if (is_canonical(h) && inv && k.contains(inv->identity)) {
      j["correspondence"] = report::correspondence_json(h, correspondence_check(h, k, limits_));
    }
    return emit(j);
  }

  int product_cmd() {
    const HyperTable h1 = load(o_.file);
    const HyperTable h2 = load(o_.file2);
    return emit(report::product_json(product_identities_check(h1, h2, limits_)));
  }

  int sr_enum_cmd() {
    const HyperTable h = load(o_.file);
    const std::vector<Partition> sr = enumerate_strongly_regular(h, o_.budget);
    Json relations = Json::array();
    for (const Partition& p : sr) relations.push_back(report::partition_json(h, p));
    const SubLattice lattice = subhypergroups(h, limits_);
    Json over_heart = Json::array();
    for (const SubhypergroupEntry& e : lattice.all) {
      if (e.closed && e.normal && e.contains_s_beta) over_heart.push_back(report::set_json(h, e.set));
    }
    const Json j{{"count", sr.size()},
                 {"relations", relations},
                 {"normal_closed_over_heart", over_heart},
                 {"matches", sr.size() == over_heart.size()}};
    return emit(j);
  }

  int freeprod_eval() {
    const FactorRegistry reg = registry();
    WordSet acc;
    bool first = true;
    for (const std::string& part : split(o_.expression, '*')) {
      const WordSet operand{parse_word(reg, part)};
      acc = first ? operand : multiply(reg, acc, operand);
      first = false;
    }
    Json words = Json::array();
    for (const ReducedWord& w : acc) words.push_back(format_word(reg, w));
    return emit(Json{{"result", words}});
  }

  int freeprod_psi() {
    const FactorRegistry reg = registry();
    const ReducedWord w = parse_word(reg, o_.expression);
    const GroupFreeProduct target(reg.quotient_groups());
    const AbelianizedFamily family(reg.quotient_groups());
    const ReducedWord image = phi(reg, target, w);
    return emit(Json{{"word", format_word(reg, w)},
                     {"phi", format_group_word(target, image)},
                     {"psi", report::direct_sum_json(family, psi(family, image))}});
  }

  int freeprod_closure() {
    const FactorRegistry reg = registry();
    const ClosureReport r = polygroup_closure_check(reg, o_.max_len, o_.samples, o_.seed);
    Json j{{"triples", r.triples}, {"failures", r.failures}, {"holds", r.holds()}, {"seed", o_.seed}};
    if (r.first_failure) {
      Json words = Json::array();
      for (const ReducedWord& w : *r.first_failure) words.push_back(format_word(reg, w));
      j["first_failure"] = words;
    }
    return emit(j);
  }

  int freeprod_conjecture() {
    const FactorRegistry reg = registry();
    const std::vector<std::string> parts = split(o_.subs, ';');
    if (parts.size() != reg.size()) fail(ErrorKind::ShapeMismatch, "--subs needs one subset per factor");
    std::vector<ElementSet> subs;
    for (std::size_t i = 0; i < parts.size(); ++i) subs.push_back(parse_subset(reg.factor(i).table, parts[i]));
    const ConjectureEvidence ev = quotient_conjecture_check(reg, subs, o_.max_len, o_.samples, o_.seed);
    return emit(Json{{"applicable", ev.applicable},
                     {"note", ev.note},
                     {"max_len", ev.max_len},
                     {"quotient_words", ev.quotient_words},
                     {"images_hit", ev.images_hit},
                     {"pairs", ev.pairs},
                     {"homomorphic_pairs", ev.homomorphic_pairs},
                     {"seed", o_.seed}});
  }

  int fixture_cmd() {
    if (o_.fixture_name.empty()) {
      for (const std::string& n : fixture_names()) out_ << n << "\n";
      return kExitOk;
    }
    const HypDocument doc = load_document(o_.fixture_name);
    out_ << (o_.format == "json" ? emit_hyp_json(doc.table, doc.name) : emit_hyp(doc.table, doc.name));
    return kExitOk;
  }

 private:
  HyperTable load(const std::string& path) const { return load_document(path).table; }

  FactorRegistry registry() const {
    std::vector<HyperTable> tables;
    for (const std::string& f : split(o_.factors, ',')) tables.push_back(load(f));
    if (tables.empty()) fail(ErrorKind::ParseError, "--factors is empty");
    return FactorRegistry(std::move(tables), limits_.census_cap);
  }

  int emit(const Json& j) {
    out_ << (o_.json ? report::canonical(j) : report::human(j));
    return kExitOk;
  }

  const Options& o_;
  std::ostream& out_;
  Limits limits_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite hypergroup toolkit: fundamental relations, hearts, quotients, free products."};
  app.name("hyperkernel");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit canonical JSON");
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--census-cap", o.census_cap, "Maximum number of distinct products in a census");

  CLI::App* check = app.add_subcommand("check", "Axioms and structure report");
  check->add_option("file", o.file)->required();
  CLI::App* beta_c = app.add_subcommand("beta", "Fundamental relation beta* and its quotient group");
  beta_c->add_option("file", o.file)->required();
  CLI::App* gamma_c = app.add_subcommand("gamma", "Relation gamma* and its abelian quotient");
  gamma_c->add_option("file", o.file)->required();
  gamma_c->add_flag("--oracle", o.oracle, "Cross-check against the brute-force oracle");
  gamma_c->add_option("--nmax", o.nmax, "Longest product the oracle permutes");
  CLI::App* heart_c = app.add_subcommand("heart", "Heart via complete parts and via beta");
  heart_c->add_option("file", o.file)->required();
  CLI::App* derived_c = app.add_subcommand("derived", "Derived subhypergroup via D and via gamma");
  derived_c->add_option("file", o.file)->required();
  CLI::App* subs = app.add_subcommand("subs", "Subhypergroups with their properties");
  subs->add_option("file", o.file)->required();
  subs->add_flag("--closed", o.only_closed);
  subs->add_flag("--normal", o.only_normal);
  subs->add_flag("--complete-part", o.only_complete_part);
  subs->add_flag("--contains-heart", o.only_contains_heart);
  CLI::App* quotient = app.add_subcommand("quotient", "Coset quotient H/K");
  quotient->add_option("file", o.file)->required();
  quotient->add_option("--sub", o.sub, "Comma-separated labels of K")->required();
  CLI::App* product = app.add_subcommand("product", "Direct-product identities");
  product->add_option("file1", o.file)->required();
  product->add_option("file2", o.file2)->required();
  CLI::App* sr = app.add_subcommand("sr-enum", "Strongly regular relations");
  sr->add_option("file", o.file)->required();
  sr->add_option("--budget", o.budget, "Maximum number of partitions to scan");

  CLI::App* fp = app.add_subcommand("freeprod", "Free product of strongly regular hypergroups");
  fp->add_option("--factors", o.factors, "Comma-separated factor files or fixtures")->required();
  fp->require_subcommand(1);
  CLI::App* eval = fp->add_subcommand("eval", "Multiply words joined by '*'");
  eval->add_option("expression", o.expression)->required();
  CLI::App* psi_c = fp->add_subcommand("psi", "Image in the direct sum of abelianized quotients");
  psi_c->add_option("word", o.expression)->required();
  CLI::App* closure = fp->add_subcommand("closure", "Sampled reversibility check");
  closure->add_option("--max-len", o.max_len);
  closure->add_option("--samples", o.samples);
  CLI::App* conj = fp->add_subcommand("conjecture", "Bounded evidence for free products of quotients");
  conj->add_option("--subs", o.subs, "Semicolon-separated subsets, one per factor")->required();
  conj->add_option("--max-len", o.max_len);
  conj->add_option("--samples", o.samples);

  CLI::App* fixture_c = app.add_subcommand("fixture", "List bundled tables or print one");
  fixture_c->add_option("name", o.fixture_name);
  fixture_c->add_option("--format", o.format)->check(CLI::IsMember({"hyp", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Runner r(o, out);
    if (*check) return r.check();
    if (*beta_c) return r.beta_cmd();
    if (*gamma_c) return r.gamma_cmd();
    if (*heart_c) return r.heart_cmd();
    if (*derived_c) return r.derived_cmd();
    if (*subs) return r.subs_cmd();
    if (*quotient) return r.quotient_cmd();
    if (*product) return r.product_cmd();
    if (*sr) return r.sr_enum_cmd();
    if (*eval) return r.freeprod_eval();
    if (*psi_c) return r.freeprod_psi();
    if (*closure) return r.freeprod_closure();
    if (*conj) return r.freeprod_conjecture();
    if (*fixture_c) return r.fixture_cmd();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_resource_limit() ? kExitResourceLimit : kExitError;
  }
  return kExitError;
}

}  // namespace hyperkernel::cli
