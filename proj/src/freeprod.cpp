#include "hyperkernel/freeprod.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "hyperkernel/error.hpp"
#include "hyperkernel/quotients.hpp"

namespace hyperkernel {

std::strong_ordering ReducedWord::operator<=>(const ReducedWord& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  for (std::size_t i = 0; i < size(); ++i) {
    if (auto c = letters[i].factor <=> other.letters[i].factor; c != 0) return c;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (auto c = letters[i].elem <=> other.letters[i].elem; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

FactorRegistry::FactorRegistry(std::vector<HyperTable> factors, std::size_t census_cap) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    HyperTable& h = factors[i];
    const std::string where = "factor " + std::to_string(i);
    const Verdict strong = is_strongly_regular_hg(h);
    if (!strong) fail(ErrorKind::NotStronglyRegular, where + ": " + strong.witness->reason);
    const ElementSet e = identities(h);
    if (e.size() != 1) fail(ErrorKind::NotStronglyRegular, where + " has " + std::to_string(e.size()) + " identities");

    const Element identity = e.first();
    std::vector<Element> inverse;
    for (Element x = 0; x < h.size(); ++x) inverse.push_back(inverse_candidates(h, x).both.first());
    Partition b = beta(h, census_cap);
    Partition g = gamma(h, census_cap);
    const ElementSet kernel = kernel_S(h, b);
    GroupTable quotient = *quotient_by(h, b).group;
    std::vector<Element> projection;
    for (Element x = 0; x < h.size(); ++x) projection.push_back(static_cast<Element>(b.class_of(x)));
    const bool polygroup = static_cast<bool>(is_polygroup(h));
    Factor f{std::move(h), identity, std::move(inverse), std::move(b), std::move(g), kernel, std::move(quotient),
             std::move(projection), polygroup};
    factors_.push_back(std::move(f));
  }
}

std::vector<GroupTable> FactorRegistry::quotient_groups() const {
  std::vector<GroupTable> out;
  for (const Factor& f : factors_) out.push_back(f.quotient);
  return out;
}

bool FactorRegistry::all_polygroups() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.polygroup; });
}

namespace {

// size_of(i) and identity_of(i) describe factor i.
template <typename IdentityOf, typename SizeOf>
void validate_letters(const std::vector<Letter>& letters, std::size_t factors, SizeOf size_of,
                      IdentityOf identity_of) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[i];
    if (l.factor >= factors || l.elem >= size_of(l.factor)) {
      fail(ErrorKind::InvalidLetter, "letter " + std::to_string(i) + " is outside the registry");
    }
    if (l.elem == identity_of(l.factor)) {
      fail(ErrorKind::IdentityLetter, "letter " + std::to_string(i) + " is the identity of its factor");
    }
    if (i > 0 && letters[i - 1].factor == l.factor) {
      fail(ErrorKind::AdjacentSameFactor, "letters " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                              " share factor " + std::to_string(l.factor));
    }
  }
}

void product_into(const FactorRegistry& reg, const std::vector<Letter>& a, std::size_t p,
                  const std::vector<Letter>& b, std::size_t q, WordSet& out) {
  if (p == 0 || q == b.size() || a[p - 1].factor != b[q].factor) {
    ReducedWord w;
    w.letters.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(p));
    w.letters.insert(w.letters.end(), b.begin() + static_cast<std::ptrdiff_t>(q), b.end());
    out.insert(std::move(w));
    return;
  }
  const Letter l = a[p - 1];
  const Letter r = b[q];
  const Factor& f = reg.factor(l.factor);
  const bool cancelling = f.inverse[l.elem] == r.elem;
  for (Element x : f.table.cell(l.elem, r.elem)) {
    if (x == f.identity) {
      if (!cancelling) {
        fail(ErrorKind::InvariantViolation, "identity in a∘b for non-inverse letters of factor " +
                                                std::to_string(l.factor));
      }
      product_into(reg, a, p - 1, b, q + 1, out);
      continue;
    }
    ReducedWord w;
    w.letters.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(p - 1));
    w.letters.push_back(Letter{l.factor, x});
    w.letters.insert(w.letters.end(), b.begin() + static_cast<std::ptrdiff_t>(q + 1), b.end());
    out.insert(std::move(w));
  }
}

std::vector<Element> non_identities(const Factor& f) {
  std::vector<Element> out;
  for (Element x = 0; x < f.table.size(); ++x) {
    if (x != f.identity) out.push_back(x);
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

ReducedWord make_word(const FactorRegistry& registry, std::vector<Letter> letters) {
  validate_letters(
      letters, registry.size(), [&](std::size_t i) { return registry.factor(i).table.size(); },
      [&](std::size_t i) { return registry.factor(i).identity; });
  return ReducedWord{std::move(letters)};
}

ReducedWord inverse_word(const FactorRegistry& registry, const ReducedWord& w) {
  ReducedWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(Letter{it->factor, registry.factor(it->factor).inverse[it->elem]});
  }
  return out;
}

ReducedWord embed(const FactorRegistry& registry, std::size_t i, Element x) {
  if (x == registry.factor(i).identity) return {};
  return make_word(registry, {Letter{i, x}});
}

std::set<Letter> support(const ReducedWord& w) { return {w.letters.begin(), w.letters.end()}; }

WordSet multiply(const FactorRegistry& registry, const ReducedWord& w1, const ReducedWord& w2) {
  WordSet out;
  product_into(registry, w1.letters, w1.size(), w2.letters, 0, out);
  return out;
}

WordSet multiply(const FactorRegistry& registry, const WordSet& a, const WordSet& b) {
  WordSet out;
  for (const ReducedWord& u : a) {
    for (const ReducedWord& v : b) out.merge(multiply(registry, u, v));
  }
  return out;
}

GroupFreeProduct::GroupFreeProduct(std::vector<GroupTable> groups) : groups_(std::move(groups)) {}

ReducedWord GroupFreeProduct::make_word(std::vector<Letter> letters) const {
  validate_letters(
      letters, groups_.size(), [&](std::size_t i) { return groups_[i].size(); },
      [&](std::size_t i) { return groups_[i].identity(); });
  return ReducedWord{std::move(letters)};
}

ReducedWord GroupFreeProduct::reduce(const std::vector<Letter>& letters) const {
  ReducedWord out;
  for (const Letter& l : letters) {
    if (l.factor >= groups_.size() || l.elem >= groups_[l.factor].size()) {
      fail(ErrorKind::InvalidLetter, "letter outside the group family");
    }
    const GroupTable& g = groups_[l.factor];
    if (l.elem == g.identity()) continue;
    if (!out.empty() && out.letters.back().factor == l.factor) {
      const Element p = g.mul(out.letters.back().elem, l.elem);
      out.letters.pop_back();
      if (p != g.identity()) out.letters.push_back(Letter{l.factor, p});
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

ReducedWord GroupFreeProduct::multiply(const ReducedWord& a, const ReducedWord& b) const {
  std::vector<Letter> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return reduce(letters);
}

ReducedWord GroupFreeProduct::inverse(const ReducedWord& w) const {
  ReducedWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(Letter{it->factor, groups_[it->factor].inverse(it->elem)});
  }
  return out;
}

ReducedWord phi(const FactorRegistry& registry, const GroupFreeProduct& target, const ReducedWord& w) {
  std::vector<Letter> image;
  for (const Letter& l : w.letters) image.push_back(Letter{l.factor, registry.factor(l.factor).projection[l.elem]});
  return target.reduce(image);
}

DirectSumElement psi(const AbelianizedFamily& family, const ReducedWord& w) {
  DirectSumElement sum;
  for (const Letter& l : w.letters) sum = direct_sum_add(family, sum, direct_sum_embed(family, l.factor, l.elem));
  return sum;
}

std::uint64_t count_words(const FactorRegistry& registry, std::size_t max_len) {
  const std::size_t k = registry.size();
  std::vector<std::uint64_t> letters(k);
  for (std::size_t i = 0; i < k; ++i) letters[i] = registry.factor(i).table.size() - 1;
  // ending[i]: words of the current length whose last letter is in factor i.
  std::vector<std::uint64_t> ending = letters;
  std::uint64_t total = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::uint64_t all = 0;
    for (std::uint64_t c : ending) all = saturating_add(all, c);
    total = saturating_add(total, all);
    std::vector<std::uint64_t> next(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t others = all == std::numeric_limits<std::uint64_t>::max() ? all : all - ending[i];
      next[i] = saturating_mul(letters[i], others);
    }
    ending = std::move(next);
  }
  return total;
}

std::vector<ReducedWord> enumerate_words(const FactorRegistry& registry, std::size_t max_len,
                                         std::uint64_t budget) {
  const std::uint64_t count = count_words(registry, max_len);
  if (count > budget) {
    fail(ErrorKind::BudgetExceeded,
         std::to_string(count) + " words up to length " + std::to_string(max_len) + " exceed budget " +
             std::to_string(budget));
  }
  std::vector<std::vector<Element>> letters;
  for (std::size_t i = 0; i < registry.size(); ++i) letters.push_back(non_identities(registry.factor(i)));

  std::vector<ReducedWord> out{ReducedWord{}};
  std::vector<ReducedWord> frontier{ReducedWord{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<ReducedWord> next;
    for (const ReducedWord& w : frontier) {
      for (std::size_t f = 0; f < registry.size(); ++f) {
        if (!w.empty() && w.letters.back().factor == f) continue;
        for (Element x : letters[f]) {
          ReducedWord v = w;
          v.letters.push_back(Letter{f, x});
          next.push_back(std::move(v));
        }
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

bool word_inverse_unique(const FactorRegistry& registry, const ReducedWord& w, std::size_t max_len,
                         std::uint64_t budget) {
  const ReducedWord one;
  std::optional<ReducedWord> found;
  for (const ReducedWord& v : enumerate_words(registry, max_len, budget)) {
    if (multiply(registry, w, v).contains(one) && multiply(registry, v, w).contains(one)) {
      if (found) return false;
      found = v;
    }
  }
  return found && *found == inverse_word(registry, w);
}

ReducedWord random_word(const FactorRegistry& registry, std::size_t max_len, std::mt19937_64& rng) {
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (registry.factor(i).table.size() > 1) usable.push_back(i);
  }
  ReducedWord w;
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  for (std::size_t pos = 0; pos < len; ++pos) {
    std::vector<std::size_t> choices;
    for (std::size_t f : usable) {
      if (w.empty() || w.letters.back().factor != f) choices.push_back(f);
    }
    if (choices.empty()) break;
    const std::size_t f = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    const std::vector<Element> pool = non_identities(registry.factor(f));
    w.letters.push_back(Letter{f, pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]});
  }
  return w;
}

ClosureReport polygroup_closure_check(const FactorRegistry& registry, std::size_t max_len, std::size_t samples,
                                      std::uint64_t seed) {
  if (!registry.all_polygroups()) fail(ErrorKind::FactorsNotPolygroups, "every factor must be a polygroup");
  std::mt19937_64 rng(seed);
  ClosureReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const ReducedWord w2 = random_word(registry, max_len, rng);
    const ReducedWord w3 = random_word(registry, max_len, rng);
    const WordSet prod = multiply(registry, w2, w3);
    auto it = prod.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(std::uniform_int_distribution<std::size_t>(0, prod.size() - 1)(rng)));
    const ReducedWord& w1 = *it;
    ++report.triples;
    const bool left = multiply(registry, w1, inverse_word(registry, w3)).contains(w2);
    const bool right = multiply(registry, inverse_word(registry, w2), w1).contains(w3);
    if (!left || !right) {
      if (!report.first_failure) report.first_failure = std::vector<ReducedWord>{w1, w2, w3};
      ++report.failures;
    }
  }
  return report;
}

namespace {

// Letterwise coset image of a word, multiplied out in the quotient product.
WordSet coset_image(const FactorRegistry& quotients, const std::vector<CosetQuotient>& q, const ReducedWord& w) {
  WordSet acc{ReducedWord{}};
  for (const Letter& l : w.letters) {
    const ReducedWord letter = embed(quotients, l.factor, static_cast<Element>(q[l.factor].coset_of(l.elem)));
    acc = multiply(quotients, acc, WordSet{letter});
  }
  return acc;
}

}  // namespace

ConjectureEvidence quotient_conjecture_check(const FactorRegistry& registry, const std::vector<ElementSet>& subs,
                                             std::size_t max_len, std::size_t samples, std::uint64_t seed) {
  if (subs.size() != registry.size()) {
    fail(ErrorKind::ShapeMismatch, "need one subhypergroup per factor");
  }
  ConjectureEvidence ev;
  ev.max_len = max_len;
  std::vector<CosetQuotient> q;
  std::vector<HyperTable> tables;
  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      q.push_back(quotient_hypergroup(registry.factor(i).table, subs[i]));
      tables.push_back(q.back().table);
    }
  } catch (const Error& e) {
    if (e.is_resource_limit()) throw;
    ev.note = std::string("coset quotient unavailable: ") + e.what();
    return ev;
  }
  std::optional<FactorRegistry> quotients;
  try {
    quotients.emplace(std::move(tables));
  } catch (const Error& e) {
    if (e.is_resource_limit()) throw;
    ev.note = std::string("quotient factors do not form a registry: ") + e.what();
    return ev;
  }
  ev.applicable = true;
  ev.quotient_words = count_words(*quotients, max_len);

  WordSet hit;
  for (const ReducedWord& w : enumerate_words(registry, max_len)) {
    for (const ReducedWord& v : coset_image(*quotients, q, w)) {
      if (v.size() <= max_len) hit.insert(v);
    }
  }
  ev.images_hit = hit.size();

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const ReducedWord w1 = random_word(registry, max_len, rng);
    const ReducedWord w2 = random_word(registry, max_len, rng);
    WordSet lhs;
    for (const ReducedWord& u : multiply(registry, w1, w2)) lhs.merge(coset_image(*quotients, q, u));
    const WordSet rhs = multiply(*quotients, coset_image(*quotients, q, w1), coset_image(*quotients, q, w2));
    ++ev.pairs;
    if (lhs == rhs) ++ev.homomorphic_pairs;
  }
  return ev;
}

ReducedWord parse_word(const FactorRegistry& registry, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) fail(ErrorKind::ParseError, "empty word text; write 1 for the empty word");
  if (tokens.size() == 1 && tokens[0] == "1") return {};

  std::vector<Letter> letters;
  for (const std::string& tok : tokens) {
    const std::size_t at = tok.rfind('@');
    if (at == std::string::npos || at == 0 || at + 1 == tok.size()) {
      fail(ErrorKind::ParseError, "letter '" + tok + "' is not of the form name@factor");
    }
    std::size_t factor = 0;
    const char* first = tok.data() + at + 1;
    const char* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, factor);
    if (ec != std::errc{} || ptr != last) fail(ErrorKind::ParseError, "bad factor index in '" + tok + "'");
    if (factor >= registry.size()) fail(ErrorKind::InvalidLetter, "no factor " + std::to_string(factor));
    const std::optional<Element> x = registry.factor(factor).table.find(tok.substr(0, at));
    if (!x) fail(ErrorKind::UnknownLabel, "factor " + std::to_string(factor) + " has no element " + tok.substr(0, at));
    letters.push_back(Letter{factor, *x});
  }
  return make_word(registry, std::move(letters));
}

std::string format_word(const FactorRegistry& registry, const ReducedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += registry.factor(l.factor).table.name(l.elem) + "@" + std::to_string(l.factor);
  }
  return out;
}

std::string format_group_word(const GroupFreeProduct& product, const ReducedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += product.group(l.factor).name(l.elem) + "@" + std::to_string(l.factor);
  }
  return out;
}

}  // namespace hyperkernel
