#include "hyperkernel/hypfile.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hyperkernel/error.hpp"
#include "hyperkernel/fixtures.hpp"

namespace hyperkernel {

namespace {

bool is_bare(char c) {
  switch (c) {
    case ' ':
    case '\t':
    case '\r':
    case '{':
    case '}':
    case ',':
    case '#':
    case '"':
    case ':':
      return false;
    default:
      return true;
  }
}

class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t lineno) : line_(line), lineno_(lineno) {}

  [[noreturn]] void error(ErrorKind kind, const std::string& what) const {
    fail(kind, std::to_string(lineno_) + ":" + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) ++pos_;
  }
  // End of content: end of line or a comment.
  bool done() {
    skip_space();
    return pos_ == line_.size() || line_[pos_] == '#';
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(ErrorKind::ParseError, std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && std::isalpha(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  std::string label() {
    skip_space();
    if (pos_ < line_.size() && line_[pos_] == '"') {
      std::string out;
      ++pos_;
      while (pos_ < line_.size() && line_[pos_] != '"') {
        if (line_[pos_] == '\\' && pos_ + 1 < line_.size()) ++pos_;
        out += line_[pos_++];
      }
      if (pos_ == line_.size()) error(ErrorKind::ParseError, "unterminated quoted label");
      ++pos_;
      return out;
    }
    const std::size_t start = pos_;
    while (pos_ < line_.size() && is_bare(line_[pos_])) ++pos_;
    if (pos_ == start) error(ErrorKind::ParseError, "expected a label");
    return std::string(line_.substr(start, pos_ - start));
  }

  // Rest of the line up to a comment, trimmed.
  std::string rest() {
    skip_space();
    std::size_t end = line_.find('#', pos_);
    if (end == std::string_view::npos) end = line_.size();
    std::string_view out = line_.substr(pos_, end - pos_);
    while (!out.empty() && (out.back() == ' ' || out.back() == '\t' || out.back() == '\r')) out.remove_suffix(1);
    pos_ = end;
    return std::string(out);
  }

 private:
  std::string_view line_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

std::string quote_if_needed(const std::string& label) {
  bool bare = !label.empty();
  for (char c : label) bare = bare && is_bare(c);
  if (bare && label != "name" && label != "elements" && label != "row") return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

HypDocument parse_hyp(std::string_view text) {
  HypDocument doc;
  std::vector<std::string> names;
  std::map<std::string, Element> index;
  std::vector<std::optional<std::vector<ElementSet>>> rows;
  bool have_elements = false;

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    LineCursor cur(text.substr(start, end - start), ++lineno);
    start = end + 1;
    if (cur.done()) continue;

    const std::size_t keyword_at = cur.pos();
    const std::string keyword = cur.word();
    if (keyword == "name") {
      cur.expect(':');
      if (have_elements) cur.error(ErrorKind::ParseError, "name must precede elements");
      doc.name = cur.rest();
    } else if (keyword == "elements") {
      cur.expect(':');
      if (have_elements) cur.error(ErrorKind::ParseError, "second elements line");
      have_elements = true;
      while (!cur.done()) {
        const std::size_t at = cur.pos();
        std::string l = cur.label();
        if (index.contains(l)) {
          cur.seek(at);
          cur.error(ErrorKind::DuplicateLabel, "label '" + l + "' listed twice");
        }
        index.emplace(l, static_cast<Element>(names.size()));
        names.push_back(std::move(l));
        cur.accept(',');
      }
      if (names.empty()) cur.error(ErrorKind::ParseError, "no elements listed");
      if (names.size() > kMaxCarrier) cur.error(ErrorKind::SizeExceeded, "more than 64 elements");
      rows.assign(names.size(), std::nullopt);
    } else if (keyword == "row") {
      if (!have_elements) cur.error(ErrorKind::ParseError, "row before elements line");
      const std::size_t at = cur.pos();
      const std::string l = cur.label();
      const auto it = index.find(l);
      if (it == index.end()) {
        cur.seek(at);
        cur.error(ErrorKind::UnknownLabel, "row for unknown label '" + l + "'");
      }
      if (rows[it->second]) {
        cur.seek(at);
        cur.error(ErrorKind::ParseError, "second row for '" + l + "'");
      }
      cur.expect(':');
      std::vector<ElementSet> cells;
      while (!cur.done()) {
        const std::size_t cell_at = cur.pos();
        cur.expect('{');
        ElementSet cell;
        if (cur.accept('}')) {
          cur.seek(cell_at);
          cur.error(ErrorKind::EmptyCell, "empty cell");
        }
        do {
          const std::size_t label_at = cur.pos();
          const std::string member = cur.label();
          const auto m = index.find(member);
          if (m == index.end()) {
            cur.seek(label_at);
            cur.error(ErrorKind::UnknownLabel, "unknown label '" + member + "'");
          }
          cell.insert(m->second);
        } while (cur.accept(','));
        cur.expect('}');
        cells.push_back(cell);
      }
      if (cells.size() != names.size()) {
        cur.error(ErrorKind::ParseError, "row '" + l + "' has " + std::to_string(cells.size()) + " cells, expected " +
                                             std::to_string(names.size()));
      }
      rows[it->second] = std::move(cells);
    } else {
      cur.seek(keyword_at);
      cur.error(ErrorKind::ParseError, "expected 'name:', 'elements:' or 'row'");
    }
  }
  if (!have_elements) fail(ErrorKind::ParseError, std::to_string(lineno) + ":1: missing elements line");
  std::vector<ElementSet> cells;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i]) fail(ErrorKind::ParseError, std::to_string(lineno) + ":1: missing row for '" + names[i] + "'");
    cells.insert(cells.end(), rows[i]->begin(), rows[i]->end());
  }
  doc.table = HyperTable(std::move(names), std::move(cells));
  return doc;
}

HypDocument parse_hyp_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("table")) {
    fail(ErrorKind::ParseError, "expected an object with elements and table");
  }
  HypDocument doc;
  try {
    if (j.contains("name")) doc.name = j.at("name").get<std::string>();
    std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
    std::map<std::string, Element> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!index.emplace(names[i], static_cast<Element>(i)).second) {
        fail(ErrorKind::DuplicateLabel, "label '" + names[i] + "' listed twice");
      }
    }
    const auto rows = j.at("table").get<std::vector<std::vector<std::vector<std::string>>>>();
    if (rows.size() != names.size()) fail(ErrorKind::ParseError, "table needs one row per element");
    std::vector<ElementSet> cells;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != names.size()) {
        fail(ErrorKind::ParseError, "row " + std::to_string(r) + " has the wrong number of cells");
      }
      for (const auto& cell : rows[r]) {
        if (cell.empty()) fail(ErrorKind::EmptyCell, "empty cell in row " + std::to_string(r));
        ElementSet s;
        for (const std::string& l : cell) {
          const auto m = index.find(l);
          if (m == index.end()) fail(ErrorKind::UnknownLabel, "unknown label '" + l + "'");
          s.insert(m->second);
        }
        cells.push_back(s);
      }
    }
    doc.table = HyperTable(std::move(names), std::move(cells));
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("wrong JSON shape: ") + e.what());
  }
  return doc;
}

std::string emit_hyp(const HyperTable& h, const std::optional<std::string>& name) {
  const std::size_t n = h.size();
  std::vector<std::string> labels;
  for (const std::string& l : h.names()) labels.push_back(quote_if_needed(l));

  std::vector<std::string> cells(n * n);
  std::vector<std::size_t> width(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::string c = "{";
      for (Element x : h.cell(a, b)) c += (c.size() > 1 ? "," : "") + labels[x];
      c += "}";
      width[b] = std::max(width[b], c.size());
      cells[a * n + b] = std::move(c);
    }
  }
  std::size_t label_width = 0;
  for (const std::string& l : labels) label_width = std::max(label_width, l.size());

  std::ostringstream out;
  if (name) out << "name: " << *name << "\n";
  out << "elements:";
  for (const std::string& l : labels) out << ' ' << l;
  out << "\n";
  for (Element a = 0; a < n; ++a) {
    std::string line = "row " + labels[a] + ":" + std::string(label_width - labels[a].size(), ' ');
    for (Element b = 0; b < n; ++b) {
      line += ' ';
      line += cells[a * n + b];
      if (b + 1 < n) line += std::string(width[b] - cells[a * n + b].size(), ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

std::string emit_hyp_json(const HyperTable& h, const std::optional<std::string>& name) {
  nlohmann::json j;
  if (name) j["name"] = *name;
  j["elements"] = h.names();
  nlohmann::json table = nlohmann::json::array();
  for (Element a = 0; a < h.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Element b = 0; b < h.size(); ++b) {
      nlohmann::json cell = nlohmann::json::array();
      for (Element x : h.cell(a, b)) cell.push_back(h.name(x));
      row.push_back(cell);
    }
    table.push_back(row);
  }
  j["table"] = table;
  return j.dump() + "\n";
}

HypDocument load_document(const std::string& path_or_fixture) {
  const std::filesystem::path path(path_or_fixture);
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return path.extension() == ".json" ? parse_hyp_json(buf.str()) : parse_hyp(buf.str());
  }
  std::string name = path_or_fixture;
  if (name.size() > 4 && name.ends_with(".hyp")) name.resize(name.size() - 4);
  if (const std::optional<std::string> text = fixture_text(name)) return parse_hyp(*text);
  fail(ErrorKind::UnknownFixture, "no such file or fixture: " + path_or_fixture);
}

}  // namespace hyperkernel
