#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hyperkernel/hypertable.hpp"

namespace hyperkernel {

/// A parsed table plus its optional `name:` line.
struct HypDocument {
  std::optional<std::string> name;
  HyperTable table;
};

/// Line-oriented text format:
///
///   # comment
///   name: h9
///   elements: e a b
///   row e: {e} {a} {b}
///   row a: {a} {e,b} {b}
///   ...
///
/// Rows may come in any order but each label needs exactly one. Labels are
/// bare runs without whitespace or any of {},#":, or double-quoted with \"
/// and \\ escapes. Errors report "line:column". Throws ParseError,
/// DuplicateLabel, EmptyCell or UnknownLabel.
HypDocument parse_hyp(std::string_view text);
/// {"name": ..., "elements": [...], "table": [[[labels], ...], ...]}.
HypDocument parse_hyp_json(std::string_view text);

/// Inverse of parse_hyp; quotes labels only when needed.
std::string emit_hyp(const HyperTable& h, const std::optional<std::string>& name = std::nullopt);
std::string emit_hyp_json(const HyperTable& h, const std::optional<std::string>& name = std::nullopt);

/// Reads a file (JSON when it ends in .json), or falls back to the bundled
/// fixture of that name with any ".hyp" suffix dropped. Throws
/// UnknownFixture when neither exists.
HypDocument load_document(const std::string& path_or_fixture);

}  // namespace hyperkernel
