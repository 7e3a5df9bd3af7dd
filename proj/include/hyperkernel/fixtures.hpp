#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperkernel/hypertable.hpp"

namespace hyperkernel {

/// Names of the bundled tables: h9, h9-quotient, z2, z3, z4, v4, s3, t2, t3, t4.
const std::vector<std::string>& fixture_names();

/// Hyp-format source of a fixture, or nullopt for an unknown name.
std::optional<std::string> fixture_text(std::string_view name);

/// Throws UnknownFixture.
HyperTable fixture(std::string_view name);

}  // namespace hyperkernel
