#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hyperkernel/freeprod.hpp"
#include "hyperkernel/group.hpp"
#include "hyperkernel/hypertable.hpp"
#include "hyperkernel/partition.hpp"
#include "hyperkernel/quotients.hpp"
#include "hyperkernel/relations.hpp"

namespace hyperkernel::report {

using Json = nlohmann::json;

/// Compact dump with sorted keys and a trailing newline; byte-stable.
std::string canonical(const Json& j);

/// Sorted label array.
Json set_json(const HyperTable& h, ElementSet s);
/// Classes as sorted label arrays, the classes themselves sorted.
Json partition_json(const HyperTable& h, const Partition& p);
Json verdict_json(const HyperTable& h, const Verdict& v);
/// {"elements": [index order], "cells": [[sorted labels]]}.
Json table_json(const HyperTable& h);
Json group_json(const GroupTable& g);
/// Short name for small groups ("Z4", "V4", "S3"), or null.
Json group_name(const GroupTable& g);

Json structure_json(const HyperTable& h, const StructureReport& r);
Json quotient_json(const HyperTable& h, const Partition& r);
Json sublattice_json(const HyperTable& h, const SubLattice& lattice);
Json coset_quotient_json(const HyperTable& h, const CosetQuotient& q);
Json correspondence_json(const HyperTable& h, const CorrespondenceReport& r);
Json product_json(const ProductReport& r);
Json direct_sum_json(const AbelianizedFamily& family, const DirectSumElement& s);

/// Indented plain-text rendering of a report for terminals.
std::string human(const Json& j);

}  // namespace hyperkernel::report
