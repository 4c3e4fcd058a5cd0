#pragma once
// Internal: raw table data -> materialized catalog records.

#include "cpgate/catalog.hpp"

namespace cpgate {
namespace catalog {
namespace detail {

std::vector<NamedSequence> build_all_records();

} // namespace detail
} // namespace catalog
} // namespace cpgate
