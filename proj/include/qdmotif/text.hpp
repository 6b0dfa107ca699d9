#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qdmotif {

// Shortest decimal form that parses back to the same double. Keeps CSV and
// JSON output stable across identically-seeded runs.
std::string fmt_double(double x);

std::string_view trim(std::string_view s);
std::vector<std::string> split_ws(std::string_view s);
std::string to_lower(std::string_view s);

}  // namespace qdmotif
