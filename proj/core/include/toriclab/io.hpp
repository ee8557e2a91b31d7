#pragma once

#include "toriclab/divisoriality.hpp"
#include "toriclab/quotients.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace toriclab {

/// JSON readers and writers. Every reader throws InputError on malformed
/// documents. Indices in files are 0-based. Integers may be given as JSON
/// numbers or, when too large for 64 bits, as decimal strings.

std::string read_text_file(const std::filesystem::path& path);

/// { "rank": n, "rays": [[...],...], "max_cones": [[...],...], "name": s? }
Fan parse_fan(std::string_view text);
Fan read_fan(const std::filesystem::path& path);
std::string fan_to_json(const Fan& f);

/// { "rows": r, "cols": c, "entries": [[...],...], "name": s? }
LatticeMap parse_lattice_map(std::string_view text);
LatticeMap read_lattice_map(const std::filesystem::path& path);
std::string lattice_map_to_json(const LatticeMap& m);

std::string kdiv_report_to_json(const KDivReport& r);

}  // namespace toriclab
