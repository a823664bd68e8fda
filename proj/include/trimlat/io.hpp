#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "trimlat/lattice.hpp"

namespace trimlat {

/// JSON lattice format: {"size": N, "covers": [[i, j], ...], "names": [...]}.
/// Errors name the offending entry and carry MalformedFile.
Lattice lattice_from_json(std::string_view text);
/// Normalized form: keys in the order size, covers, names; covers sorted.
std::string lattice_to_json(const Lattice& lat);

Lattice read_lattice_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Hasse diagram, edges bottom to top in edge-index order. When labels is
/// non-empty it is indexed by edge.
std::string lattice_to_dot(const Lattice& lat, std::span<const std::string> labels = {});

}  // namespace trimlat
