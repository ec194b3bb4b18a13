#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lagrangia/hypergraph.hpp"

namespace lagrangia {

// `.hg` text format: a header line `r n`, then one edge per line as
// space-separated 1-based labels. `#` starts a comment, blank lines are
// skipped. Writing emits edges in lexicographic order, so
// write(read(write(g))) reproduces the same bytes.

Hypergraph read_hg(std::istream& in);
Hypergraph parse_hg(const std::string& text);
Hypergraph load_hg(const std::filesystem::path& path);

void write_hg(std::ostream& out, const Hypergraph& g);
std::string format_hg(const Hypergraph& g);
void save_hg(const std::filesystem::path& path, const Hypergraph& g);

}  // namespace lagrangia
