#pragma once

#include <iosfwd>
#include <string>

#include "hypersat/hypergraph.hpp"

namespace hypersat {

// `.lhg` text format: a header `lhg <r> <n>`, then one edge per line as r
// whitespace-separated vertex ids. Blank lines and `#` comments are skipped.
// Invariant violations are reported as the original error code with the
// offending line number in the message.
LinearHypergraph read_lhg(std::istream& in);
LinearHypergraph read_lhg_file(const std::string& path);

// Edges are written in lexicographic order so that write(read(x)) == x for
// any canonical file.
void write_lhg(std::ostream& out, const LinearHypergraph& g);
std::string to_lhg_string(const LinearHypergraph& g);

}  // namespace hypersat
