#ifndef REGAL_RINGFILE_HPP
#define REGAL_RINGFILE_HPP

#include <string>
#include <vector>

#include "regal/poly.hpp"

namespace regal {

// Ring description file:
//   field <p>
//   vars <id> <id> ...
//   ideal <poly>, <poly>, ...
// The ideal section is optional; a bare `ideal` means the zero ideal. '#'
// starts a comment. Newlines are ordinary whitespace, so the sections may
// share a line, but they must appear in this order. `field`, `vars` and
// `ideal` are reserved and cannot name variables.
struct RingFileData {
    RingPtr ring;
    std::vector<SparsePoly> ideal;
};

// Throws ParseError with 1-based position on malformed text.
RingFileData parse_ring_file(const std::string& text);

// Reads and parses a file; an unreadable path raises Error.
RingFileData load_ring_file(const std::string& path);

// Canonical three-line form; parse_ring_file(print_ring_file(r, I)) rebuilds
// the same field, variables and ideal.
std::string print_ring_file(const RingPtr& ring, const std::vector<SparsePoly>& ideal);

} // namespace regal

#endif
