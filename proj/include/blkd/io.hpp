#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace blkd {

// Plain-text instance format:
//   blockade k=<k> n=<n>
//   block <i>: <space-separated vertex ids>   (one line per block, i = 0..k-1)
//   edges:
//   <u> <v>                                   (one pair per line, set semantics)
// '#' starts a comment, blank lines are skipped. Writing is canonical: blocks
// by index with ascending vertices, edges lexicographic with u < v.

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

Blockade read_instance(std::istream& in);
Blockade read_instance_string(const std::string& text);
Blockade read_instance_file(const std::string& path);

std::string write_instance(const Blockade& b);
void write_instance_file(const Blockade& b, const std::string& path);

// Pattern files: "pattern n=<k> ordered=<0|1>", then "edges:" and pairs.
Pattern read_pattern_string(const std::string& text);
Pattern read_pattern_file(const std::string& path);
std::string write_pattern(const Pattern& p);

}  // namespace blkd
