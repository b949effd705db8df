#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ordtop/structures.hpp"

namespace ordtop {

// Input problem: carries 1-based line/col of the offending token.  The
// formatted what() is what the CLI prints before exiting with status 2.
struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

// A parsed input: named points plus any of the three optional layers.
// The order layer is stored reflexively-transitively closed; the relation
// layer is kept literal (C-relation candidates need not be transitive).
struct Structure {
  Carrier carrier;
  std::optional<FinTopology> topology;
  std::optional<FinQoset> order;
  std::optional<Rel> relation;
};

// Accepts either the line-oriented text format or a JSON object (detected
// by a leading '{').  Throws ParseError on malformed input, including
// topology axiom failures, which report a concrete witness.
Structure parse_structure(const std::string& text);

// Canonical renderings: fixed section order, sets ascending by bitmask,
// pairs ascending by index.  parse(serialize(s)) == s and serializing
// again is byte-identical.
std::string serialize_text(const Structure& s);
std::string serialize_json(const Structure& s);

}  // namespace ordtop
