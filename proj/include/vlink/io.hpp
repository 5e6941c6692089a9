#ifndef VLINK_IO_HPP
#define VLINK_IO_HPP

#include <string>

#include "vlink/cuts.hpp"
#include "vlink/diagram.hpp"

namespace vlink {

struct ParseError : Error {
  ParseError(int line_arg, const std::string& what_arg)
      : Error("line " + std::to_string(line_arg) + ": " + what_arg),
        line(line_arg) {}
  int line;
};

struct Parsed {
  Diagram diagram;
  CutSystem cuts;
};

// Text format, one component per line:
//   O12- U3+ !+ U12- !- O3+
// '#' starts a comment, blank lines are skipped.  A passage token is O or U,
// a crossing id, and a sign.  A cut mark !+ / !- sits in the gap at its
// position; marks written before the first passage belong to the wrap gap,
// after its trailing marks.  A free loop is "()" on its own line, or
// "( !+ !- )" when it carries marks.
Parsed parse_diagram(const std::string& text);

// Inverse of parse_diagram up to token spacing: components in stored order,
// tokens single-space separated, marks emitted after the gap's passage.
// Throws Error if p does not sit on d.
std::string serialize(const Diagram& d, const CutSystem& p = {});

}  // namespace vlink

#endif
