#pragma once

#include "z3qg/algebra.hpp"

#include <string>

namespace z3qg {

// Text form of a presentation, one item per line ('#' starts a comment):
//   presentation NAME
//   NAME GRADE [nilpotent M | invertible]
//   LHS -> EXPR
// LHS is a pair of letters (g*h, g^-1*h) or a power g^M; EXPR uses the
// expression grammar over the declared generators.
PresentationPtr read_presentation(const std::string& text);
// Generators and user rules; derived rules are rebuilt on reading.
std::string write_presentation(const Presentation& p);
// A catalog name, or else a path to a presentation file.
PresentationPtr load_presentation(const std::string& name_or_path);

}  // namespace z3qg
