#pragma once

#include <string>

#include "voa/fock.hpp"

namespace voa {

// Expression grammar:
//   element  := ['+'|'-'] term (('+'|'-') term)*
//   term     := [rational '*'] gen* charge
//   gen      := name '(' '-' uint ')'
//   charge   := 'E[' rational (',' rational)* [';L'] ']' | 'vac'
//   rational := ['-'] uint ['/' uint]
// Whitespace is free between tokens. ';L' attaches the configured lambda.
FockVector parse_element(const std::string& text, const Context& ctx);

}  // namespace voa
