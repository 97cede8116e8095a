#pragma once

#include "hv/algebra.hpp"

namespace hv {

// Recursive-descent parser for the canonical element grammar:
//
//   element := ['-'] term (('+'|'-') term)*
//   term    := [scalar '*'] primary | scalar
//   primary := symbol | '(' element ')'
//   symbol  := ('L'|'I') '(' coords ')' | 'D' '(' coords ';' nat ')'
//            | 'C_L' | 'C_I' | 'C_LI'
//   coords  := rational (',' rational)*
//   scalar  := ['-'] (body | '(' body ')')
//   body    := rational | rational ('+'|'-') sqrtpart | [rational '*'] sqrtpart
//   sqrtpart:= 'sqrt' '(' nat ')' with optional rational coefficient
//
// Whitespace-insensitive. A bare scalar term multiplies the unit element
// (I(0) in D1/HV, D(0;0) in D; W has none). Syntax errors carry a 1-based
// offset. parse(print(e)) == e; printing parses back canonically.
AlgebraElement parse_element(std::string_view text, const GroupInstance& g, AlgebraTag tag);

// Scalar literal in the same grammar ("3", "-1/2", "1/2+1/3*sqrt(2)", ...).
Scalar parse_scalar_text(std::string_view text);

// Comma-separated group element coordinates ("2", "-1,3", "1/2" for Q).
GroupElement parse_coords(std::string_view text, const GroupInstance& g);

}  // namespace hv
