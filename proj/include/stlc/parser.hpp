#pragma once

#include <string>
#include <string_view>

#include "stlc/syntax.hpp"

namespace stlc {

// Concrete syntax:
//
//   term  := lambda | if term then term else term | atom+
//   lambda:= ('\' | 'λ') ident (':' type)? '.' term     -- body extends right
//   atom  := ident | 'true' | 'false' | '(' term ')'
//   type  := tatom ('->' type)?                          -- right associative
//   tatom := 'Bool' | '(' type ')'
//   ctx   := (ident ':' type) (',' ident ':' type)*      -- rightmost = index 0
//
// Application is juxtaposition, left associative. Identifiers are
// [A-Za-z_][A-Za-z0-9_']* excluding the keywords if/then/else/true/false/Bool.
// All parse failures throw ParseError with a byte span into the input.

SurfacePtr parse_term(std::string_view src);
TyPtr parse_type(std::string_view src);
Ctx parse_ctx(std::string_view src);

// Minimal-parenthesis printers; output reparses to the same tree.
std::string print_term(const SurfacePtr& t);
std::string print_type(const TyPtr& ty);

}  // namespace stlc
