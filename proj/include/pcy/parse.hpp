#ifndef PCY_PARSE_HPP
#define PCY_PARSE_HPP

#include <string_view>

#include "pcy/poly.hpp"

namespace pcy {

// Parses the expression grammar
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := 'x' uint | 'z' | rational | '(' expr ')' | '-' base
//   rational := int ('/' uint)?
// with precedence ^ > unary - > * > binary +,-. `x<k>` is variable k,
// `z` is zeta_N for the ring's root order N. Whitespace is insignificant;
// implicit multiplication is not allowed. Throws ParseError with the byte
// offset of the offending character.
Poly parse_poly(std::string_view text, const RingPtr& ring);

} // namespace pcy

#endif
