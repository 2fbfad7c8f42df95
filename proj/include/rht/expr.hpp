#pragma once

#include "rht/grade.hpp"

#include <string>

namespace rht {

// expr     := ('+'|'-')? term (('+'|'-') term)*
// term     := rational ('*' monomial)? | monomial
// monomial := gen ('*' gen)*
// rational := int ('/' int)?
// gen      := identifier ('^' int)?
//
// ParseError kinds: SyntaxError, UnknownGenerator, OddPower; position is the
// 0-based offset of the offending token.
Element parse_element(const std::string& text, AlgebraPtr algebra);

} // namespace rht
