#pragma once

// Polynomial expressions in ASCII:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := integer | name | '(' expr ')' | factor '^' integer
//
// Names match [A-Za-z][A-Za-z0-9_]* and must be generators of the target
// signature. Whitespace is ignored between tokens.

#include <cstddef>
#include <string>
#include <string_view>

#include "fibtc/polynomial.hpp"

namespace fibtc {

class ParseError : public AlgebraError {
public:
    ParseError(const std::string& message, std::size_t position);

    /// Zero-based offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Polynomial parse(std::string_view text, const SignaturePtr& sig);

}  // namespace fibtc
