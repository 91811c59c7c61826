#ifndef REGAL_PARSE_HPP
#define REGAL_PARSE_HPP

#include <string>
#include <vector>

#include "regal/poly.hpp"

namespace regal {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

// Splits text into tokens, stripping '#' comments. Newlines are whitespace.
// Positions are 1-based.
std::vector<Token> tokenize(const std::string& text);

// Parses one polynomial in the ring's variables: terms joined by '+'/'-',
// factors joined by '*', powers with '^', integer literals reduced mod p.
SparsePoly parse_poly(const RingPtr& ring, const std::string& text);

// Parses a comma-separated polynomial list; an empty/whitespace text gives {}.
std::vector<SparsePoly> parse_poly_list(const RingPtr& ring, const std::string& text);

// Token-stream polynomial parser used by the file reader as well. Consumes tokens
// from pos until a comma or end; leaves pos at the stopping token.
SparsePoly parse_poly_tokens(const RingPtr& ring, const std::vector<Token>& toks, size_t& pos);

} // namespace regal

#endif
