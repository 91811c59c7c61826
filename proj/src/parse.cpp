#include "regal/parse.hpp"

#include <cctype>

namespace regal {

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> toks;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') { ++line; col = 1; }
            else ++col;
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            size_t j = i;
            while (j < text.size() && text[j] != '\n') ++j;
            advance(j - i);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
        int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            toks.push_back({Tok::Int, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            toks.push_back({Tok::Ident, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case ',': k = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        toks.push_back({k, std::string(1, c), tl, tc});
        advance(1);
    }
    int el = line, ec = col;
    toks.push_back({Tok::End, "", el, ec});
    return toks;
}

namespace {

uint32_t parse_literal_modp(const Token& t, const PrimeField& F) {
    uint64_t v = 0;
    for (char ch : t.text)
        v = (v * 10 + static_cast<uint64_t>(ch - '0')) % F.characteristic();
    return static_cast<uint32_t>(v);
}

uint32_t parse_exponent(const Token& t) {
    if (t.text.size() > 5)
        throw ParseError("exponent too large: " + t.text, t.line, t.col);
    uint32_t v = 0;
    for (char ch : t.text) v = v * 10 + static_cast<uint32_t>(ch - '0');
    if (v >= (1u << 15))
        throw ParseError("exponent too large: " + t.text, t.line, t.col);
    return v;
}

size_t var_index(const RingPtr& ring, const Token& t) {
    for (size_t i = 0; i < ring->nvars(); ++i)
        if (ring->var_name(i) == t.text) return i;
    throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
}

// factor := INT | IDENT ['^' INT]; multiplies the result into (coeff, mono).
void parse_factor(const RingPtr& ring, const std::vector<Token>& toks, size_t& pos,
                  uint32_t& coeff, Monomial& mono) {
    const Token& t = toks[pos];
    if (t.kind == Tok::Int) {
        coeff = ring->field().mul(coeff, parse_literal_modp(t, ring->field()));
        ++pos;
        return;
    }
    if (t.kind == Tok::Ident) {
        size_t vi = var_index(ring, t);
        ++pos;
        uint32_t e = 1;
        if (toks[pos].kind == Tok::Caret) {
            ++pos;
            if (toks[pos].kind != Tok::Int)
                throw ParseError("expected integer exponent after '^'", toks[pos].line, toks[pos].col);
            e = parse_exponent(toks[pos]);
            ++pos;
        }
        if (e > 0)
            mono = mono.mul(Monomial::var(ring->nvars(), vi, static_cast<uint16_t>(e)));
        return;
    }
    throw ParseError("expected a number or variable", t.line, t.col);
}

} // namespace

SparsePoly parse_poly_tokens(const RingPtr& ring, const std::vector<Token>& toks, size_t& pos) {
    std::vector<Term> terms;
    bool first = true;
    while (true) {
        const Token& t = toks[pos];
        if (t.kind == Tok::Comma || t.kind == Tok::End) {
            if (first)
                throw ParseError("expected a polynomial", t.line, t.col);
            break;
        }
        uint32_t sign = 1;
        if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
            if (t.kind == Tok::Minus) sign = ring->field().neg(1);
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+', '-', ',' or end of input", t.line, t.col);
        }
        uint32_t coeff = sign;
        Monomial mono(ring->nvars());
        parse_factor(ring, toks, pos, coeff, mono);
        while (toks[pos].kind == Tok::Star) {
            ++pos;
            parse_factor(ring, toks, pos, coeff, mono);
        }
        terms.push_back({coeff, std::move(mono)});
        first = false;
    }
    return SparsePoly(ring, std::move(terms));
}

SparsePoly parse_poly(const RingPtr& ring, const std::string& text) {
    std::vector<Token> toks = tokenize(text);
    size_t pos = 0;
    SparsePoly p = parse_poly_tokens(ring, toks, pos);
    if (toks[pos].kind != Tok::End)
        throw ParseError("unexpected trailing input", toks[pos].line, toks[pos].col);
    return p;
}

std::vector<SparsePoly> parse_poly_list(const RingPtr& ring, const std::string& text) {
    std::vector<Token> toks = tokenize(text);
    std::vector<SparsePoly> out;
    size_t pos = 0;
    if (toks[pos].kind == Tok::End) return out;
    while (true) {
        out.push_back(parse_poly_tokens(ring, toks, pos));
        if (toks[pos].kind == Tok::End) break;
        ++pos;
    }
    return out;
}

} // namespace regal
