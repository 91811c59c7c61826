#include "regal/ringfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "regal/error.hpp"
#include "regal/parse.hpp"

namespace regal {

namespace {

bool is_reserved(const std::string& s) {
    return s == "field" || s == "vars" || s == "ideal";
}

[[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.line, at.col);
}

} // namespace

RingFileData parse_ring_file(const std::string& text) {
    std::vector<Token> toks = tokenize(text);
    size_t pos = 0;

    if (toks[pos].kind != Tok::Ident || toks[pos].text != "field")
        fail("expected 'field'", toks[pos]);
    ++pos;
    if (toks[pos].kind != Tok::Int)
        fail("expected a prime after 'field'", toks[pos]);
    const Token& ptok = toks[pos];
    unsigned long long praw = 0;
    try {
        praw = std::stoull(ptok.text);
    } catch (const std::exception&) {
        fail("field characteristic out of range", ptok);
    }
    if (praw >= (1ull << 31)) fail("field characteristic out of range", ptok);
    ++pos;

    if (toks[pos].kind != Tok::Ident || toks[pos].text != "vars")
        fail("expected 'vars'", toks[pos]);
    ++pos;
    std::vector<std::string> names;
    while (toks[pos].kind == Tok::Ident && toks[pos].text != "ideal") {
        if (is_reserved(toks[pos].text))
            fail("'" + toks[pos].text + "' is reserved and cannot name a variable", toks[pos]);
        if (std::find(names.begin(), names.end(), toks[pos].text) != names.end())
            fail("duplicate variable '" + toks[pos].text + "'", toks[pos]);
        names.push_back(toks[pos].text);
        ++pos;
    }

    RingPtr ring;
    try {
        ring = std::make_shared<const PolyRing>(static_cast<uint32_t>(praw), names);
    } catch (const Error& e) {
        fail(e.what(), ptok);
    }

    RingFileData out;
    out.ring = ring;
    if (toks[pos].kind == Tok::Ident && toks[pos].text == "ideal") {
        ++pos;
        if (toks[pos].kind != Tok::End) {
            while (true) {
                out.ideal.push_back(parse_poly_tokens(ring, toks, pos));
                if (toks[pos].kind != Tok::Comma) break;
                ++pos;
            }
        }
    }
    if (toks[pos].kind != Tok::End) fail("unexpected trailing input", toks[pos]);
    return out;
}

RingFileData load_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ring file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ring_file(buf.str());
}

std::string print_ring_file(const RingPtr& ring, const std::vector<SparsePoly>& ideal) {
    std::string s = "field " + std::to_string(ring->field().characteristic()) + "\n";
    s += "vars";
    for (size_t i = 0; i < ring->nvars(); ++i) s += " " + ring->var_name(i);
    s += "\nideal";
    for (size_t i = 0; i < ideal.size(); ++i)
        s += (i == 0 ? " " : ", ") + to_string(ideal[i]);
    s += "\n";
    return s;
}

} // namespace regal
