#include "regal/poly.hpp"

#include <algorithm>

namespace regal {

PolyRing::PolyRing(uint32_t p, std::vector<std::string> var_names)
    : field_(p), var_names_(std::move(var_names)) {
    for (size_t i = 0; i < var_names_.size(); ++i) {
        if (var_names_[i].empty())
            throw InvalidArgument("empty variable name");
        for (size_t j = i + 1; j < var_names_.size(); ++j)
            if (var_names_[i] == var_names_[j])
                throw InvalidArgument("duplicate variable name: " + var_names_[i]);
    }
}

SparsePoly::SparsePoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    for (const Term& t : terms)
        if (t.mono.nvars() != ring_->nvars())
            throw ContextError("term has wrong variable count for ring");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return degrevlex_cmp(a.mono, b.mono) > 0;
    });
    const PrimeField& F = ring_->field();
    for (Term& t : terms) {
        t.coeff %= F.characteristic();
        if (t.coeff == 0) continue;
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
            if (terms_.back().coeff == 0) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

const Term& SparsePoly::lead() const {
    if (terms_.empty()) throw InvalidArgument("lead term of zero polynomial");
    return terms_.front();
}

bool SparsePoly::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

uint32_t SparsePoly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

void SparsePoly::check_context(const SparsePoly& o) const {
    if (!ring_ || !o.ring_) throw ContextError("polynomial with no ring context");
    if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
        throw ContextError("polynomials from different rings");
}

SparsePoly SparsePoly::add(const SparsePoly& o) const {
    check_context(o);
    const PrimeField& F = ring_->field();
    SparsePoly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = degrevlex_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({s, terms_[i].mono});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

SparsePoly SparsePoly::sub(const SparsePoly& o) const { return add(o.neg()); }

SparsePoly SparsePoly::neg() const {
    const PrimeField& F = ring_->field();
    SparsePoly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({F.neg(t.coeff), t.mono});
    return r;
}

SparsePoly SparsePoly::scale(uint32_t c) const {
    const PrimeField& F = ring_->field();
    c %= F.characteristic();
    SparsePoly r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({F.mul(t.coeff, c), t.mono});
    return r;
}

SparsePoly SparsePoly::mul_term(uint32_t c, const Monomial& m) const {
    const PrimeField& F = ring_->field();
    c %= F.characteristic();
    SparsePoly r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({F.mul(t.coeff, c), t.mono.mul(m)});
    return r;
}

SparsePoly SparsePoly::mul(const SparsePoly& o) const {
    check_context(o);
    SparsePoly acc(ring_);
    // Accumulate term-by-term products; fine at the sizes this engine works with.
    for (const Term& t : o.terms_)
        acc = acc.add(mul_term(t.coeff, t.mono));
    return acc;
}

SparsePoly SparsePoly::monic() const {
    if (is_zero()) return *this;
    return scale(ring_->field().inv(lead_coeff()));
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

SparsePoly SparsePoly::constant(RingPtr ring, uint32_t c) {
    SparsePoly r(ring);
    c %= ring->field().characteristic();
    if (c != 0) r.terms_.push_back({c, Monomial(ring->nvars())});
    return r;
}

SparsePoly SparsePoly::variable(RingPtr ring, size_t i, uint16_t e) {
    if (i >= ring->nvars()) throw InvalidArgument("variable index out of range");
    SparsePoly r(ring);
    if (e > 0) r.terms_.push_back({1, Monomial::var(ring->nvars(), i, e)});
    else r.terms_.push_back({1, Monomial(ring->nvars())});
    return r;
}

SparsePoly SparsePoly::from_term(RingPtr ring, uint32_t c, Monomial m) {
    SparsePoly r(ring);
    c %= ring->field().characteristic();
    if (c != 0) r.terms_.push_back({c, std::move(m)});
    return r;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return a.add(b); }
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a.sub(b); }
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return a.mul(b); }

std::string to_string(const Monomial& m, const PolyRing& ring) {
    std::string s;
    for (size_t i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.var_name(i);
        if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    const PolyRing& ring = *p.ring();
    uint32_t q = ring.field().characteristic();
    std::string s;
    bool first = true;
    for (const Term& t : p.terms()) {
        // Residues above p/2 print as subtracted terms: x - y, not x + 32002*y.
        bool negative = t.coeff > q / 2;
        uint32_t c = negative ? q - t.coeff : t.coeff;
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            s += std::to_string(c);
        } else if (c == 1) {
            s += to_string(t.mono, ring);
        } else {
            s += std::to_string(c) + "*" + to_string(t.mono, ring);
        }
    }
    return s;
}

} // namespace regal
