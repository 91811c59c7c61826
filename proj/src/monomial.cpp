#include "regal/monomial.hpp"

#include <algorithm>

namespace regal {

namespace {
constexpr uint32_t kExpLimit = 1u << 15;
}

Monomial::Monomial(std::vector<uint16_t> exps) : exps_(std::move(exps)) {
    uint32_t d = 0;
    for (uint16_t e : exps_) d += e;
    degree_ = d;
}

Monomial Monomial::mul(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
        throw ContextError("monomial variable counts differ");
    Monomial r(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) {
        uint32_t e = static_cast<uint32_t>(exps_[i]) + o.exps_[i];
        if (e >= kExpLimit)
            throw ExponentOverflow("monomial exponent exceeds " + std::to_string(kExpLimit - 1));
        r.exps_[i] = static_cast<uint16_t>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
        throw ContextError("monomial variable counts differ");
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = static_cast<uint16_t>(exps_[i] - o.exps_[i]);
    r.degree_ = degree_ - o.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.exps_.size() != b.exps_.size())
        throw ContextError("monomial variable counts differ");
    Monomial r(a.exps_.size());
    uint32_t d = 0;
    for (size_t i = 0; i < a.exps_.size(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
}

Monomial Monomial::var(size_t nvars, size_t i, uint16_t e) {
    Monomial r(nvars);
    r.exps_[i] = e;
    r.degree_ = e;
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    const auto& ae = a.exps();
    const auto& be = b.exps();
    for (size_t i = ae.size(); i-- > 0;) {
        if (ae[i] != be[i])
            return ae[i] > be[i] ? -1 : 1;
    }
    return 0;
}

std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(size_t{0});
        return out;
    }
    std::vector<uint16_t> cur(nvars, 0);
    // Enumerate compositions of d into nvars parts recursively.
    auto rec = [&](auto&& self, size_t i, uint32_t rem) -> void {
        if (i + 1 == nvars) {
            if (rem >= kExpLimit)
                throw ExponentOverflow("degree too large for monomial enumeration");
            cur[i] = static_cast<uint16_t>(rem);
            out.emplace_back(cur);
            return;
        }
        for (uint32_t e = 0; e <= rem; ++e) {
            cur[i] = static_cast<uint16_t>(e);
            self(self, i + 1, rem - e);
        }
        cur[i] = 0;
    };
    if (d >= kExpLimit)
        throw ExponentOverflow("degree too large for monomial enumeration");
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), DegrevlexLess{});
    return out;
}

} // namespace regal
