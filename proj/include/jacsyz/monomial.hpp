#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "jacsyz/errors.hpp"

namespace jacsyz {

// Exponent vector, one entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    std::size_t nvars() const { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    unsigned degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0u);
    }
    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }
    // Requires divisibility.
    Monomial quotient_of(const Monomial& dividend) const {
        Monomial r = dividend;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<unsigned> exps_;
};

// Returns >0 if a > b, <0 if a < b, 0 if equal, under graded reverse lex.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

inline int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

// Comparison strategy over monomials of a fixed ring. Storage of polynomials
// is always canonical grevlex; orders are consulted by the algorithms only.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, EliminationBlock, Weighted };

    Kind kind = Kind::Grevlex;
    std::size_t block = 0;            // EliminationBlock: first `block` variables go first
    std::vector<long> weights;        // Weighted

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, 0, {}}; }
    static MonomialOrder elimination_block(std::size_t k) {
        return {Kind::EliminationBlock, k, {}};
    }
    static MonomialOrder weighted(std::vector<long> w) {
        return {Kind::Weighted, 0, std::move(w)};
    }

    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case Kind::Grevlex:
            return grevlex_cmp(a, b);
        case Kind::Lex:
            return lex_cmp(a, b);
        case Kind::EliminationBlock: {
            unsigned da = 0, db = 0;
            for (std::size_t i = 0; i < block; ++i) { da += a[i]; db += b[i]; }
            if (da != db) return da > db ? 1 : -1;
            return grevlex_cmp(a, b);
        }
        case Kind::Weighted: {
            long wa = 0, wb = 0;
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                long w = i < weights.size() ? weights[i] : 1;
                wa += w * static_cast<long>(a[i]);
                wb += w * static_cast<long>(b[i]);
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            return grevlex_cmp(a, b);
        }
        }
        throw InternalError("unhandled monomial order kind");
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    // Key used to tag cached bases.
    std::string key() const {
        std::string s;
        switch (kind) {
        case Kind::Grevlex: s = "grevlex"; break;
        case Kind::Lex: s = "lex"; break;
        case Kind::EliminationBlock: s = "elim" + std::to_string(block); break;
        case Kind::Weighted:
            s = "weighted";
            for (long w : weights) s += "_" + std::to_string(w);
            break;
        }
        return s;
    }
};

} // namespace jacsyz
