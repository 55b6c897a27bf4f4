#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jacsyz/monomial.hpp"
#include "jacsyz/ring.hpp"

namespace jacsyz {

// Sparse multivariate polynomial with exact coefficients. Terms are kept in
// canonical descending grevlex regardless of the order the algorithms use.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        FieldElement coeff;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, FieldElement c) {
        Polynomial p(ring);
        if (!c.is_zero())
            p.terms_.push_back({Monomial(ring->nvars()), c.embedded_into(ring->field)});
        return p;
    }
    static Polynomial one(RingPtr ring) {
        auto f = ring->field;
        return constant(std::move(ring), FieldElement::one(f));
    }
    static Polynomial variable(RingPtr ring, std::size_t i, unsigned power = 1) {
        Polynomial p(ring);
        Monomial m(ring->nvars());
        m[i] = power;
        p.terms_.push_back({m, FieldElement::one(ring->field)});
        return p;
    }
    static Polynomial monomial(RingPtr ring, Monomial m, FieldElement c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({std::move(m), c.embedded_into(p.ring_->field)});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial (degree undefined sentinel).
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    // Leading term under an arbitrary order (linear scan over canonical storage).
    const Term& leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
        if (order.kind == MonomialOrder::Kind::Grevlex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return terms_[best];
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = grevlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                FieldElement s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        // Accumulate into a scratch list, then normalize once.
        std::vector<Term> scratch;
        scratch.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                scratch.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
        r.terms_ = normalize(std::move(scratch));
        return r;
    }

    Polynomial scaled(const FieldElement& c) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }
    // this - c * m * g; the workhorse of polynomial reduction.
    Polynomial minus_scaled_shift(const FieldElement& c, const Monomial& m,
                                  const Polynomial& g) const {
        Polynomial shifted(ring_);
        shifted.terms_.reserve(g.terms_.size());
        for (const auto& t : g.terms_) shifted.terms_.push_back({t.mono * m, t.coeff * c});
        // multiplying by a fixed monomial preserves grevlex ordering
        return *this - shifted;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = Polynomial::one(ring_);
        Polynomial base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            unsigned e = t.mono[var];
            if (e == 0) continue;
            Monomial m = t.mono;
            m[var] = e - 1;
            r.terms_.push_back({std::move(m), t.coeff * FieldElement(static_cast<long>(e))});
        }
        r.terms_ = normalize(std::move(r.terms_));
        return r;
    }

    FieldElement evaluate(const std::vector<FieldElement>& point) const {
        if (point.size() != ring_->nvars())
            throw PreconditionError("coordinate count does not match variable count");
        FieldPtr f = ring_->field;
        for (const auto& c : point)
            if (!c.field()->is_rational()) f = c.field();
        std::vector<FieldElement> pt;
        pt.reserve(point.size());
        for (const auto& c : point) pt.push_back(c.embedded_into(f));
        // cache powers per variable
        std::vector<std::vector<FieldElement>> powers(pt.size());
        for (std::size_t v = 0; v < pt.size(); ++v) powers[v].push_back(FieldElement::one(f));
        FieldElement acc = FieldElement::zero(f);
        for (const auto& t : terms_) {
            FieldElement val = t.coeff.embedded_into(f);
            for (std::size_t v = 0; v < pt.size(); ++v) {
                unsigned e = t.mono[v];
                auto& pw = powers[v];
                while (pw.size() <= e) pw.push_back(pw.back() * pt[v]);
                if (e) val *= pw[e];
            }
            acc += val;
        }
        return acc;
    }

    // Substitutes each variable by the given polynomial (all in target ring).
    Polynomial compose(const RingPtr& target,
                       const std::vector<Polynomial>& images) const {
        if (images.size() != ring_->nvars())
            throw PreconditionError("substitution image count mismatch");
        Polynomial acc = Polynomial::zero(target);
        std::vector<std::vector<Polynomial>> powers(images.size());
        for (std::size_t v = 0; v < images.size(); ++v)
            powers[v].push_back(Polynomial::one(target));
        for (const auto& t : terms_) {
            Polynomial val = Polynomial::constant(target, t.coeff);
            for (std::size_t v = 0; v < images.size(); ++v) {
                unsigned e = t.mono[v];
                auto& pw = powers[v];
                while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
                if (e) val = val * pw[e];
            }
            acc = acc + val;
        }
        return acc;
    }

    // f with an invertible rational matrix applied to the variable vector:
    // x_i -> sum_j A[i][j] x_j.
    Polynomial linear_change(const std::vector<std::vector<Rational>>& A) const {
        const std::size_t n = ring_->nvars();
        if (A.size() != n)
            throw PreconditionError("linear change matrix size mismatch");
        if (rational_matrix_is_singular(A))
            throw PreconditionError("linear change matrix is singular");
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial img(ring_);
            for (std::size_t j = 0; j < n; ++j) {
                if (A[i][j] == 0) continue;
                img = img + Polynomial::variable(ring_, j).scaled(FieldElement(A[i][j]));
            }
            images.push_back(std::move(img));
        }
        return compose(ring_, images);
    }

    // Sets x_j = 1; result lives in the ring with variable j removed.
    Polynomial dehomogenize(std::size_t j, const RingPtr& chart_ring) const {
        if (chart_ring->nvars() + 1 != ring_->nvars())
            throw PreconditionError("chart ring must drop exactly one variable");
        Polynomial r(chart_ring);
        std::vector<Term> scratch;
        for (const auto& t : terms_) {
            std::vector<unsigned> e;
            e.reserve(chart_ring->nvars());
            for (std::size_t v = 0; v < ring_->nvars(); ++v)
                if (v != j) e.push_back(t.mono[v]);
            scratch.push_back({Monomial(std::move(e)), t.coeff});
        }
        r.terms_ = normalize(std::move(scratch));
        return r;
    }

    // Homogenizes to total degree d with a fresh variable inserted at slot j.
    Polynomial homogenize(std::size_t j, unsigned d, const RingPtr& proj_ring) const {
        if (proj_ring->nvars() != ring_->nvars() + 1)
            throw PreconditionError("projective ring must add exactly one variable");
        Polynomial r(proj_ring);
        std::vector<Term> scratch;
        for (const auto& t : terms_) {
            unsigned td = t.mono.degree();
            if (td > d) throw PreconditionError("homogenization degree too small");
            std::vector<unsigned> e;
            e.reserve(proj_ring->nvars());
            for (std::size_t v = 0, src = 0; v < proj_ring->nvars(); ++v) {
                if (v == j)
                    e.push_back(d - td);
                else
                    e.push_back(t.mono[src++]);
            }
            scratch.push_back({Monomial(std::move(e)), t.coeff});
        }
        r.terms_ = normalize(std::move(scratch));
        return r;
    }

    // Reindexes variables into `target`: variable i maps to target variable
    // map[i]. Unmapped target variables simply do not occur.
    Polynomial map_variables(const RingPtr& target, const std::vector<std::size_t>& map) const {
        Polynomial r(target);
        std::vector<Term> scratch;
        for (const auto& t : terms_) {
            Monomial m(target->nvars());
            for (std::size_t v = 0; v < ring_->nvars(); ++v) m[map[v]] = t.mono[v];
            scratch.push_back({std::move(m), t.coeff.embedded_into(target->field)});
        }
        r.terms_ = normalize(std::move(scratch));
        return r;
    }

    Polynomial monic(const MonomialOrder& order) const {
        if (is_zero()) return *this;
        return scaled(leading_term(order).coeff.inverse());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical total order (for deterministic sorting of generator lists).
    friend bool compare_less(const Polynomial& a, const Polynomial& b) {
        for (std::size_t i = 0; i < std::min(a.terms_.size(), b.terms_.size()); ++i) {
            int c = grevlex_cmp(a.terms_[i].mono, b.terms_[i].mono);
            if (c != 0) return c < 0;
            if (a.terms_[i].coeff != b.terms_[i].coeff)
                return compare_less(a.terms_[i].coeff, b.terms_[i].coeff);
        }
        return a.terms_.size() < b.terms_.size();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            std::string cs = t.coeff.str();
            bool negated = false;
            if (!first) {
                if (!cs.empty() && cs[0] == '-' && t.coeff.is_rational_value()) {
                    os << " - ";
                    cs = cs.substr(1);
                    negated = true;
                } else {
                    os << " + ";
                }
            }
            (void)negated;
            bool printed_coeff = false;
            bool needs_parens = !t.coeff.is_rational_value();
            if (t.mono.is_one()) {
                os << (needs_parens ? "(" + cs + ")" : cs);
                printed_coeff = true;
            } else if (cs != "1") {
                os << (needs_parens ? "(" + cs + ")" : cs) << "*";
                printed_coeff = true;
            }
            (void)printed_coeff;
            if (!t.mono.is_one()) {
                bool firstv = true;
                for (std::size_t v = 0; v < ring_->nvars(); ++v) {
                    unsigned e = t.mono[v];
                    if (e == 0) continue;
                    if (!firstv) os << "*";
                    os << ring_->vars[v];
                    if (e > 1) os << "^" << e;
                    firstv = false;
                }
            }
            first = false;
        }
        return os.str();
    }

    static std::vector<Term> normalize(std::vector<Term> scratch) {
        std::sort(scratch.begin(), scratch.end(), [](const Term& a, const Term& b) {
            return grevlex_cmp(a.mono, b.mono) > 0;
        });
        std::vector<Term> out;
        out.reserve(scratch.size());
        for (auto& t : scratch) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                if (out.back().coeff.is_zero()) out.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        return out;
    }

private:
    static void check_rings(const Polynomial& a, const Polynomial& b) {
        if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !a.ring_->compatible_with(*b.ring_))
            throw PreconditionError("polynomials live in different rings");
    }
    static bool rational_matrix_is_singular(std::vector<std::vector<Rational>> A) {
        const std::size_t n = A.size();
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && A[piv][col] == 0) ++piv;
            if (piv == n) return true;
            std::swap(A[piv], A[col]);
            for (std::size_t r = col + 1; r < n; ++r) {
                if (A[r][col] == 0) continue;
                Rational factor = A[r][col] / A[col][col];
                for (std::size_t c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
            }
        }
        return false;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline std::vector<Polynomial> jacobian(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) out.push_back(f.derivative(v));
    return out;
}

} // namespace jacsyz
