#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jacsyz/polynomial.hpp"

namespace jacsyz {

// Dense univariate polynomial over a FieldElement coefficient field,
// coefficients ascending by exponent.
class UniPoly {
public:
    explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
    UniPoly(FieldPtr field, std::vector<FieldElement> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(FieldPtr field) { return UniPoly(std::move(field)); }
    static UniPoly constant(const FieldPtr& field, const FieldElement& a) {
        return UniPoly(field, {a.embedded_into(field)});
    }
    // Extracts a univariate polynomial from a Polynomial supported on one variable.
    static UniPoly from_polynomial(const Polynomial& p, std::size_t var) {
        UniPoly u(p.ring()->field);
        for (const auto& t : p.terms()) {
            for (std::size_t v = 0; v < t.mono.nvars(); ++v)
                if (v != var && t.mono[v] > 0)
                    throw PreconditionError("polynomial is not univariate in the given variable");
            std::size_t e = t.mono[var];
            if (u.c_.size() <= e) u.c_.resize(e + 1, FieldElement::zero(u.field_));
            u.c_[e] = u.c_[e] + t.coeff;
        }
        u.trim();
        return u;
    }

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const FieldElement& coeff(std::size_t i) const { return c_[i]; }
    const FieldElement& lead() const {
        if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
        return c_.back();
    }

    FieldElement eval(const FieldElement& x) const {
        FieldElement r = FieldElement::zero(field_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UniPoly derivative() const {
        UniPoly d(field_);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.c_.push_back(c_[i] * FieldElement(static_cast<long>(i)).embedded_into(field_));
        d.trim();
        return d;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inverse());
    }
    UniPoly scaled(const FieldElement& s) const {
        UniPoly r(field_);
        for (const auto& a : c_) r.c_.push_back(a * s);
        r.trim();
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.field_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), FieldElement::zero(a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = r.c_[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        return a + b.scaled(FieldElement(-1).embedded_into(b.field_));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.field_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    // Quotient and remainder of *this by d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw PreconditionError("univariate division by zero");
        UniPoly q(field_), r = *this;
        FieldElement linv = d.lead().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            FieldElement s = r.lead() * linv;
            if (q.c_.size() <= shift) q.c_.resize(shift + 1, FieldElement::zero(field_));
            q.c_[shift] = q.c_[shift] + s;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[i + shift] = r.c_[i + shift] - s * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    UniPoly squarefree_part() const {
        if (is_zero() || degree() == 0) return monic();
        UniPoly g = gcd(*this, derivative());
        return divmod(g).first.monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<FieldElement> c_;
};

// Resultant via the Euclidean remainder sequence.
inline FieldElement resultant(UniPoly f, UniPoly g) {
    const FieldPtr& k = f.field();
    if (f.is_zero() || g.is_zero()) return FieldElement::zero(k);
    FieldElement acc = FieldElement::one(k);
    bool negate = false;
    while (g.degree() > 0) {
        UniPoly r = f.divmod(g).second;
        int df = f.degree(), dg = g.degree(), dr = r.is_zero() ? 0 : r.degree();
        if (r.is_zero()) return FieldElement::zero(k);
        acc = acc * g.lead().pow(df - dr);
        if ((df % 2) && (dg % 2)) negate = !negate;
        f = std::move(g);
        g = std::move(r);
    }
    // g is a nonzero constant
    acc = acc * g.coeff(0).pow(f.degree());
    if (negate) acc = acc * FieldElement(-1).embedded_into(k);
    return acc;
}

// Lagrange interpolation through distinct nodes.
inline UniPoly interpolate(const FieldPtr& field, const std::vector<FieldElement>& xs,
                           const std::vector<FieldElement>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw PreconditionError("interpolation needs matching nonempty node lists");
    UniPoly r = UniPoly::zero(field);
    UniPoly x(field, {FieldElement::zero(field), FieldElement::one(field)});
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UniPoly li = UniPoly::constant(field, FieldElement::one(field));
        FieldElement denom = FieldElement::one(field);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * (x - UniPoly::constant(field, xs[j]));
            denom = denom * (xs[i] - xs[j]);
        }
        r = r + li.scaled(ys[i] * denom.inverse());
    }
    return r;
}

namespace factor_detail {

inline bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

inline mpz_class pollard_rho(const mpz_class& n, unsigned long seed) {
    mpz_class x = 2 + seed, y = x, c = 1 + seed, d = 1;
    while (d == 1) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        mpz_class diff = x - y;
        if (diff < 0) diff = -diff;
        if (diff == 0) return 0; // cycle without factor; caller retries
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    return d == n ? mpz_class(0) : d;
}

inline void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (n % p == 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    for (unsigned long p = 17; p < 100000 && n > 1; p += 2) {
        if (mpz_class(p) * p > n) break;
        while (n % p == 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long seed = 0;; ++seed) {
        if (seed > 64) throw InternalError("integer factorization failed to split composite");
        mpz_class d = pollard_rho(n, seed);
        if (d == 0) continue;
        factor_into(d, out);
        factor_into(n / d, out);
        return;
    }
}

inline std::vector<mpz_class> divisors(const mpz_class& n, std::size_t cap = 200000) {
    std::map<mpz_class, unsigned> f;
    factor_into(n, f);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > cap)
                    throw BudgetExceeded("too many divisor candidates in root search");
            }
        }
    }
    return divs;
}

} // namespace factor_detail

// All rational roots of a nonzero polynomial with rational coefficients.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw PreconditionError("rational roots of the zero polynomial");
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(static_cast<std::size_t>(i)).is_rational_value())
            throw PreconditionError("rational root search needs rational coefficients");
    std::vector<Rational> roots;
    // integer coefficient vector: clear denominators
    mpz_class den = 1;
    for (int i = 0; i <= p.degree(); ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                p.coeff(static_cast<std::size_t>(i)).coords()[0].get_den_mpz_t());
    std::vector<mpz_class> a;
    for (int i = 0; i <= p.degree(); ++i) {
        Rational q = p.coeff(static_cast<std::size_t>(i)).coords()[0] * Rational(den);
        a.push_back(q.get_num());
    }
    std::size_t low = 0;
    while (low < a.size() && a[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 >= a.size()) return roots;
    std::vector<mpz_class> ps = factor_detail::divisors(a[low]);
    std::vector<mpz_class> qs = factor_detail::divisors(a.back());
    auto eval_at = [&](const Rational& x) {
        Rational r = 0;
        for (std::size_t i = a.size(); i-- > low;) r = r * x + Rational(a[i]);
        return r;
    };
    for (const auto& num : ps)
        for (const auto& q : qs) {
            Rational cand(num, q);
            cand.canonicalize();
            if (eval_at(cand) == 0) roots.push_back(cand);
            cand = -cand;
            if (eval_at(cand) == 0) roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

struct RootSearch {
    std::vector<FieldElement> roots;
    bool complete = false; // true when every root lying in the field was found
};

namespace root_detail {

// Splits a polynomial over a quadratic extension into its two rational
// coordinate polynomials after the substitution x = u + v*alpha, producing
// bivariate polynomials in Q[u,v].
inline std::pair<Polynomial, Polynomial> component_split(const UniPoly& p,
                                                         const RingPtr& UV) {
    const FieldPtr& k = p.field();
    RingPtr UVk = Ring::make(UV->vars, k);
    Polynomial x = Polynomial::variable(UVk, 0) +
                   Polynomial::variable(UVk, 1) *
                       Polynomial::constant(UVk, FieldElement::generator(k));
    Polynomial acc = Polynomial::zero(UVk);
    for (std::size_t i = static_cast<std::size_t>(p.degree()) + 1; i-- > 0;)
        acc = acc * x + Polynomial::constant(UVk, p.coeff(i));
    Polynomial A = Polynomial::zero(UV), B = Polynomial::zero(UV);
    for (const auto& t : acc.terms()) {
        const auto& co = t.coeff.coords();
        if (co[0] != 0)
            A = A + Polynomial::monomial(UV, t.mono, FieldElement(co[0]));
        if (co[1] != 0)
            B = B + Polynomial::monomial(UV, t.mono, FieldElement(co[1]));
    }
    return {A, B};
}

// Substitutes u = t into a bivariate polynomial in Q[u,v], yielding a
// univariate polynomial in v.
inline UniPoly specialize_u(const Polynomial& f, const Rational& t) {
    UniPoly out(f.ring()->field);
    std::vector<FieldElement> coeffs;
    for (const auto& term : f.terms()) {
        Rational val = term.coeff.coords()[0];
        Rational tp = 1;
        for (unsigned e = 0; e < term.mono[0]; ++e) tp *= t;
        val *= tp;
        std::size_t ev = term.mono[1];
        if (coeffs.size() <= ev) coeffs.resize(ev + 1, FieldElement::zero(f.ring()->field));
        coeffs[ev] = coeffs[ev] + FieldElement(val);
    }
    return UniPoly(f.ring()->field, std::move(coeffs));
}

inline int degree_in(const Polynomial& f, std::size_t var) {
    int d = -1;
    for (const auto& t : f.terms()) d = std::max(d, static_cast<int>(t.mono[var]));
    return d;
}

// Leading coefficient of f with respect to v, as a polynomial in u.
inline UniPoly lead_coeff_in_v(const Polynomial& f) {
    int dv = degree_in(f, 1);
    std::vector<FieldElement> coeffs;
    const FieldPtr& k = f.ring()->field;
    for (const auto& t : f.terms()) {
        if (static_cast<int>(t.mono[1]) != dv) continue;
        std::size_t eu = t.mono[0];
        if (coeffs.size() <= eu) coeffs.resize(eu + 1, FieldElement::zero(k));
        coeffs[eu] = coeffs[eu] + t.coeff;
    }
    return UniPoly(k, std::move(coeffs));
}

} // namespace root_detail

// Roots of p that lie in `field`. Complete for the rationals and for
// quadratic extensions; for higher-degree extensions only roots with
// rational coordinates are located and `complete` is false.
inline RootSearch roots_in_field(const UniPoly& p, const FieldPtr& field) {
    RootSearch out;
    if (p.is_zero()) throw PreconditionError("root search on the zero polynomial");
    if (p.degree() == 0) {
        out.complete = true;
        return out;
    }
    UniPoly sf = p.squarefree_part();

    if (field->is_rational()) {
        for (const auto& r : rational_roots(sf)) out.roots.push_back(FieldElement(r));
        out.complete = true;
        return out;
    }

    if (field->degree() == 2) {
        RingPtr UV = Ring::make({"u", "v"}, FieldDescriptor::rationals());
        auto [A, B] = root_detail::component_split(sf, UV);
        // Roots are the common zeros of A and B in Q^2.
        int dvA = root_detail::degree_in(A, 1), dvB = root_detail::degree_in(B, 1);
        std::vector<Rational> u_candidates;
        if (dvA <= 0 && dvB <= 0) {
            // both independent of v: cannot happen for nonconstant p over a
            // genuine quadratic extension
            throw InternalError("degenerate component split in quadratic root search");
        }
        const FieldPtr Q = FieldDescriptor::rationals();
        if (dvA <= 0 || dvB <= 0) {
            // one component is univariate in u: its rational roots bound u
            const Polynomial& flat = dvA <= 0 ? A : B;
            UniPoly fu = root_detail::specialize_u(flat, Rational(0));
            // flat depends only on u; reinterpret via coefficient transpose
            std::vector<FieldElement> cu;
            for (const auto& t : flat.terms()) {
                std::size_t e = t.mono[0];
                if (cu.size() <= e) cu.resize(e + 1, FieldElement::zero(Q));
                cu[e] = cu[e] + t.coeff;
            }
            UniPoly pu(Q, std::move(cu));
            if (pu.is_zero())
                throw InternalError("degenerate component split in quadratic root search");
            u_candidates = rational_roots(pu);
        } else {
            // eliminate v by an interpolated resultant
            long bound = static_cast<long>(A.degree()) * B.degree() + 1;
            std::vector<FieldElement> xs, ys;
            for (long t = 0; static_cast<long>(xs.size()) < bound + 1; ++t) {
                Rational tv(t);
                UniPoly Av = root_detail::specialize_u(A, tv);
                UniPoly Bv = root_detail::specialize_u(B, tv);
                // skip specializations where the v-degree drops
                if (Av.degree() != dvA || Bv.degree() != dvB) continue;
                xs.push_back(FieldElement(tv));
                ys.push_back(resultant(Av, Bv));
                if (t > 16 * bound)
                    throw InternalError("resultant interpolation ran out of good points");
            }
            UniPoly res = interpolate(Q, xs, ys);
            if (res.is_zero()) {
                // A and B share a factor in v; fall back to their gcd over Q(u)
                // being nontrivial, which for squarefree p cannot produce
                // infinitely many roots -- treat via the other projection.
                throw InternalError("vanishing resultant for squarefree polynomial");
            }
            u_candidates = rational_roots(res);
        }
        for (const auto& u0 : u_candidates) {
            UniPoly Av = root_detail::specialize_u(A, u0);
            UniPoly Bv = root_detail::specialize_u(B, u0);
            UniPoly g = Av.is_zero() ? Bv : (Bv.is_zero() ? Av : gcd(Av, Bv));
            if (g.is_zero()) continue;
            if (g.degree() == 0) continue;
            for (const auto& v0 : rational_roots(g)) {
                std::vector<Rational> coords{u0, v0};
                FieldElement cand(field, coords);
                if (sf.eval(cand).is_zero()) out.roots.push_back(cand);
            }
        }
        std::sort(out.roots.begin(), out.roots.end(),
                  [](const FieldElement& a, const FieldElement& b) {
                      return compare_less(a, b);
                  });
        out.roots.erase(std::unique(out.roots.begin(), out.roots.end(),
                                    [](const FieldElement& a, const FieldElement& b) {
                                        return (a - b).is_zero();
                                    }),
                        out.roots.end());
        out.complete = true;
        return out;
    }

    // Higher-degree extension: locate the roots with rational coordinates
    // by intersecting the rational roots of every coordinate component.
    const FieldPtr Q = FieldDescriptor::rationals();
    std::optional<UniPoly> g;
    for (std::size_t c = 0; c < field->degree(); ++c) {
        std::vector<FieldElement> coeffs;
        for (int i = 0; i <= sf.degree(); ++i) {
            const Rational& q = sf.coeff(static_cast<std::size_t>(i)).coords()[c];
            coeffs.push_back(FieldElement(q));
        }
        UniPoly comp(Q, std::move(coeffs));
        if (comp.is_zero()) continue;
        g = g ? gcd(*g, comp) : comp;
    }
    if (g && g->degree() >= 1)
        for (const auto& r : rational_roots(*g))
            out.roots.push_back(FieldElement(r).embedded_into(field));
    out.complete = false;
    return out;
}

} // namespace jacsyz
