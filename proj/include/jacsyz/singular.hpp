#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ideal.hpp"
#include "syzygy.hpp"
#include "univariate.hpp"

namespace jacsyz {

// A point of projective space with coordinates in the working field,
// normalized so the first nonzero coordinate is 1. Equality of points is
// equality of normalized coordinate vectors.
struct ProjectivePoint {
    std::vector<FieldElement> coords;

    static ProjectivePoint make(const FieldPtr& field, std::vector<FieldElement> raw) {
        std::vector<FieldElement> c;
        c.reserve(raw.size());
        for (auto& x : raw) c.push_back(x.embedded_into(field));
        std::size_t piv = c.size();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) { piv = i; break; }
        if (piv == c.size())
            throw PreconditionError("projective point must have a nonzero coordinate");
        FieldElement inv = c[piv].inverse();
        for (auto& x : c) x *= inv;
        return ProjectivePoint{std::move(c)};
    }

    std::size_t pivot() const {
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero()) return i;
        throw InternalError("unnormalized projective point");
    }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        if (a.coords.size() != b.coords.size()) return false;
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            if (!(a.coords[i] - b.coords[i]).is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += " : ";
            s += coords[i].str();
        }
        return s + ")";
    }
};

namespace singdetail {

// All monomials of the given total degree, as monomial objects.
inline void monomials_rec(std::size_t var, unsigned remaining, std::vector<unsigned>& partial,
                          std::vector<Monomial>& out) {
    if (var + 1 == partial.size()) {
        partial[var] = remaining;
        out.emplace_back(partial);
        partial[var] = 0;
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        partial[var] = e;
        monomials_rec(var + 1, remaining - e, partial, out);
    }
    partial[var] = 0;
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> partial(nvars, 0);
    monomials_rec(0, degree, partial, out);
    return out;
}

// Substitutes the last variable of `p`'s ring by a field constant; the result
// lives in `target`, the ring on the remaining variables.
inline Polynomial substitute_last(const Polynomial& p, const RingPtr& target,
                                  const FieldElement& value) {
    const std::size_t n = p.ring()->nvars();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) images.push_back(Polynomial::variable(target, i));
    images.push_back(Polynomial::constant(target, value));
    return p.compose(target, images);
}

// Solves a zero-dimensional affine polynomial system over the declared field
// by eliminating down to the last variable, extracting its roots, and
// recursing on each specialization. `complete` is cleared whenever a
// univariate factor may have roots outside the declared field.
inline void solve_system(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         const FieldPtr& field, std::vector<FieldElement> suffix,
                         std::vector<std::vector<FieldElement>>& out, bool& complete,
                         const GBOptions& opts) {
    std::vector<Polynomial> keep;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.is_constant()) return; // inconsistent system: no solutions
        keep.push_back(g);
    }
    if (keep.empty())
        throw PreconditionError("singular locus is not zero-dimensional in some chart");
    const std::size_t n = ring->nvars();
    if (n == 1) {
        UniPoly u = UniPoly::from_polynomial(keep[0], 0);
        for (std::size_t i = 1; i < keep.size(); ++i)
            u = gcd(u, UniPoly::from_polynomial(keep[i], 0));
        RootSearch rs = roots_in_field(u, field);
        if (!rs.complete) complete = false;
        for (const auto& r : rs.roots) {
            std::vector<FieldElement> pt{r};
            pt.insert(pt.end(), suffix.begin(), suffix.end());
            out.push_back(std::move(pt));
        }
        return;
    }
    Ideal I(ring, keep);
    Ideal last = elimination_ideal(I, n - 1, opts);
    if (last.is_zero_ideal())
        throw PreconditionError("singular locus is not zero-dimensional in some chart");
    UniPoly u = UniPoly::from_polynomial(last.generators()[0], 0);
    for (std::size_t i = 1; i < last.generators().size(); ++i)
        u = gcd(u, UniPoly::from_polynomial(last.generators()[i], 0));
    RootSearch rs = roots_in_field(u, field);
    if (!rs.complete) complete = false;
    RingPtr sub = Ring::make(
        std::vector<std::string>(ring->vars.begin(), ring->vars.end() - 1), field);
    for (const auto& r : rs.roots) {
        std::vector<Polynomial> specialized;
        for (const auto& g : keep) specialized.push_back(substitute_last(g, sub, r));
        std::vector<FieldElement> next{r};
        next.insert(next.end(), suffix.begin(), suffix.end());
        solve_system(sub, specialized, field, std::move(next), out, complete, opts);
    }
}

} // namespace singdetail

inline Ideal jacobian_ideal(const Polynomial& f) {
    return Ideal(f.ring(), jacobian(f));
}

// Points of the Jacobian scheme with coordinates in the declared field,
// found chart-by-chart. A chart with pivot j covers exactly the points whose
// first nonzero coordinate is x_j, so the charts are disjoint and no
// deduplication is needed. `complete` is false when some singular points may
// live outside the declared field; those remain in the residual locus.
struct SingularLocus {
    std::vector<ProjectivePoint> points;
    bool complete = true;
};

inline SingularLocus find_singular_points(const Polynomial& f, const FieldPtr& field,
                                          const GBOptions& opts = {}) {
    const RingPtr& R = f.ring();
    const std::size_t nv = R->nvars();
    PolyVec df = jacobian(f);
    SingularLocus locus;
    for (std::size_t j = 0; j < nv; ++j) {
        std::vector<std::string> vars(R->vars.begin() + static_cast<long>(j) + 1,
                                      R->vars.end());
        if (vars.empty()) vars.push_back("__pt__"); // chart at the last coordinate
        RingPtr chart = Ring::make(vars, field);
        std::vector<Polynomial> images(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            if (i < j)
                images[i] = Polynomial::zero(chart);
            else if (i == j)
                images[i] = Polynomial::one(chart);
            else
                images[i] = Polynomial::variable(chart, i - j - 1);
        }
        std::vector<Polynomial> gens;
        for (const auto& g : df) gens.push_back(g.compose(chart, images));
        if (j + 1 == nv) {
            // the chart is a single point: (0 : ... : 0 : 1)
            bool all_zero = true;
            for (const auto& g : gens)
                if (!g.is_zero()) all_zero = false;
            if (all_zero) {
                std::vector<FieldElement> c(nv, FieldElement::zero(field));
                c.back() = FieldElement::one(field);
                locus.points.push_back(ProjectivePoint::make(field, std::move(c)));
            }
            continue;
        }
        std::vector<std::vector<FieldElement>> sols;
        singdetail::solve_system(chart, gens, field, {}, sols, locus.complete, opts);
        for (auto& s : sols) {
            std::vector<FieldElement> hom(nv, FieldElement::zero(field));
            hom[j] = FieldElement::one(field);
            for (std::size_t i = 0; i < s.size(); ++i) hom[j + 1 + i] = s[i];
            locus.points.push_back(ProjectivePoint::make(field, std::move(hom)));
        }
    }
    return locus;
}

// Certifies a coordinate chart for the total Milnor/Tjurina computation:
// after the change x -> A x, the hyperplane section V(f') with x0 = 0 is
// smooth and carries no singular point of V(f').
namespace singdetail {

inline bool chart_is_transversal(const Polynomial& fA, const GBOptions& opts) {
    const RingPtr& R = fA.ring();
    const std::size_t nv = R->nvars();
    RingPtr hyp = Ring::make(
        std::vector<std::string>(R->vars.begin() + 1, R->vars.end()), R->field);
    std::vector<Polynomial> images(nv);
    images[0] = Polynomial::zero(hyp);
    for (std::size_t i = 1; i < nv; ++i) images[i] = Polynomial::variable(hyp, i - 1);
    Polynomial restriction = fA.compose(hyp, images);
    if (restriction.is_zero()) return false; // hyperplane contained in V(f)
    auto smooth = projective_is_empty(Ideal(hyp, jacobian(restriction)), opts);
    if (!smooth.first) return false;
    std::vector<Polynomial> at_infinity = jacobian(fA);
    at_infinity.push_back(Polynomial::variable(R, 0));
    return projective_is_empty(Ideal(R, at_infinity), opts).first;
}

} // namespace singdetail

struct ChartChoice {
    std::vector<std::vector<Rational>> matrix; // unimodular over the integers
    unsigned attempts = 0;                     // certification runs used
};

inline ChartChoice choose_transversal_chart(const Polynomial& f, unsigned seed,
                                            const GBOptions& opts = {},
                                            unsigned max_tries = 32) {
    const std::size_t nv = f.ring()->nvars();
    std::vector<std::vector<Rational>> A(nv, std::vector<Rational>(nv, Rational(0)));
    for (std::size_t i = 0; i < nv; ++i) A[i][i] = 1;
    ChartChoice choice{A, 1};
    if (singdetail::chart_is_transversal(f, opts)) return choice;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    for (unsigned t = 1; t < max_tries; ++t) {
        // a product of random elementary shears is unimodular
        auto B = A;
        for (std::size_t s = 0; s < 2 * nv; ++s) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            int c = coeff(rng);
            for (std::size_t k = 0; k < nv; ++k) B[i][k] += Rational(c) * B[j][k];
        }
        ++choice.attempts;
        if (singdetail::chart_is_transversal(f.linear_change(B), opts)) {
            choice.matrix = std::move(B);
            return choice;
        }
    }
    throw BudgetExceeded("no transversal chart found within " + std::to_string(max_tries) +
                         " random coordinate changes");
}

namespace singdetail {

// Affine equation and partials of f in the chart x0 = 1 after the change of
// coordinates A.
inline std::pair<Polynomial, std::vector<Polynomial>> affine_model(
    const Polynomial& f, const std::vector<std::vector<Rational>>& A) {
    Polynomial fA = f.linear_change(A);
    const RingPtr& R = fA.ring();
    RingPtr aff = Ring::make(
        std::vector<std::string>(R->vars.begin() + 1, R->vars.end()), R->field);
    Polynomial g = fA.dehomogenize(0, aff);
    std::vector<Polynomial> dg;
    for (std::size_t i = 0; i < aff->nvars(); ++i) dg.push_back(g.derivative(i));
    return {std::move(g), std::move(dg)};
}

} // namespace singdetail

// Total Tjurina number: dim C[y]/(g, g_1, ..., g_n) in a transversal chart.
inline unsigned long total_tjurina(const Polynomial& f,
                                   const std::vector<std::vector<Rational>>& chart,
                                   const GBOptions& opts = {}) {
    auto [g, dg] = singdetail::affine_model(f, chart);
    std::vector<Polynomial> gens = dg;
    gens.push_back(g);
    return affine_quotient_dimension(Ideal(g.ring(), std::move(gens)), opts);
}

// Total Milnor number: dim C[y]/(g^n, g_1, ..., g_n), with the literal
// exponent n = ambient projective dimension.
inline unsigned long total_milnor(const Polynomial& f,
                                  const std::vector<std::vector<Rational>>& chart,
                                  const GBOptions& opts = {}) {
    auto [g, dg] = singdetail::affine_model(f, chart);
    const unsigned n = static_cast<unsigned>(g.ring()->nvars());
    std::vector<Polynomial> gens = dg;
    gens.push_back(g.pow(n));
    return affine_quotient_dimension(Ideal(g.ring(), std::move(gens)), opts);
}

namespace singdetail {

// dim of the local quotient at the origin: dimensions of I + m^k stabilize
// as k grows (the associated graded of an Artinian local algebra is standard
// graded, so its Hilbert function, once zero, stays zero); two consecutive
// equal values certify the limit.
inline unsigned long local_quotient_dimension(const RingPtr& ring,
                                              const std::vector<Polynomial>& gens,
                                              const GBOptions& opts) {
    unsigned long prev = 0;
    bool have_prev = false;
    for (unsigned k = 2; k <= 100; ++k) {
        std::vector<Polynomial> padded = gens;
        for (const auto& m : monomials_of_degree(ring->nvars(), k))
            padded.push_back(Polynomial::monomial(ring, m, FieldElement::one(ring->field)));
        unsigned long dim = affine_quotient_dimension(Ideal(ring, std::move(padded)), opts);
        if (have_prev && dim == prev) return dim;
        prev = dim;
        have_prev = true;
    }
    throw BudgetExceeded("local quotient dimension did not stabilize by degree 100");
}

} // namespace singdetail

struct LocalNumbers {
    unsigned long tau = 0;
    unsigned long mu = 0;
};

// Local Tjurina and Milnor numbers at a singular point with coordinates in
// the working field. The point is translated to the origin of the affine
// chart given by its pivot coordinate.
inline LocalNumbers local_numbers(const Polynomial& f, const ProjectivePoint& p,
                                  const GBOptions& opts = {}) {
    const RingPtr& R = f.ring();
    const std::size_t nv = R->nvars();
    if (p.coords.size() != nv)
        throw PreconditionError("point dimension does not match the polynomial ring");
    FieldPtr field = p.coords[0].field();
    const std::size_t piv = p.pivot();
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < nv; ++i)
        if (i != piv) vars.push_back(R->vars[i]);
    RingPtr aff = Ring::make(std::move(vars), field);
    std::vector<Polynomial> images(nv);
    std::size_t slot = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        if (i == piv) {
            images[i] = Polynomial::one(aff);
        } else {
            images[i] = Polynomial::variable(aff, slot) +
                        Polynomial::constant(aff, p.coords[i]);
            ++slot;
        }
    }
    Polynomial g = f.compose(aff, images);
    std::vector<FieldElement> origin(aff->nvars(), FieldElement::zero(field));
    if (!g.evaluate(origin).is_zero())
        throw PreconditionError("point does not lie on the hypersurface");
    std::vector<Polynomial> dg;
    for (std::size_t i = 0; i < aff->nvars(); ++i) dg.push_back(g.derivative(i));
    for (const auto& d : dg)
        if (!d.evaluate(origin).is_zero())
            throw PreconditionError("point is a smooth point, not a singularity");
    LocalNumbers out;
    out.mu = singdetail::local_quotient_dimension(aff, dg, opts);
    std::vector<Polynomial> tau_gens = dg;
    tau_gens.push_back(g);
    out.tau = singdetail::local_quotient_dimension(aff, tau_gens, opts);
    if (out.mu < out.tau)
        throw InternalError("local Milnor number smaller than local Tjurina number");
    return out;
}

// The rank test of the syzygy criterion: a singular point is
// quasi-homogeneous exactly when some entry of M_f is nonzero there.
struct QhVerdict {
    int rank_Mf = 0; // 0 or 1; only the >= 1 threshold matters
    bool quasi_homogeneous = false;
    std::size_t witness_col = 0; // generator index j with A^j_k(p) != 0
    std::size_t witness_row = 0; // component index k
};

inline QhVerdict qh_at_point(const GradedMatrix& Mf, const ProjectivePoint& p) {
    QhVerdict v;
    for (std::size_t j = 0; j < Mf.ncols(); ++j)
        for (std::size_t k = 0; k < Mf.nrows; ++k) {
            if (Mf.entry(k, j).is_zero()) continue;
            if (!Mf.entry(k, j).evaluate(p.coords).is_zero()) {
                v.rank_Mf = 1;
                v.quasi_homogeneous = true;
                v.witness_col = j;
                v.witness_row = k;
                return v;
            }
        }
    return v;
}

// Global test: all singularities are quasi-homogeneous exactly when
// J_f + I_f has no projective zero, where I_f is generated by the entries
// of M_f.
inline bool global_all_qh(const Polynomial& f, const GradedMatrix& Mf,
                          const GBOptions& opts = {}) {
    std::vector<Polynomial> gens = jacobian(f);
    for (const auto& col : Mf.columns)
        for (const auto& entry : col)
            if (!entry.is_zero()) gens.push_back(entry);
    return projective_is_empty(Ideal(f.ring(), std::move(gens)), opts).first;
}

// A syzygy of degree d_m nonvanishing at every point of Y (all points of Y
// must be smooth points or quasi-homogeneous singularities). Found as a
// random rational combination of a degree-d_m spanning set of the syzygy
// module, which succeeds generically.
inline PolyVec witness_syzygy(const Polynomial& f, const GradedMatrix& Mf,
                              const std::vector<ProjectivePoint>& Y, unsigned seed,
                              unsigned max_trials = 16) {
    const RingPtr& R = f.ring();
    const std::size_t nv = R->nvars();
    PolyVec df = jacobian(f);
    for (const auto& p : Y) {
        bool singular = true;
        for (const auto& d : df)
            if (!d.evaluate(p.coords).is_zero()) singular = false;
        if (singular && qh_at_point(Mf, p).rank_Mf == 0)
            throw PreconditionError("non-quasi-homogeneous point in the target set: " +
                                    p.str() + " (every syzygy vanishes there)");
    }
    long dm = 0;
    for (long s : Mf.col_shifts) dm = std::max(dm, s);
    const long d = f.degree();
    // spanning set of the degree-d_m graded piece reachable from the
    // generators, plus the Koszul syzygies when their degree d-1 fits
    std::vector<PolyVec> span;
    auto push_shifts = [&](const PolyVec& col, long coldeg) {
        if (coldeg > dm) return;
        for (const auto& m :
             singdetail::monomials_of_degree(nv, static_cast<unsigned>(dm - coldeg))) {
            Polynomial mono = Polynomial::monomial(R, m, FieldElement::one(R->field));
            PolyVec shifted;
            for (const auto& entry : col) shifted.push_back(mono * entry);
            span.push_back(std::move(shifted));
        }
    };
    for (std::size_t j = 0; j < Mf.ncols(); ++j) push_shifts(Mf.columns[j], Mf.col_shifts[j]);
    if (nv == 3)
        for (const auto& k : koszul_columns(f)) push_shifts(k, d - 1);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coeff(-10, 10);
    for (unsigned trial = 0; trial < max_trials; ++trial) {
        PolyVec cand(nv, Polynomial::zero(R));
        for (const auto& col : span) {
            FieldElement c{coeff(rng)};
            for (std::size_t i = 0; i < nv; ++i) cand[i] = cand[i] + col[i].scaled(c);
        }
        bool good = true;
        for (const auto& p : Y) {
            bool nonzero = false;
            for (const auto& entry : cand)
                if (!entry.evaluate(p.coords).is_zero()) nonzero = true;
            if (!nonzero) { good = false; break; }
        }
        if (good) return cand;
    }
    throw BudgetExceeded("no witness syzygy found in " + std::to_string(max_trials) +
                         " random trials");
}

// Chebyshev hypersurface fixture: homogenization by x0 of
// T_d(x1) + ... + T_d(xn) + k, with the expected node count when singular.
struct ChebyshevFixture {
    Polynomial f;
    bool nodal = false;         // false means smooth
    unsigned long nodes = 0;
};

inline ChebyshevFixture chebyshev_fixture(unsigned n, unsigned d, const Rational& k) {
    if (n < 2 || d < 2) throw PreconditionError("Chebyshev fixture needs n >= 2, d >= 2");
    RingPtr aff = Ring::make([&] {
        std::vector<std::string> v;
        for (unsigned i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
        return v;
    }());
    Polynomial g = Polynomial::constant(aff, FieldElement(k));
    for (unsigned i = 0; i < n; ++i) {
        Polynomial x = Polynomial::variable(aff, i);
        Polynomial t0 = Polynomial::one(aff), t1 = x;
        for (unsigned j = 2; j <= d; ++j) {
            Polynomial t2 = x.scaled(FieldElement(2)) * t1 - t0;
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        g = g + (d >= 2 ? t1 : x);
    }
    RingPtr proj = Ring::projective(n);
    ChebyshevFixture out{g.homogenize(0, d, proj)};
    const bool integral = k.get_den() == 1;
    const long ki = integral ? static_cast<long>(k.get_num().get_si()) : 0;
    if (integral && std::labs(ki) <= static_cast<long>(n) &&
        (static_cast<long>(n) + ki) % 2 == 0) {
        out.nodal = true;
        const unsigned long a = static_cast<unsigned long>((static_cast<long>(n) + ki) / 2);
        auto binom = [](unsigned long nn, unsigned long kk) {
            unsigned long r = 1;
            for (unsigned long i = 1; i <= kk; ++i) r = r * (nn - kk + i) / i;
            return r;
        };
        auto ipow = [](unsigned long b, unsigned long e) {
            unsigned long r = 1;
            while (e--) r *= b;
            return r;
        };
        if (d % 2 == 1) {
            const unsigned long d1 = (d - 1) / 2;
            out.nodes = binom(n, a) * ipow(d1, n);
        } else {
            const unsigned long d1 = d / 2;
            // binom(n,a) * d1^n * (1 - 1/d1)^a, an integer: d1^(n-a) (d1-1)^a
            out.nodes = binom(n, a) * ipow(d1, n - a) * ipow(d1 - 1, a);
        }
    }
    return out;
}

// Per-point record of the singularity analysis. The verdict comes from the
// rank criterion; cross_check records agreement with mu_p = tau_p and must
// be true (a false value is an internal bug, not a data state).
struct SingularityRecord {
    ProjectivePoint point;
    unsigned long tau_p = 0;
    unsigned long mu_p = 0;
    QhVerdict verdict;
    bool cross_check = false;
};

struct AnalysisReport {
    std::size_t n = 0; // ambient projective dimension
    long d = 0;
    FieldPtr field;
    bool smooth = false;
    FirstSyzygies syz;                   // M_f and the resolution data
    bool has_second_syzygies = false;    // n = 2, m >= 3 only
    GradedMatrix Pf;
    GradedMatrix N;                      // Koszul lift (n = 2)
    bool has_koszul_lift = false;
    std::vector<SingularityRecord> points;
    bool points_complete = true;
    unsigned long jacobian_degree = 0;   // deg J_f = total Tjurina number
    unsigned long residual_locus_degree = 0;
    unsigned long tau_total = 0;
    unsigned long mu_total = 0;
    bool all_qh = false;
    ChartChoice chart;
    unsigned seed = 0;
};

inline AnalysisReport analyze_hypersurface(const Polynomial& f, const FieldPtr& field,
                                           unsigned seed = 0, const GBOptions& opts = {},
                                           std::vector<ProjectivePoint> extra_points = {}) {
    const RingPtr& R = f.ring();
    AnalysisReport rep;
    rep.n = R->nvars() - 1;
    rep.d = f.degree();
    rep.field = field;
    rep.seed = seed;
    if (!f.is_homogeneous() || rep.d < 2)
        throw PreconditionError("input must be homogeneous of degree at least 2");

    Ideal Jf = jacobian_ideal(f);
    auto empt = projective_is_empty(Jf, opts);
    rep.smooth = empt.first;

    rep.syz = first_syzygies(f, opts);
    if (rep.n == 2 && rep.syz.res.m >= 3) {
        rep.Pf = second_syzygies(f, rep.syz.Mf, rep.syz.res, opts);
        rep.has_second_syzygies = true;
    }
    if (rep.n == 2) {
        rep.N = lift_koszul(f, rep.syz.Mf, opts);
        rep.has_koszul_lift = true;
    }

    if (rep.smooth) {
        rep.all_qh = true;
        rep.chart.matrix.assign(R->nvars(), std::vector<Rational>(R->nvars(), Rational(0)));
        for (std::size_t i = 0; i < R->nvars(); ++i) rep.chart.matrix[i][i] = 1;
        return rep;
    }

    HilbertProfile prof = hilbert_profile(Jf, opts);
    if (!prof.stabilized)
        throw PreconditionError("singular locus is not zero-dimensional");
    rep.jacobian_degree = prof.stable_value;

    rep.chart = choose_transversal_chart(f, seed, opts);
    rep.tau_total = total_tjurina(f, rep.chart.matrix, opts);
    rep.mu_total = total_milnor(f, rep.chart.matrix, opts);
    if (rep.tau_total != rep.jacobian_degree)
        throw InternalError("total Tjurina number disagrees with deg J_f: " +
                            std::to_string(rep.tau_total) + " vs " +
                            std::to_string(rep.jacobian_degree));

    SingularLocus locus = find_singular_points(f, field, opts);
    rep.points_complete = locus.complete;
    for (auto& p : extra_points) {
        bool known = false;
        for (const auto& q : locus.points)
            if (p == q) known = true;
        if (!known) locus.points.push_back(std::move(p));
    }

    unsigned long tau_resolved = 0;
    for (const auto& p : locus.points) {
        SingularityRecord rec{p};
        LocalNumbers loc = local_numbers(f, p, opts);
        rec.tau_p = loc.tau;
        rec.mu_p = loc.mu;
        rec.verdict = qh_at_point(rep.syz.Mf, p);
        rec.cross_check = rec.verdict.quasi_homogeneous == (rec.mu_p == rec.tau_p);
        if (!rec.cross_check)
            throw InternalError("rank criterion disagrees with mu_p = tau_p at " + p.str());
        tau_resolved += rec.tau_p;
        rep.points.push_back(std::move(rec));
    }
    if (tau_resolved > rep.tau_total)
        throw InternalError("local Tjurina numbers exceed the total");
    rep.residual_locus_degree = rep.tau_total - tau_resolved;

    rep.all_qh = global_all_qh(f, rep.syz.Mf, opts);
    if (rep.all_qh != (rep.mu_total == rep.tau_total))
        throw InternalError("global rank criterion disagrees with mu = tau");
    return rep;
}

} // namespace jacsyz
