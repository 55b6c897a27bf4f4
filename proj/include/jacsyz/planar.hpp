#pragma once

#include <string>
#include <utility>
#include <vector>

#include "syzygy.hpp"

namespace jacsyz {

// The product P^n x P^n is coordinatized by x0..xn, y0..yn in one ring; a
// bigraded form is bihomogeneous with the recorded (x-degree, y-degree).
struct BigradedForm {
    Polynomial form;
    long xdeg = 0;
    long ydeg = 0;
};

// Numerical class a h1^2 + b h1 h2 + c h2^2 in the Chow ring of P^2 x P^2.
struct BidegreeClass {
    long alpha = 0;
    long beta = 0;
    long gamma = 0;
    friend bool operator==(const BidegreeClass& a, const BidegreeClass& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
    }
};

namespace planardetail {

// The x-variables of `R` together with matching y-variables, in one ring.
inline RingPtr product_ring(const RingPtr& R) {
    std::vector<std::string> vars = R->vars;
    for (std::size_t i = 0; i < R->nvars(); ++i) vars.push_back("y" + std::to_string(i));
    return Ring::make(std::move(vars), R->field);
}

// Embeds an x-polynomial into the product ring.
inline Polynomial embed_x(const Polynomial& p, const RingPtr& prod) {
    std::vector<std::size_t> up(p.ring()->nvars());
    for (std::size_t i = 0; i < up.size(); ++i) up[i] = i;
    return p.map_variables(prod, up);
}

inline void check_bidegree(const BigradedForm& g, std::size_t nx) {
    for (const auto& t : g.form.terms()) {
        long dx = 0, dy = 0;
        for (std::size_t v = 0; v < t.mono.nvars(); ++v)
            (v < nx ? dx : dy) += t.mono[v];
        if (dx != g.xdeg || dy != g.ydeg)
            throw InternalError("form is not bihomogeneous of the declared bidegree");
    }
}

// Determinant of a square polynomial matrix by Laplace expansion along the
// first column; the fixture sizes (at most 4x4) keep this cheap.
inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& M, const RingPtr& ring) {
    const std::size_t n = M.size();
    if (n == 0) return Polynomial::one(ring);
    if (n == 1) return M[0][0];
    Polynomial det = Polynomial::zero(ring);
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i][0].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            sub.emplace_back(M[r].begin() + 1, M[r].end());
        }
        Polynomial cof = M[i][0] * poly_det(sub, ring);
        det = (i % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

} // namespace planardetail

// The equations of Z_f: the j-th form is (y0, y1, y2) times column j of M_f,
// of bidegree (d_j, 1).
inline std::vector<BigradedForm> zf_generators(const GradedMatrix& Mf) {
    const RingPtr& R = Mf.ring;
    if (R->nvars() != 3) throw PreconditionError("Z_f generators require a plane curve");
    RingPtr prod = planardetail::product_ring(R);
    std::vector<BigradedForm> out;
    for (std::size_t j = 0; j < Mf.ncols(); ++j) {
        Polynomial g = Polynomial::zero(prod);
        for (std::size_t i = 0; i < 3; ++i)
            g = g + Polynomial::variable(prod, 3 + i) *
                        planardetail::embed_x(Mf.entry(i, j), prod);
        BigradedForm form{std::move(g), Mf.col_shifts[j], 1};
        planardetail::check_bidegree(form, 3);
        out.push_back(std::move(form));
    }
    return out;
}

// The Hilbert-Burch matrix S = (P_f | P) of Z_f, with P = N (y0, y1, y2)^t,
// together with the column classes and the verified identities.
struct HilbertBurch {
    RingPtr prod;                                    // coordinate ring of P^2 x P^2
    std::vector<std::vector<Polynomial>> S;          // m x (m-1), column-major
    // divisor class a h1 + b h2 of each column, stored as (a, b, 0):
    // B_j = (1+e_j-d) h1 + h2 for the P_f block, B_{m-1} = (d-1) h1 + 2 h2
    std::vector<BidegreeClass> column_classes;
    Rational proportionality;                        // minors = c * (Z_f generators)
};

inline HilbertBurch hilbert_burch(const GradedMatrix& Mf, const GradedMatrix& Pf,
                                  const GradedMatrix& N, long d) {
    const RingPtr& R = Mf.ring;
    if (R->nvars() != 3) throw PreconditionError("Hilbert-Burch matrix requires a plane curve");
    const std::size_t m = Mf.ncols();
    if (m < 2) throw PreconditionError("Hilbert-Burch matrix requires m >= 2");
    if (m >= 3 && (Pf.ncols() != m - 2 || Pf.nrows != m))
        throw PreconditionError("second syzygy matrix has the wrong shape");
    if (N.nrows != m || N.ncols() != 3)
        throw PreconditionError("Koszul lift has the wrong shape");
    RingPtr prod = planardetail::product_ring(R);

    HilbertBurch hb;
    hb.prod = prod;
    // the P_f block, embedded into the product ring
    for (std::size_t j = 0; m >= 3 && j < m - 2; ++j) {
        std::vector<Polynomial> col;
        for (std::size_t i = 0; i < m; ++i)
            col.push_back(planardetail::embed_x(Pf.entry(i, j), prod));
        hb.S.push_back(std::move(col));
        const long e_j = Pf.col_shifts[j] + d - 1;
        hb.column_classes.push_back({1 + e_j - d, 1, 0});
    }
    // the section column P = N (y0, y1, y2)^t
    std::vector<Polynomial> sec;
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial entry = Polynomial::zero(prod);
        for (std::size_t k = 0; k < 3; ++k)
            entry = entry + Polynomial::variable(prod, 3 + k) *
                                planardetail::embed_x(N.entry(i, k), prod);
        sec.push_back(std::move(entry));
    }
    hb.S.push_back(std::move(sec));
    hb.column_classes.push_back({d - 1, 2, 0});

    // identity 1: (Z_f generators) . S = 0 column by column
    std::vector<BigradedForm> zf = zf_generators(Mf);
    for (const auto& col : hb.S) {
        Polynomial dot = Polynomial::zero(prod);
        for (std::size_t i = 0; i < m; ++i) dot = dot + zf[i].form * col[i];
        if (!dot.is_zero())
            throw InternalError("Z_f generators do not annihilate the Hilbert-Burch matrix");
    }

    // identity 2: the maximal minors of S are proportional, with one rational
    // constant (up to alternating sign), to the Z_f generators
    std::vector<Polynomial> minors;
    for (std::size_t drop = 0; drop < m; ++drop) {
        std::vector<std::vector<Polynomial>> sq;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == drop) continue;
            std::vector<Polynomial> row;
            for (const auto& col : hb.S) row.push_back(col[i]);
            sq.push_back(std::move(row));
        }
        Polynomial minor = planardetail::poly_det(sq, prod);
        minors.push_back(drop % 2 == 0 ? minor : -minor);
    }
    bool have_c = false;
    Rational c(0);
    for (std::size_t i = 0; i < m; ++i) {
        if (zf[i].form.is_zero()) {
            if (!minors[i].is_zero())
                throw InternalError("minor of S not proportional to the Z_f generator");
            continue;
        }
        const auto& lead = zf[i].form.terms().front();
        // candidate constant from the matching coefficient
        FieldElement num = FieldElement::zero(prod->field);
        for (const auto& t : minors[i].terms())
            if (t.mono == lead.mono) num = t.coeff;
        FieldElement ratio = num / lead.coeff;
        if (!ratio.is_rational_value())
            throw InternalError("non-rational proportionality constant");
        Rational ci = ratio.rational_value();
        if (!have_c) {
            c = ci;
            have_c = true;
        } else if (ci != c) {
            throw InternalError("minors of S use different proportionality constants");
        }
        if (!(minors[i] - zf[i].form.scaled(FieldElement(ci))).is_zero())
            throw InternalError("minor of S not proportional to the Z_f generator");
    }
    if (!have_c || c == 0)
        throw InternalError("vanishing maximal minors of the Hilbert-Burch matrix");
    hb.proportionality = c;
    return hb;
}

// Numerical classes of the polar graph closure S_f and of Z_f, with the
// vertical defect mu - tau that separates them.
struct PlanarClasses {
    BidegreeClass sf;
    BidegreeClass zf;
    long polar_degree = 0;  // deg of the polar map = (d-1)^2 - mu
    long defect = 0;        // mu - tau = sum of vertical multiplicities
    bool zf_irreducible = false;
};

inline PlanarClasses classes(long d, long mu, long tau) {
    if (d < 2 || tau < 0 || mu < tau)
        throw PreconditionError("classes need d >= 2 and mu >= tau >= 0");
    PlanarClasses out;
    out.polar_degree = (d - 1) * (d - 1) - mu;
    out.sf = {out.polar_degree, d - 1, 1};
    out.zf = {(d - 1) * (d - 1) - tau, d - 1, 1};
    out.defect = mu - tau;
    out.zf_irreducible = (out.defect == 0);
    return out;
}

// The generators of the Koszul hull: the 2x2 minors y_i d_j f - y_j d_i f of
// the matrix with rows (y_0..y_n) and (d_0 f..d_n f), each of bidegree
// (d-1, 1).
inline std::vector<BigradedForm> koszul_hull_generators(const Polynomial& f) {
    const RingPtr& R = f.ring();
    const std::size_t nv = R->nvars();
    RingPtr prod = planardetail::product_ring(R);
    PolyVec df = jacobian(f);
    const long d = f.degree();
    std::vector<BigradedForm> out;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            Polynomial g = Polynomial::variable(prod, nv + i) *
                               planardetail::embed_x(df[j], prod) -
                           Polynomial::variable(prod, nv + j) *
                               planardetail::embed_x(df[i], prod);
            BigradedForm form{std::move(g), d - 1, 1};
            planardetail::check_bidegree(form, nv);
            out.push_back(std::move(form));
        }
    return out;
}

// Evaluates a bigraded form at a graph point (p, grad f(p)).
inline FieldElement evaluate_at_graph_point(const BigradedForm& g, const Polynomial& f,
                                            const std::vector<FieldElement>& p) {
    std::vector<FieldElement> coords = p;
    for (const auto& partial : jacobian(f)) coords.push_back(partial.evaluate(p));
    return g.form.evaluate(coords);
}

// The coefficient identities behind the class computation, checked from the
// computed resolution data: with alpha = (d-1)^2 - tau, beta = d-1, gamma = 1,
//   alpha + (d-1) sum(1+e_j-d) + sum_{i<j}(1+e_i-d)(1+e_j-d) = sum_{i<j} d_i d_j
//   beta + (m-1) sum(1+e_j-d) + (m-2)(d-1)                   = (m-1) sum d_i
//   gamma + C(m-2,2) + 2(m-2)                                 = C(m,2)
inline bool class_identities_hold(long d, long tau, const ResolutionData& res) {
    const long m = static_cast<long>(res.m);
    long sum_s = 0, sum_pairs_s = 0;
    for (std::size_t j = 0; j < res.e.size(); ++j) {
        sum_s += 1 + res.e[j] - d;
        for (std::size_t i = 0; i < j; ++i)
            sum_pairs_s += (1 + res.e[i] - d) * (1 + res.e[j] - d);
    }
    long sum_d = 0, sum_pairs_d = 0;
    for (std::size_t j = 0; j < res.exponents.size(); ++j) {
        sum_d += res.exponents[j];
        for (std::size_t i = 0; i < j; ++i)
            sum_pairs_d += res.exponents[i] * res.exponents[j];
    }
    const long alpha = (d - 1) * (d - 1) - tau;
    const bool row_a = alpha + (d - 1) * sum_s + sum_pairs_s == sum_pairs_d;
    const bool row_b = (d - 1) + (m - 1) * sum_s + (m - 2) * (d - 1) == (m - 1) * sum_d;
    const bool row_c = 1 + (m - 2) * (m - 3) / 2 + 2 * (m - 2) == m * (m - 1) / 2;
    return row_a && row_b && row_c;
}

} // namespace jacsyz
