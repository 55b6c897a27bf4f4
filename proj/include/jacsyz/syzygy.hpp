#pragma once

#include <string>
#include <vector>

#include "jacsyz/ideal.hpp"

namespace jacsyz {

using PolyVec = std::vector<Polynomial>;

// Homogeneous generating set of the syzygy module of elements of R^r: every
// returned w satisfies sum_i w_i * gens_i = 0 and the set generates. Computed
// by a position-over-term elimination order on R^{r+s}: basis elements whose
// lead lies past the first r components have no support there at all, and
// their tails are exactly the syzygies.
inline std::vector<PolyVec> syzygies_of(const std::vector<PolyVec>& gens,
                                        const RingPtr& ring,
                                        const GBOptions& opts = {}) {
    if (gens.empty()) return {};
    const std::size_t r = gens[0].size();
    const std::size_t s = gens.size();
    for (const auto& g : gens)
        if (g.size() != r)
            throw PreconditionError("syzygy generators live in different free modules");
    ModuleOrder ord{MonomialOrder::grevlex(), r};
    ModuleGB gb(r + s, ord, opts);
    std::vector<ModPoly> mg;
    for (std::size_t i = 0; i < s; ++i) {
        PolyVec v = gens[i];
        v.resize(r + s, Polynomial::zero(ring));
        v[r + i] = Polynomial::one(ring);
        mg.push_back(ModPoly::from_vector(v, ord));
    }
    gb.add_generators(mg);
    std::vector<PolyVec> out;
    for (const auto& b : gb.reduced_basis()) {
        if (b.lead().comp < r) continue;
        PolyVec full = b.to_vector(ring);
        out.emplace_back(full.begin() + static_cast<long>(r), full.end());
    }
    return out;
}

// Polynomial matrix with degree bookkeeping: column j is homogeneous with
// deg(entry_ij) = col_shifts[j] - row_shifts[i] whenever nonzero.
struct GradedMatrix {
    RingPtr ring;
    std::size_t nrows = 0;
    std::vector<PolyVec> columns;
    std::vector<long> row_shifts;
    std::vector<long> col_shifts;

    std::size_t ncols() const { return columns.size(); }
    const Polynomial& entry(std::size_t i, std::size_t j) const { return columns[j][i]; }

    void check_grading() const {
        for (std::size_t j = 0; j < ncols(); ++j)
            for (std::size_t i = 0; i < nrows; ++i) {
                const Polynomial& p = entry(i, j);
                if (p.is_zero()) continue;
                if (!p.is_homogeneous() ||
                    p.degree() != col_shifts[j] - row_shifts[i])
                    throw InternalError("graded matrix entry violates its shifts");
            }
    }
};

// Matrix product of the underlying polynomial matrices.
inline std::vector<PolyVec> matrix_product(const GradedMatrix& A, const GradedMatrix& B) {
    if (A.ncols() != B.nrows)
        throw PreconditionError("matrix product shape mismatch");
    std::vector<PolyVec> out(B.ncols(), PolyVec(A.nrows, Polynomial::zero(A.ring)));
    for (std::size_t j = 0; j < B.ncols(); ++j)
        for (std::size_t i = 0; i < A.nrows; ++i)
            for (std::size_t k = 0; k < A.ncols(); ++k)
                out[j][i] = out[j][i] + A.entry(i, k) * B.entry(k, j);
    return out;
}

namespace syzdetail {

inline long column_degree(const PolyVec& col, const std::vector<long>& row_shifts) {
    long deg = -1;
    for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i].is_zero()) continue;
        if (!col[i].is_homogeneous())
            throw InternalError("syzygy entry is not homogeneous");
        long d = col[i].degree() + row_shifts[i];
        if (deg == -1)
            deg = d;
        else if (deg != d)
            throw InternalError("syzygy column is not homogeneous for the shifts");
    }
    if (deg == -1) throw InternalError("zero column in syzygy generating set");
    return deg;
}

inline std::string column_key(const PolyVec& col) {
    std::string s;
    for (const auto& p : col) s += p.str() + "|";
    return s;
}

inline bool member_of(const PolyVec& v, const std::vector<PolyVec>& others,
                      const RingPtr& ring, const GBOptions& opts) {
    if (others.empty()) return false;
    const std::size_t r = v.size();
    ModuleOrder ord{MonomialOrder::grevlex(), 0};
    ModuleGB gb(r, ord, opts);
    std::vector<ModPoly> mg;
    for (const auto& o : others) mg.push_back(ModPoly::from_vector(o, ord));
    gb.add_generators(mg);
    gb.compute();
    return gb.normal_form(ModPoly::from_vector(v, ord)).is_zero();
}

} // namespace syzdetail

// Degree-ascending minimalization of a homogeneous generating set: a column
// is dropped when it lies in the module generated by the remaining ones
// (graded Nakayama makes the greedy pass produce a minimal set).
inline GradedMatrix minimalize(std::vector<PolyVec> gens, RingPtr ring,
                               std::vector<long> row_shifts,
                               const GBOptions& opts = {}) {
    if (gens.empty()) throw PreconditionError("minimalize needs at least one generator");
    std::stable_sort(gens.begin(), gens.end(), [&](const PolyVec& a, const PolyVec& b) {
        long da = syzdetail::column_degree(a, row_shifts);
        long db = syzdetail::column_degree(b, row_shifts);
        if (da != db) return da < db;
        return syzdetail::column_key(a) < syzdetail::column_key(b);
    });
    std::vector<bool> alive(gens.size(), true);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<PolyVec> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i && alive[j]) others.push_back(gens[j]);
        if (syzdetail::member_of(gens[i], others, ring, opts)) alive[i] = false;
    }
    GradedMatrix M;
    M.ring = ring;
    M.nrows = gens[0].size();
    M.row_shifts = std::move(row_shifts);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!alive[i]) continue;
        M.col_shifts.push_back(syzdetail::column_degree(gens[i], M.row_shifts));
        M.columns.push_back(std::move(gens[i]));
    }
    M.check_grading();
    return M;
}

// Exponents and second-syzygy degrees of the minimal resolution.
struct ResolutionData {
    std::size_t m = 0;
    std::vector<long> exponents; // d_1 <= ... <= d_m
    std::vector<long> e;         // e_1 <= ... <= e_{m-2} (plane curves, m >= 3)
    std::vector<long> epsilons;  // eps_j = e_j - d - d_{j+2} + 1 >= 1
};

struct FirstSyzygies {
    GradedMatrix Mf; // (n+1) x m, row shifts 0, column shifts d_i
    ResolutionData res;
};

// Minimal first syzygy matrix of the Jacobian ideal.
inline FirstSyzygies first_syzygies(const Polynomial& f, const GBOptions& opts = {}) {
    const RingPtr& R = f.ring();
    if (!f.is_homogeneous() || f.degree() < 2)
        throw PreconditionError("first syzygies need a homogeneous form of degree >= 2");
    PolyVec partials = jacobian(f);
    for (const auto& p : partials)
        if (p.is_zero())
            throw PreconditionError(
                "a partial derivative vanishes identically: the hypersurface is a cone");
    std::vector<PolyVec> scalar_gens;
    for (const auto& p : partials) scalar_gens.push_back({p});
    std::vector<PolyVec> syz = syzygies_of(scalar_gens, R, opts);
    if (syz.empty())
        throw InternalError("empty syzygy module for a Jacobian ideal of height <= n");
    FirstSyzygies out;
    out.Mf = minimalize(std::move(syz), R, std::vector<long>(R->nvars(), 0), opts);
    out.res.m = out.Mf.ncols();
    out.res.exponents = out.Mf.col_shifts;
    return out;
}

// Second syzygy matrix P_f of a plane curve with m >= 3, with the degree
// bookkeeping e_j, eps_j filled into res and verified.
inline GradedMatrix second_syzygies(const Polynomial& f, const GradedMatrix& Mf,
                                    ResolutionData& res, const GBOptions& opts = {}) {
    const RingPtr& R = f.ring();
    if (R->nvars() != 3) throw PreconditionError("second syzygies are planar only");
    const long d = f.degree();
    if (res.m < 3) throw PreconditionError("second syzygies need m >= 3");
    std::vector<PolyVec> syz = syzygies_of(Mf.columns, R, opts);
    if (syz.empty()) throw InternalError("missing second syzygies for m >= 3 plane curve");
    GradedMatrix Pf = minimalize(std::move(syz), R, Mf.col_shifts, opts);
    if (Pf.ncols() != res.m - 2)
        throw InternalError("second syzygy count differs from m-2");
    res.e.clear();
    res.epsilons.clear();
    for (std::size_t j = 0; j < Pf.ncols(); ++j) {
        long e_j = Pf.col_shifts[j] + d - 1;
        res.e.push_back(e_j);
        long eps = e_j - d - res.exponents[j + 2] + 1;
        if (eps < 1) throw InternalError("second syzygy degree violates eps_j >= 1");
        res.epsilons.push_back(eps);
    }
    long eps_sum = 0;
    for (long eps : res.epsilons) eps_sum += eps;
    if (res.exponents[0] + res.exponents[1] != d - 1 + eps_sum)
        throw InternalError("d_1 + d_2 = d - 1 + sum eps_j identity failed");
    // degree bookkeeping from the exact sequence
    long lhs = d - 1, rhs = 0;
    for (long di : res.exponents) lhs -= di;
    for (long ej : res.e) rhs += d - 1 - ej;
    if (lhs != rhs)
        throw InternalError("resolution degree bookkeeping identity failed");
    return Pf;
}

// Right-hand side of the tau_C identity from the resolution data; must equal
// deg J_f for plane curves.
inline long tau_from_resolution(long d, const ResolutionData& res) {
    long v = (d - 1) * (d - 1);
    for (std::size_t i = 0; i < res.exponents.size(); ++i)
        for (std::size_t j = i + 1; j < res.exponents.size(); ++j)
            v -= res.exponents[i] * res.exponents[j];
    for (std::size_t i = 0; i < res.e.size(); ++i)
        for (std::size_t j = i + 1; j < res.e.size(); ++j)
            v += (d - 1 - res.e[i]) * (d - 1 - res.e[j]);
    for (long ej : res.e) v += (1 - d) * (d - 1 - ej);
    return v;
}

// Columns of the 3x3 Koszul matrix K of a plane curve.
inline std::vector<PolyVec> koszul_columns(const Polynomial& f) {
    if (f.ring()->nvars() != 3) throw PreconditionError("Koszul matrix is planar only");
    PolyVec df = jacobian(f);
    Polynomial z = Polynomial::zero(f.ring());
    return {
        {z, -df[2], df[1]},
        {df[2], z, -df[0]},
        {-df[1], df[0], z},
    };
}

// Lift of the Koszul relations through M_f: the m x 3 matrix N with
// M_f * N = K, obtained per column by module normal form against the column
// span of M_f in an elimination module.
inline GradedMatrix lift_koszul(const Polynomial& f, const GradedMatrix& Mf,
                                const GBOptions& opts = {}) {
    const RingPtr& R = f.ring();
    if (R->nvars() != 3) throw PreconditionError("Koszul lift is planar only");
    const std::size_t m = Mf.ncols();
    ModuleOrder ord{MonomialOrder::grevlex(), 3};
    ModuleGB gb(3 + m, ord, opts);
    std::vector<ModPoly> mg;
    for (std::size_t i = 0; i < m; ++i) {
        PolyVec v = Mf.columns[i];
        v.resize(3 + m, Polynomial::zero(R));
        v[3 + i] = Polynomial::one(R);
        mg.push_back(ModPoly::from_vector(v, ord));
    }
    gb.add_generators(mg);
    gb.compute();

    GradedMatrix N;
    N.ring = R;
    N.nrows = m;
    N.row_shifts = Mf.col_shifts;
    for (const PolyVec& k : koszul_columns(f)) {
        PolyVec v = k;
        v.resize(3 + m, Polynomial::zero(R));
        ModPoly rem = gb.normal_form(ModPoly::from_vector(v, ord));
        PolyVec full = rem.is_zero() ? PolyVec(3 + m, Polynomial::zero(R))
                                     : rem.to_vector(R);
        for (std::size_t c = 0; c < 3; ++c)
            if (!full[c].is_zero())
                throw InternalError(
                    "Koszul syzygy is not in the span of M_f: M_f is not generating");
        PolyVec col;
        for (std::size_t i = 0; i < m; ++i) col.push_back(-full[3 + i]);
        N.columns.push_back(std::move(col));
        N.col_shifts.push_back(f.degree() - 1);
    }
    N.check_grading();
    return N;
}

} // namespace jacsyz
