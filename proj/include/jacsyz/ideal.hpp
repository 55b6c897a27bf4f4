#pragma once

#include <map>
#include <string>
#include <vector>

#include "jacsyz/cache.hpp"
#include "jacsyz/groebner.hpp"

namespace jacsyz {

inline ModuleOrder ideal_order(MonomialOrder o) { return ModuleOrder{std::move(o), 0}; }

inline ModPoly to_rank1(const Polynomial& p, const ModuleOrder& ord) {
    return ModPoly::from_vector({p}, ord);
}
inline Polynomial from_rank1(const ModPoly& m, const RingPtr& ring) {
    return m.to_vector(ring)[0];
}

// Ideal in a shared ring with cached reduced Groebner bases per order.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)) {
        for (auto& g : gens)
            if (!g.is_zero()) gens_.push_back(std::move(g));
        std::sort(gens_.begin(), gens_.end(),
                  [](const Polynomial& a, const Polynomial& b) { return compare_less(a, b); });
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order,
                                                  const GBOptions& opts = {}) const {
        auto it = bases_.find(order.key());
        if (it != bases_.end()) return it->second;
        if (!opts.cache_dir.empty()) {
            std::string key = gbcache::content_key(gens_, order.key(), ring_->field);
            if (auto loaded = gbcache::load(opts.cache_dir, key, ring_))
                return bases_.emplace(order.key(), std::move(*loaded)).first->second;
        }
        ModuleOrder mord = ideal_order(order);
        ModuleGB gb(1, mord, opts);
        std::vector<ModPoly> mg;
        for (const auto& g : gens_) mg.push_back(to_rank1(g, mord));
        gb.add_generators(mg);
        std::vector<Polynomial> basis;
        for (const auto& b : gb.reduced_basis()) basis.push_back(from_rank1(b, ring_));
        if (!opts.cache_dir.empty()) {
            std::string key = gbcache::content_key(gens_, order.key(), ring_->field);
            gbcache::store(opts.cache_dir, key, basis);
        }
        return bases_.emplace(order.key(), std::move(basis)).first->second;
    }

    Polynomial normal_form(const Polynomial& f, const MonomialOrder& order,
                           const GBOptions& opts = {}) const {
        const auto& basis = groebner_basis(order, opts);
        ModuleOrder mord = ideal_order(order);
        std::vector<ModPoly> mb;
        for (const auto& b : basis) mb.push_back(to_rank1(b, mord));
        return from_rank1(gbimpl::normal_form(to_rank1(f, mord), mb, mord), ring_);
    }

    bool contains(const Polynomial& f, const GBOptions& opts = {}) const {
        return normal_form(f, MonomialOrder::grevlex(), opts).is_zero();
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::map<std::string, std::vector<Polynomial>> bases_;
};

// I : h^infinity via the extra-variable construction: adjoin s in front,
// add 1 - s*h, eliminate s.
inline Ideal saturate(const Ideal& I, const Polynomial& h, const GBOptions& opts = {}) {
    if (h.is_zero()) throw PreconditionError("saturation by the zero polynomial");
    if (h.is_constant()) return I;
    const RingPtr& R = I.ring();
    std::vector<std::string> vars{"_s"};
    for (const auto& v : R->vars) vars.push_back(v);
    RingPtr Rx = Ring::make(vars, R->field);
    std::vector<std::size_t> up(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) up[i] = i + 1;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.map_variables(Rx, up));
    gens.push_back(Polynomial::one(Rx) -
                   Polynomial::variable(Rx, 0) * h.map_variables(Rx, up));
    Ideal J(Rx, std::move(gens));
    const auto& basis = J.groebner_basis(MonomialOrder::elimination_block(1), opts);
    std::vector<Polynomial> kept;
    std::vector<std::size_t> down(Rx->nvars(), 0);
    for (std::size_t i = 1; i < Rx->nvars(); ++i) down[i] = i - 1;
    for (const auto& b : basis) {
        bool uses_s = false;
        for (const auto& t : b.terms())
            if (t.mono[0] > 0) { uses_s = true; break; }
        if (!uses_s) kept.push_back(b.map_variables(R, down));
    }
    return Ideal(R, std::move(kept));
}

// I intersected with the subring that omits the first k variables.
inline Ideal elimination_ideal(const Ideal& I, std::size_t k, const GBOptions& opts = {}) {
    const RingPtr& R = I.ring();
    if (k == 0) return I;
    if (k >= R->nvars()) throw PreconditionError("cannot eliminate every variable");
    const auto& basis = I.groebner_basis(MonomialOrder::elimination_block(k), opts);
    RingPtr S = Ring::make(
        std::vector<std::string>(R->vars.begin() + static_cast<long>(k), R->vars.end()),
        R->field);
    std::vector<std::size_t> down(R->nvars(), 0);
    for (std::size_t i = k; i < R->nvars(); ++i) down[i] = i - k;
    std::vector<Polynomial> kept;
    for (const auto& b : basis) {
        bool uses_front = false;
        for (const auto& t : b.terms())
            for (std::size_t v = 0; v < k && !uses_front; ++v)
                if (t.mono[v] > 0) uses_front = true;
        if (!uses_front) kept.push_back(b.map_variables(S, down));
    }
    return Ideal(S, std::move(kept));
}

namespace hilbert_detail {

// Counts monomials of total degree t in `nvars` variables avoiding every
// lead monomial. Recursive enumeration with a divisibility prune.
inline unsigned long count_standard(std::vector<unsigned>& partial, std::size_t var,
                                    unsigned remaining, const std::vector<Monomial>& leads) {
    const std::size_t n = partial.size();
    if (var == n - 1) {
        partial[var] = remaining;
        for (const auto& l : leads) {
            bool div = true;
            for (std::size_t i = 0; i < n && div; ++i)
                if (l[i] > partial[i]) div = false;
            if (div) { partial[var] = 0; return 0; }
        }
        partial[var] = 0;
        return 1;
    }
    unsigned long total = 0;
    for (unsigned e = 0; e <= remaining; ++e) {
        partial[var] = e;
        // prune: a lead supported on the assigned prefix already divides
        bool dead = false;
        for (const auto& l : leads) {
            bool div = true;
            for (std::size_t i = 0; i <= var && div; ++i)
                if (l[i] > partial[i]) div = false;
            if (div) {
                bool suffix_free = true;
                for (std::size_t i = var + 1; i < n && suffix_free; ++i)
                    if (l[i] > 0) suffix_free = false;
                if (suffix_free) dead = true;
            }
            if (dead) break;
        }
        if (!dead) total += count_standard(partial, var + 1, remaining - e, leads);
        partial[var] = 0;
    }
    return total;
}

inline unsigned long standard_monomial_count(std::size_t nvars, unsigned degree,
                                             const std::vector<Monomial>& leads) {
    std::vector<unsigned> partial(nvars, 0);
    return count_standard(partial, 0, degree, leads);
}

} // namespace hilbert_detail

// Degreewise dimensions of R/I for a homogeneous ideal I, with stabilization
// detection for zero-dimensional projective quotients.
struct HilbertProfile {
    std::vector<unsigned long> values; // values[t] = dim (R/I)_t
    bool stabilized = false;
    unsigned long stable_value = 0;
    std::size_t stabilization_index = 0;
    std::size_t first_zero_degree = 0; // meaningful when stable_value == 0
};

inline HilbertProfile hilbert_profile(const Ideal& I, const GBOptions& opts = {}) {
    for (const auto& g : I.generators())
        if (!g.is_homogeneous())
            throw PreconditionError("Hilbert profile requires a homogeneous ideal");
    const auto& basis = I.groebner_basis(MonomialOrder::grevlex(), opts);
    std::vector<Monomial> leads;
    long gen_deg_sum = 0;
    for (const auto& b : basis) leads.push_back(b.leading_term(MonomialOrder::grevlex()).mono);
    for (const auto& g : I.generators()) gen_deg_sum += g.degree();
    const std::size_t nvars = I.ring()->nvars();
    const std::size_t proj_dim = nvars - 1;
    // Castelnuovo-style heuristic bound, then demand a constant run.
    const long heuristic = std::max<long>(0, gen_deg_sum - static_cast<long>(proj_dim));
    const std::size_t run_needed = std::max<std::size_t>(2, proj_dim);

    HilbertProfile prof;
    std::size_t run = 0;
    for (std::size_t t = 0;; ++t) {
        if (t > opts.degree_budget)
            throw BudgetExceeded("Hilbert profile degree budget exceeded (" +
                                 std::to_string(opts.degree_budget) + ")");
        unsigned long v =
            hilbert_detail::standard_monomial_count(nvars, static_cast<unsigned>(t), leads);
        prof.values.push_back(v);
        if (v == 0) {
            // once zero, every higher degree is zero
            prof.stabilized = true;
            prof.stable_value = 0;
            prof.stabilization_index = t;
            prof.first_zero_degree = t;
            return prof;
        }
        if (t > 0 && v == prof.values[t - 1])
            ++run;
        else
            run = 0;
        if (static_cast<long>(t) >= heuristic && run >= run_needed) {
            prof.stabilized = true;
            prof.stable_value = v;
            prof.stabilization_index = t - run;
            return prof;
        }
    }
}

inline std::pair<bool, std::size_t> projective_is_empty(const Ideal& I,
                                                        const GBOptions& opts = {}) {
    HilbertProfile prof = hilbert_profile(I, opts);
    if (prof.stabilized && prof.stable_value == 0) return {true, prof.first_zero_degree};
    return {false, 0};
}

inline unsigned long projective_degree(const Ideal& I, const GBOptions& opts = {}) {
    HilbertProfile prof = hilbert_profile(I, opts);
    if (!prof.stabilized)
        throw BudgetExceeded("Hilbert profile did not stabilize within budget");
    return prof.stable_value;
}

// Vector-space dimension of an affine quotient ring (count of standard
// monomials); errors when the quotient is not finite-dimensional.
inline unsigned long affine_quotient_dimension(const Ideal& I, const GBOptions& opts = {}) {
    const auto& basis = I.groebner_basis(MonomialOrder::grevlex(), opts);
    if (basis.empty())
        throw PreconditionError(
            "zero ideal: positive-dimensional singular locus or wrong chart");
    const std::size_t n = I.ring()->nvars();
    std::vector<Monomial> leads;
    for (const auto& b : basis) leads.push_back(b.leading_term(MonomialOrder::grevlex()).mono);
    // A finite staircase needs a pure power of every variable among the leads.
    std::vector<unsigned> box(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        unsigned best = 0;
        for (const auto& l : leads) {
            if (l[v] == 0) continue;
            bool pure = true;
            for (std::size_t w = 0; w < n && pure; ++w)
                if (w != v && l[w] > 0) pure = false;
            if (pure && (best == 0 || l[v] < best)) best = l[v];
        }
        if (best == 0)
            throw PreconditionError(
                "quotient is not finite-dimensional: positive-dimensional singular locus "
                "or wrong chart");
        box[v] = best;
    }
    // Enumerate the bounded staircase.
    unsigned long count = 0;
    std::vector<unsigned> e(n, 0);
    while (true) {
        bool in_ideal = false;
        for (const auto& l : leads) {
            bool div = true;
            for (std::size_t v = 0; v < n && div; ++v)
                if (l[v] > e[v]) div = false;
            if (div) { in_ideal = true; break; }
        }
        if (!in_ideal) ++count;
        std::size_t v = 0;
        while (v < n) {
            if (++e[v] < box[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return count;
}

} // namespace jacsyz
