#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "jacsyz/polynomial.hpp"

namespace jacsyz {

struct GBOptions {
    std::size_t pair_budget = 4'000'000;   // S-pair treatments before giving up
    std::size_t degree_budget = 200;       // Hilbert profile hard cap
    std::string cache_dir;                 // empty: no on-disk cache
};

// Order on free-module terms (component, monomial). `top_block` components
// dominate the rest, which realizes syzygy-by-elimination; ties use the
// scalar order, then position (lower component wins).
struct ModuleOrder {
    MonomialOrder scalar;
    std::size_t top_block = 0; // 0 = plain term-over-position

    int cmp(std::size_t ca, const Monomial& ma, std::size_t cb, const Monomial& mb) const {
        if (top_block > 0) {
            bool a_top = ca < top_block, b_top = cb < top_block;
            if (a_top != b_top) return a_top ? 1 : -1;
        }
        int c = scalar.cmp(ma, mb);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }
};

// Element of a free module R^rank, terms sorted descending under a fixed
// ModuleOrder supplied by the algorithms.
struct ModTerm {
    std::size_t comp;
    Monomial mono;
    FieldElement coeff;
};

class ModPoly {
public:
    ModPoly() = default;
    explicit ModPoly(std::size_t rank) : rank_(rank) {}

    static ModPoly from_terms(std::size_t rank, std::vector<ModTerm> terms,
                              const ModuleOrder& ord) {
        ModPoly p(rank);
        std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
            return ord.cmp(a.comp, a.mono, b.comp, b.mono) > 0;
        });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().comp == t.comp &&
                p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            } else if (!t.coeff.is_zero()) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    static ModPoly from_vector(const std::vector<Polynomial>& v, const ModuleOrder& ord) {
        std::vector<ModTerm> ts;
        for (std::size_t c = 0; c < v.size(); ++c)
            for (const auto& t : v[c].terms()) ts.push_back({c, t.mono, t.coeff});
        return from_terms(v.size(), std::move(ts), ord);
    }

    std::vector<Polynomial> to_vector(const RingPtr& ring) const {
        std::vector<std::vector<Polynomial::Term>> comps(rank_);
        for (const auto& t : terms_) comps[t.comp].push_back({t.mono, t.coeff});
        std::vector<Polynomial> out;
        for (auto& c : comps) {
            Polynomial p = Polynomial::zero(ring);
            for (auto& t : Polynomial::normalize(std::move(c)))
                p = p + Polynomial::monomial(ring, t.mono, t.coeff);
            out.push_back(std::move(p));
        }
        return out;
    }

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<ModTerm>& terms() const { return terms_; }
    const ModTerm& lead() const {
        if (terms_.empty()) throw InternalError("lead of zero module element");
        return terms_.front();
    }

    ModPoly scaled(const FieldElement& c) const {
        ModPoly r = *this;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }

    // this - c * x^m * g (orders are multiplicative, so g's term order survives).
    ModPoly minus_scaled_shift(const FieldElement& c, const Monomial& m, const ModPoly& g,
                               const ModuleOrder& ord) const {
        ModPoly r(rank_);
        r.terms_.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < g.terms_.size()) {
            Monomial gm = g.terms_[j].mono * m;
            int cc = ord.cmp(terms_[i].comp, terms_[i].mono, g.terms_[j].comp, gm);
            if (cc > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cc < 0) {
                r.terms_.push_back({g.terms_[j].comp, std::move(gm), -(c * g.terms_[j].coeff)});
                ++j;
            } else {
                FieldElement s = terms_[i].coeff - c * g.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({terms_[i].comp, terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < g.terms_.size(); ++j)
            r.terms_.push_back({g.terms_[j].comp, g.terms_[j].mono * m, -(c * g.terms_[j].coeff)});
        return r;
    }

    ModPoly monic() const {
        if (terms_.empty()) return *this;
        return scaled(terms_.front().coeff.inverse());
    }

    // Removes the leading term (used when building normal forms).
    void drop_lead() { terms_.erase(terms_.begin()); }

    unsigned max_term_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

private:
    std::size_t rank_ = 0;
    std::vector<ModTerm> terms_;
};

namespace gbimpl {

// Full normal form of p against basis (heads and tails).
inline ModPoly normal_form(ModPoly p, const std::vector<ModPoly>& basis,
                           const ModuleOrder& ord, std::size_t* steps = nullptr) {
    const std::size_t rank = p.rank();
    std::vector<ModTerm> out;
    while (!p.is_zero()) {
        const ModTerm lt = p.lead();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const ModTerm& gl = g.lead();
            if (gl.comp != lt.comp || !gl.mono.divides(lt.mono)) continue;
            Monomial q = gl.mono.quotient_of(lt.mono);
            p = p.minus_scaled_shift(lt.coeff / gl.coeff, q, g, ord);
            if (steps) ++*steps;
            reduced = true;
            break;
        }
        if (!reduced) {
            out.push_back(lt);
            p.drop_lead();
        }
    }
    // `out` was emitted in descending order already.
    return ModPoly::from_terms(rank, std::move(out), ord);
}

} // namespace gbimpl

// Module Buchberger with sugar strategy and Gebauer-Moeller pair elimination.
class ModuleGB {
public:
    ModuleGB(std::size_t rank, ModuleOrder ord, GBOptions opts = {})
        : rank_(rank), ord_(std::move(ord)), opts_(opts) {}

    const ModuleOrder& order() const { return ord_; }
    const std::vector<ModPoly>& basis() const { return basis_; }
    std::size_t rank() const { return rank_; }

    void add_generators(const std::vector<ModPoly>& gens) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            pending_.push_back(g);
        }
    }

    // Runs Buchberger to completion (intermediate basis, not yet reduced).
    void compute() {
        for (auto& g : pending_) {
            ModPoly r = reduce_full(std::move(g));
            if (!r.is_zero()) insert(r.monic());
        }
        pending_.clear();
        while (!pairs_.empty()) {
            if (++processed_ > opts_.pair_budget)
                throw BudgetExceeded("Groebner pair budget exceeded (" +
                                     std::to_string(opts_.pair_budget) + " pairs)");
            auto it = std::min_element(pairs_.begin(), pairs_.end(), pair_less());
            Pair pr = *it;
            pairs_.erase(it);
            ModPoly s = spoly(basis_[pr.i], basis_[pr.j]);
            ModPoly r = reduce_full(std::move(s));
#ifdef JACSYZ_GB_TRACE
            std::fprintf(stderr, "pair (%zu,%zu) -> %s\n", pr.i, pr.j,
                         r.is_zero() ? "zero" : "new element");
#endif
            if (!r.is_zero()) insert(r.monic());
        }
        done_ = true;
    }

    // Minimal, tail-reduced, monic basis in a deterministic order.
    std::vector<ModPoly> reduced_basis() {
        if (!done_) compute();
        std::vector<ModPoly> kept;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j) continue;
                const ModTerm &a = basis_[i].lead(), &b = basis_[j].lead();
                if (b.comp == a.comp && b.mono.divides(a.mono) &&
                    (b.mono != a.mono || j < i))
                    redundant = true;
            }
            if (!redundant) kept.push_back(basis_[i]);
        }
        std::vector<ModPoly> reduced;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<ModPoly> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            reduced.push_back(gbimpl::normal_form(kept[i], others, ord_).monic());
        }
        std::sort(reduced.begin(), reduced.end(), [&](const ModPoly& a, const ModPoly& b) {
            return ord_.cmp(a.lead().comp, a.lead().mono, b.lead().comp, b.lead().mono) > 0;
        });
        return reduced;
    }

    ModPoly normal_form(const ModPoly& p) const {
        return gbimpl::normal_form(p, basis_, ord_);
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        unsigned sugar;
    };
    struct pair_less {
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            unsigned da = a.lcm.degree(), db = b.lcm.degree();
            if (da != db) return da < db;
            int c = grevlex_cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        }
    };

    ModPoly spoly(const ModPoly& f, const ModPoly& g) const {
        const ModTerm &lf = f.lead(), &lg = g.lead();
        Monomial l = Monomial::lcm(lf.mono, lg.mono);
        ModPoly a = ModPoly(rank_).minus_scaled_shift(-FieldElement(1),
                                                      lf.mono.quotient_of(l), f, ord_);
        return a.minus_scaled_shift(FieldElement(1), lg.mono.quotient_of(l), g, ord_);
    }

    ModPoly reduce_full(ModPoly p) {
        std::size_t steps = 0;
        ModPoly r = gbimpl::normal_form(std::move(p), basis_, ord_, &steps);
        return r;
    }

    void insert(ModPoly h) {
        const std::size_t t = basis_.size();
        unsigned sugar_h = h.max_term_degree();
        const ModTerm& lh = h.lead();

        // Gebauer-Moeller: drop old pairs strictly superseded by the new element.
        std::vector<Pair> survivors;
        for (auto& pr : pairs_) {
            const ModTerm &li = basis_[pr.i].lead(), &lj = basis_[pr.j].lead();
            bool superseded = lh.comp == li.comp && lh.mono.divides(pr.lcm) &&
                              Monomial::lcm(lh.mono, li.mono) != pr.lcm &&
                              Monomial::lcm(lh.mono, lj.mono) != pr.lcm;
            if (!superseded) survivors.push_back(std::move(pr));
        }
        pairs_ = std::move(survivors);

        // Candidate new pairs against every basis element with the same lead component.
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            const ModTerm& li = basis_[i].lead();
            if (li.comp != lh.comp) continue;
            // product criterion is only valid in the rank-1 (ideal) case
            if (rank_ == 1 && Monomial::coprime(li.mono, lh.mono)) continue;
            Monomial l = Monomial::lcm(li.mono, lh.mono);
            unsigned sugar = std::max(sugars_[i] + (l.degree() - li.mono.degree()),
                                      sugar_h + (l.degree() - lh.mono.degree()));
            fresh.push_back({i, t, std::move(l), sugar});
        }
        // Among the fresh pairs keep only minimal lcms, one per lcm class.
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) &&
                    (fresh[b].lcm != fresh[a].lcm || b < a)) {
                    keep[a] = false;
                    break;
                }
            }
        std::vector<Pair> minimal;
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (keep[a]) minimal.push_back(std::move(fresh[a]));
        for (auto& pr : minimal) pairs_.push_back(std::move(pr));
        basis_.push_back(std::move(h));
        sugars_.push_back(sugar_h);
    }

    std::size_t rank_;
    ModuleOrder ord_;
    GBOptions opts_;
    std::vector<ModPoly> pending_;
    std::vector<ModPoly> basis_;
    std::vector<unsigned> sugars_;
    std::vector<Pair> pairs_;
    std::size_t processed_ = 0;
    bool done_ = false;
};

} // namespace jacsyz
