#pragma once

#include <json.hpp>

#include "planar.hpp"
#include "singular.hpp"

namespace jacsyz {

using Json = nlohmann::ordered_json;

constexpr const char* kReportSchema = "jacsyz-report/1";

namespace reportdetail {

inline std::string field_description(const FieldPtr& f) {
    if (f->is_rational()) return "Q";
    std::string s = "Q(" + f->generator_name + ") minpoly ";
    bool first = true;
    for (std::size_t i = f->minpoly.size(); i-- > 0;) {
        if (f->minpoly[i] == 0) continue;
        if (!first) s += " + ";
        if (i == 0) {
            s += to_string(f->minpoly[i]);
        } else {
            if (f->minpoly[i] != 1) s += to_string(f->minpoly[i]) + "*";
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
        first = false;
    }
    return s;
}

inline Json point_json(const ProjectivePoint& p) {
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(c.str());
    return coords;
}

inline Json class_json(const BidegreeClass& c) {
    return Json{{"h1^2", c.alpha}, {"h1*h2", c.beta}, {"h2^2", c.gamma}};
}

} // namespace reportdetail

// Planar payload: computed only for plane curves (n = 2).
struct PlanarReport {
    bool present = false;
    PlanarClasses cls;
    bool class_identities = false;
    std::size_t hb_columns = 0;
    Rational hb_proportionality;
};

inline PlanarReport planar_report(const Polynomial& f, const AnalysisReport& rep,
                                  const GBOptions& opts = {}) {
    PlanarReport out;
    if (rep.n != 2) return out;
    out.present = true;
    out.cls = classes(rep.d, static_cast<long>(rep.mu_total),
                      static_cast<long>(rep.tau_total));
    out.class_identities =
        rep.syz.res.m < 3 || class_identities_hold(rep.d, static_cast<long>(rep.tau_total),
                                                   rep.syz.res);
    if (rep.has_koszul_lift && rep.syz.res.m >= 2) {
        HilbertBurch hb =
            hilbert_burch(rep.syz.Mf, rep.has_second_syzygies ? rep.Pf : GradedMatrix{},
                          rep.N, rep.d);
        out.hb_columns = hb.S.size();
        out.hb_proportionality = hb.proportionality;
    }
    return out;
}

// Serializes the full analysis deterministically (fixed key order, exact
// values) so reruns with the same seed are byte-identical.
inline Json report_document(const Polynomial& f, const AnalysisReport& rep,
                            const PlanarReport& planar, const GBOptions& opts) {
    Json doc;
    doc["schema"] = kReportSchema;
    doc["input"] = {
        {"polynomial", f.str()},
        {"variables", f.ring()->vars},
        {"field", reportdetail::field_description(rep.field)},
        {"seed", rep.seed},
        {"budget_pairs", opts.pair_budget},
        {"budget_degree", opts.degree_budget},
    };
    Json a;
    a["n"] = rep.n;
    a["d"] = rep.d;
    a["smooth"] = rep.smooth;
    a["m"] = rep.syz.res.m;
    a["exponents"] = rep.syz.res.exponents;
    if (!rep.syz.res.e.empty()) {
        a["e"] = rep.syz.res.e;
        a["epsilons"] = rep.syz.res.epsilons;
    }
    a["jacobian_degree"] = rep.jacobian_degree;
    a["tau_total"] = rep.tau_total;
    a["mu_total"] = rep.mu_total;
    a["all_quasi_homogeneous"] = rep.all_qh;
    a["residual_locus_degree"] = rep.residual_locus_degree;
    a["points_complete"] = rep.points_complete;
    Json pts = Json::array();
    for (const auto& rec : rep.points) {
        Json p;
        p["point"] = reportdetail::point_json(rec.point);
        p["tau"] = rec.tau_p;
        p["mu"] = rec.mu_p;
        p["rank_Mf"] = rec.verdict.rank_Mf;
        p["verdict"] = rec.verdict.quasi_homogeneous ? "quasi-homogeneous"
                                                     : "non-quasi-homogeneous";
        if (rec.verdict.quasi_homogeneous)
            p["witness_entry"] = {rec.verdict.witness_row, rec.verdict.witness_col};
        p["cross_check"] = rec.cross_check;
        pts.push_back(std::move(p));
    }
    a["singular_points"] = std::move(pts);
    Json chart = Json::array();
    for (const auto& row : rep.chart.matrix) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        chart.push_back(std::move(r));
    }
    a["chart"] = {{"matrix", std::move(chart)}, {"attempts", rep.chart.attempts}};
    doc["analysis"] = std::move(a);
    if (planar.present) {
        Json pl;
        pl["polar_degree"] = planar.cls.polar_degree;
        pl["class_Sf"] = reportdetail::class_json(planar.cls.sf);
        pl["class_Zf"] = reportdetail::class_json(planar.cls.zf);
        pl["vertical_defect"] = planar.cls.defect;
        pl["Zf_irreducible"] = planar.cls.zf_irreducible;
        pl["class_identities"] = planar.class_identities;
        if (planar.hb_columns) {
            pl["hilbert_burch_columns"] = planar.hb_columns;
            pl["hilbert_burch_proportionality"] = to_string(planar.hb_proportionality);
        }
        doc["planar"] = std::move(pl);
    }
    return doc;
}

} // namespace jacsyz
