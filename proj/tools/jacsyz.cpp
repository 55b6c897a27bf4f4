// Command-line front end: analyze a single hypersurface or run a corpus of
// .poly fixtures against their .expect sidecars.

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <jacsyz/parser.hpp>
#include <jacsyz/report.hpp>

namespace fs = std::filesystem;
using namespace jacsyz;

namespace {

struct AnalyzeConfig {
    std::string input;
    std::string field_decl;
    std::string points_file;
    std::string json_out;
    std::string cache_dir;
    std::string order = "grevlex";
    unsigned seed = 0;
    std::size_t budget_pairs = 4'000'000;
    std::size_t budget_degree = 200;
    bool planar = true;
};

struct RunResult {
    Polynomial f;
    AnalysisReport rep;
    PlanarReport planar;
};

RunResult run_analysis(const AnalyzeConfig& cfg) {
    PolyFile in = read_poly_file(cfg.input);
    FieldPtr field = cfg.field_decl.empty() ? in.ring->field : parse_field(cfg.field_decl);
    GBOptions opts;
    opts.pair_budget = cfg.budget_pairs;
    opts.degree_budget = cfg.budget_degree;
    opts.cache_dir = cfg.cache_dir;
    std::vector<ProjectivePoint> extra;
    if (!cfg.points_file.empty())
        for (auto& coords : read_points_file(cfg.points_file, field, in.ring->nvars()))
            extra.push_back(ProjectivePoint::make(field, std::move(coords)));
    RunResult out{in.f, analyze_hypersurface(in.f, field, cfg.seed, opts, std::move(extra)),
                  {}};
    if (cfg.planar) out.planar = planar_report(in.f, out.rep, opts);
    return out;
}

void print_summary(std::ostream& os, const RunResult& r) {
    const auto& rep = r.rep;
    os << "degree " << rep.d << " hypersurface in P^" << rep.n << " over "
       << reportdetail::field_description(rep.field) << "\n";
    os << "m = " << rep.syz.res.m << ", exponents = (";
    for (std::size_t i = 0; i < rep.syz.res.exponents.size(); ++i)
        os << (i ? "," : "") << rep.syz.res.exponents[i];
    os << ")\n";
    if (rep.smooth) {
        os << "smooth: no singular points\n";
        return;
    }
    os << "deg J_f = " << rep.jacobian_degree << ", tau = " << rep.tau_total
       << ", mu = " << rep.mu_total << "\n";
    for (const auto& rec : rep.points)
        os << "  " << rec.point.str() << "  tau_p=" << rec.tau_p << " mu_p=" << rec.mu_p
           << "  " << (rec.verdict.quasi_homogeneous ? "quasi-homogeneous"
                                                     : "non-quasi-homogeneous")
           << "\n";
    if (rep.residual_locus_degree)
        os << "  residual locus of degree " << rep.residual_locus_degree
           << " (points outside the declared field)\n";
    os << "all singularities quasi-homogeneous: " << (rep.all_qh ? "yes" : "no") << "\n";
    if (r.planar.present) {
        os << "class of Z_f: " << r.planar.cls.zf.alpha << " h1^2 + " << r.planar.cls.zf.beta
           << " h1 h2 + " << r.planar.cls.zf.gamma << " h2^2, vertical defect "
           << r.planar.cls.defect << "\n";
    }
}

// .expect sidecar: '#' comments and key=value lines.
std::map<std::string, std::string> read_expect(const fs::path& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

struct CorpusRow {
    std::string name;
    bool failed = false;
    std::string detail; // mismatch or error text
    long d = 0;
    std::size_t m = 0;
    std::string exponents;
    unsigned long tau = 0, mu = 0;
    std::size_t n_qh = 0, n_nonqh = 0;
    double seconds = 0.0;
};

CorpusRow run_corpus_file(const fs::path& poly, std::size_t budget_pairs,
                          std::size_t budget_degree, const std::string& cache_dir) {
    CorpusRow row;
    row.name = poly.filename().string();
    const auto start = std::chrono::steady_clock::now();
    try {
        auto expect = read_expect(fs::path(poly).replace_extension(".expect"));
        AnalyzeConfig cfg;
        cfg.input = poly.string();
        cfg.budget_pairs = budget_pairs;
        cfg.budget_degree = budget_degree;
        cfg.cache_dir = cache_dir;
        if (auto it = expect.find("field"); it != expect.end()) cfg.field_decl = it->second;
        RunResult r = run_analysis(cfg);
        row.d = r.rep.d;
        row.m = r.rep.syz.res.m;
        row.tau = r.rep.tau_total;
        row.mu = r.rep.mu_total;
        std::ostringstream ex;
        for (std::size_t i = 0; i < r.rep.syz.res.exponents.size(); ++i)
            ex << (i ? "," : "") << r.rep.syz.res.exponents[i];
        row.exponents = ex.str();
        for (const auto& rec : r.rep.points)
            (rec.verdict.quasi_homogeneous ? row.n_qh : row.n_nonqh) += 1;

        auto check = [&](const std::string& key, const std::string& got) {
            auto it = expect.find(key);
            if (it != expect.end() && it->second != got) {
                row.failed = true;
                if (!row.detail.empty()) row.detail += "; ";
                row.detail += key + ": expected " + it->second + ", got " + got;
            }
        };
        check("d", std::to_string(row.d));
        check("m", std::to_string(row.m));
        check("exponents", row.exponents);
        check("tau", std::to_string(row.tau));
        check("mu", std::to_string(row.mu));
        check("qh_points", std::to_string(row.n_qh));
        check("nonqh_points", std::to_string(row.n_nonqh));
        check("all_qh", r.rep.all_qh ? "true" : "false");
        check("residual", std::to_string(r.rep.residual_locus_degree));
        check("smooth", r.rep.smooth ? "true" : "false");
    } catch (const std::exception& e) {
        row.failed = true;
        row.detail = e.what();
    }
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian-syzygy analysis of projective hypersurface singularities"};
    app.require_subcommand(1);

    AnalyzeConfig cfg;
    bool no_planar = false;
    auto* analyze = app.add_subcommand("analyze", "analyze one hypersurface");
    analyze->add_option("input", cfg.input, ".poly input file")->required();
    analyze->add_option("--field", cfg.field_decl,
                        "working field, e.g. 'Q' or 'Q(i) minpoly t^2+1'");
    analyze->add_option("--points", cfg.points_file, "extra points file (one per line)");
    analyze->add_option("--seed", cfg.seed, "seed for chart and witness randomness");
    analyze->add_option("--order", cfg.order, "monomial order (grevlex)")
        ->check(CLI::IsMember({"grevlex"}));
    analyze->add_option("--budget-pairs", cfg.budget_pairs, "S-pair budget");
    analyze->add_option("--budget-degree", cfg.budget_degree, "Hilbert degree budget");
    analyze->add_option("--json", cfg.json_out, "write the JSON report here");
    analyze->add_option("--cache-dir", cfg.cache_dir, "Groebner basis cache directory");
    analyze->add_flag("--planar,!--no-planar", cfg.planar,
                      "compute the plane-curve payload (default for n = 2)");
    (void)no_planar;

    std::string corpus_dir, corpus_cache;
    std::size_t corpus_pairs = 4'000'000, corpus_degree = 200;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* corpus = app.add_subcommand("corpus", "run a directory of .poly fixtures");
    corpus->add_option("directory", corpus_dir, "directory of .poly files")->required();
    corpus->add_option("--jobs", jobs, "parallel workers");
    corpus->add_option("--budget-pairs", corpus_pairs, "S-pair budget");
    corpus->add_option("--budget-degree", corpus_degree, "Hilbert degree budget");
    corpus->add_option("--cache-dir", corpus_cache, "Groebner basis cache directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            RunResult r = run_analysis(cfg);
            print_summary(std::cout, r);
            if (!cfg.json_out.empty()) {
                GBOptions opts;
                opts.pair_budget = cfg.budget_pairs;
                opts.degree_budget = cfg.budget_degree;
                std::ofstream out(cfg.json_out);
                if (!out) throw PreconditionError("cannot write " + cfg.json_out);
                out << report_document(r.f, r.rep, r.planar, opts).dump(2) << "\n";
            }
            return 0;
        }

        // corpus mode
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(corpus_dir))
            if (entry.path().extension() == ".poly") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        std::vector<CorpusRow> rows(files.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < files.size(); i = next++)
                rows[i] = run_corpus_file(files[i], corpus_pairs, corpus_degree, corpus_cache);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t + 1 < jobs && t + 1 < files.size(); ++t)
            pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        std::cout << std::left << std::setw(24) << "curve" << std::setw(4) << "d"
                  << std::setw(4) << "m" << std::setw(14) << "exponents" << std::setw(6)
                  << "tau" << std::setw(6) << "mu" << std::setw(5) << "qh" << std::setw(7)
                  << "nonqh" << std::setw(9) << "time(s)" << "status" << "\n";
        bool any_failed = false;
        for (const auto& row : rows) {
            std::cout << std::left << std::setw(24) << row.name << std::setw(4) << row.d
                      << std::setw(4) << row.m << std::setw(14) << row.exponents
                      << std::setw(6) << row.tau << std::setw(6) << row.mu << std::setw(5)
                      << row.n_qh << std::setw(7) << row.n_nonqh << std::setw(9)
                      << std::fixed << std::setprecision(2) << row.seconds
                      << (row.failed ? "FAILED" : "ok") << "\n";
            if (row.failed) {
                any_failed = true;
                std::cerr << row.name << ": " << row.detail << "\n";
            }
        }
        return any_failed ? 3 : 0;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant violation (bug): " << e.what() << "\n";
        return 1;
    }
}
