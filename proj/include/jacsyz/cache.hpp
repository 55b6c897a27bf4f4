#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "jacsyz/monomial.hpp"
#include "jacsyz/polynomial.hpp"

namespace jacsyz {

// On-disk cache of reduced Groebner bases. Files are keyed by a content hash
// of (generators, order, field) and carry a versioned header; the directory
// is safe to delete at any time.
namespace gbcache {

constexpr char kMagic[4] = {'J', 'Z', 'G', 'B'};
constexpr std::uint32_t kVersion = 1;

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string content_key(const std::vector<Polynomial>& gens,
                               const std::string& order_key, const FieldPtr& field) {
    std::string blob = order_key + "|";
    for (const auto& q : field->minpoly) blob += to_string(q) + ",";
    blob += "|";
    std::vector<std::string> parts;
    for (const auto& g : gens) parts.push_back(g.str());
    std::sort(parts.begin(), parts.end());
    for (const auto& p : parts) blob += p + ";";
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(blob)));
    return hex;
}

namespace io {

inline void write_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
inline void write_str(std::ostream& os, const std::string& s) {
    write_u32(os, static_cast<std::uint32_t>(s.size()));
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}
inline std::uint32_t read_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
inline std::string read_str(std::istream& is) {
    std::uint32_t n = read_u32(is);
    std::string s(n, '\0');
    is.read(s.data(), n);
    return s;
}

} // namespace io

inline void store(const std::string& dir, const std::string& key,
                  const std::vector<Polynomial>& basis) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    std::ofstream os(fs::path(dir) / (key + ".gb"), std::ios::binary);
    if (!os) return; // cache is best-effort
    os.write(kMagic, 4);
    io::write_u32(os, kVersion);
    io::write_u32(os, static_cast<std::uint32_t>(basis.size()));
    for (const auto& p : basis) {
        io::write_u32(os, static_cast<std::uint32_t>(p.terms().size()));
        for (const auto& t : p.terms()) {
            io::write_u32(os, static_cast<std::uint32_t>(t.mono.nvars()));
            for (std::size_t v = 0; v < t.mono.nvars(); ++v) io::write_u32(os, t.mono[v]);
            const auto& coords = t.coeff.coords();
            io::write_u32(os, static_cast<std::uint32_t>(coords.size()));
            for (const auto& q : coords) io::write_str(os, to_string(q));
        }
    }
}

inline std::optional<std::vector<Polynomial>> load(const std::string& dir,
                                                   const std::string& key,
                                                   const RingPtr& ring) {
    namespace fs = std::filesystem;
    std::ifstream is(fs::path(dir) / (key + ".gb"), std::ios::binary);
    if (!is) return std::nullopt;
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != std::string(kMagic, 4)) return std::nullopt;
    if (io::read_u32(is) != kVersion) return std::nullopt;
    std::uint32_t count = io::read_u32(is);
    std::vector<Polynomial> out;
    for (std::uint32_t i = 0; i < count && is; ++i) {
        std::uint32_t nterms = io::read_u32(is);
        std::vector<Polynomial::Term> terms;
        for (std::uint32_t t = 0; t < nterms && is; ++t) {
            std::uint32_t nv = io::read_u32(is);
            if (nv != ring->nvars()) return std::nullopt;
            std::vector<unsigned> exps(nv);
            for (auto& e : exps) e = io::read_u32(is);
            std::uint32_t nc = io::read_u32(is);
            if (nc != ring->field->degree()) return std::nullopt;
            std::vector<Rational> coords;
            for (std::uint32_t c = 0; c < nc; ++c) coords.emplace_back(io::read_str(is));
            terms.push_back({Monomial(std::move(exps)),
                             FieldElement(ring->field, std::move(coords))});
        }
        Polynomial p = Polynomial::zero(ring);
        for (auto& t : Polynomial::normalize(std::move(terms)))
            p = p + Polynomial::monomial(ring, t.mono, t.coeff);
        out.push_back(std::move(p));
    }
    if (!is) return std::nullopt;
    return out;
}

} // namespace gbcache
} // namespace jacsyz
