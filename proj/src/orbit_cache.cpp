#include "ktriv/orbit_cache.hpp"

#include "ktriv/weyl.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ktriv {

using nlohmann::json;

std::string render_orbit_cache(const OrbitCacheHeader& header, const std::vector<CurveClass>& classes)
{
    std::ostringstream os;
    json h;
    h["ambient"] = header.ambient;
    h["r"] = header.r;
    h["start"] = header.start;
    h["bound"] = header.bound;
    h["slack"] = header.slack;
    h["version"] = header.version;
    os << h.dump() << "\n";
    for (const CurveClass& c : classes)
        os << json(to_decimal(c.coeffs)).dump() << "\n";
    return os.str();
}

void write_orbit_cache(const std::string& path, const OrbitCacheHeader& header,
                       const std::vector<CurveClass>& classes)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open cache file for writing: " + path);
    f << render_orbit_cache(header, classes);
    if (!f.flush())
        throw std::runtime_error("write failed: " + path);
}

std::optional<OrbitCache> load_orbit_cache(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        return std::nullopt;
    std::string line;
    if (!std::getline(f, line))
        throw std::runtime_error("cache file is empty: " + path);

    OrbitCache cache;
    try {
        const json h = json::parse(line);
        cache.header.ambient = h.at("ambient").get<std::string>();
        cache.header.r = h.at("r").get<int>();
        cache.header.start = h.at("start").get<std::vector<std::string>>();
        cache.header.bound = h.at("bound").get<long>();
        cache.header.slack = h.at("slack").get<long>();
        cache.header.version = h.at("version").get<int>();
    } catch (const json::exception& e) {
        throw std::runtime_error("bad cache header in " + path + ": " + e.what());
    }
    if (cache.header.ambient != "P3")
        throw std::runtime_error("unsupported cache ambient: " + cache.header.ambient);

    const BlowupLattice lat{Ambient::P3, cache.header.r};
    std::vector<Int> start_coeffs;
    for (const auto& s : cache.header.start)
        start_coeffs.push_back(int_from_decimal(s));
    const CurveClass start(lat, start_coeffs);
    const Int want_qstar = qstar(start);

    std::size_t lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        try {
            cells = json::parse(line).get<std::vector<std::string>>();
        } catch (const json::exception& e) {
            throw std::runtime_error("bad cache line " + std::to_string(lineno) + ": " + e.what());
        }
        std::vector<Int> coeffs;
        coeffs.reserve(cells.size());
        for (const auto& s : cells)
            coeffs.push_back(int_from_decimal(s));
        CurveClass c(lat, std::move(coeffs));
        if (anticanonical_degree(c) != 0)
            throw std::runtime_error("cache line " + std::to_string(lineno) + " is not K-trivial");
        if (qstar(c) != want_qstar)
            throw std::runtime_error("cache line " + std::to_string(lineno) + " has the wrong orbit invariant");
        if (!cache.classes.empty() && !lex_less(cache.classes.back().coeffs, c.coeffs))
            throw std::runtime_error("cache is not sorted at line " + std::to_string(lineno));
        cache.classes.push_back(std::move(c));
    }
    return cache;
}

} // namespace ktriv
