#ifndef KTRIV_ORBIT_CACHE_HPP
#define KTRIV_ORBIT_CACHE_HPP

#include "ktriv/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ktriv {

// Newline-delimited JSON orbit dump. First line is a header object
// {ambient, r, start, bound, slack, version}; each following line is one
// class as an array of decimal-string coefficients, lexicographically
// sorted. Integers travel as strings so no consumer loses precision.
struct OrbitCacheHeader {
    std::string ambient;
    int r = 0;
    std::vector<std::string> start;
    long bound = 0;
    long slack = 0;
    int version = 1;

    friend bool operator==(const OrbitCacheHeader&, const OrbitCacheHeader&) = default;
};

struct OrbitCache {
    OrbitCacheHeader header;
    std::vector<CurveClass> classes;
};

std::string render_orbit_cache(const OrbitCacheHeader& header, const std::vector<CurveClass>& classes);

void write_orbit_cache(const std::string& path, const OrbitCacheHeader& header,
                       const std::vector<CurveClass>& classes);

// Parses and re-verifies a dump: header shape, sorted order, and the orbit
// invariants (anticanonical degree 0, constant q*) of every class. Throws
// std::runtime_error on any violation; nullopt only if the file is absent.
std::optional<OrbitCache> load_orbit_cache(const std::string& path);

} // namespace ktriv

#endif
