#include "ktriv/commands.hpp"

#include "ktriv/cremona.hpp"
#include "ktriv/orbit_cache.hpp"
#include "ktriv/weyl.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ktriv;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const BlowupLattice p3_8{Ambient::P3, 8};

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

fs::path temp_file(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "ktriv-tests";
    fs::create_directories(dir);
    return dir / name;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class Cmd>
Run run(Cmd cmd, const RunConfig& cfg)
{
    std::ostringstream out, err;
    const int code = cmd(cfg, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("family command emits the K-trivial rows")
{
    RunConfig cfg;
    cfg.n_max = 1;
    const auto r = run(cmd_family, cfg);
    CHECK(r.code == exit_ok);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["degree"] == "1");
    CHECK(rows[0]["anticanonical_degree"] == "0");
    CHECK(rows[0]["qstar"] == "-3");
    CHECK(rows[0]["coeffs"] == json({"1", "0", "0", "0", "0", "0", "0", "-1", "-1"}));
    CHECK(rows[1]["degree"] == "3");
    CHECK(rows[1]["anticanonical_degree"] == "0");

    cfg.n_max = 0;
    const auto r0 = run(cmd_family, cfg);
    CHECK(json::parse(r0.out).size() == 1);

    cfg.n_max = -3;
    CHECK(run(cmd_family, cfg).code == exit_resource);
}

TEST_CASE("family CSV carries the same data as JSON")
{
    RunConfig cfg;
    cfg.n_max = 12;
    const auto j = run(cmd_family, cfg);
    cfg.format = "csv";
    const auto c = run(cmd_family, cfg);
    CHECK(j.code == exit_ok);
    CHECK(c.code == exit_ok);

    const json rows = json::parse(j.out);
    std::istringstream lines(c.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "n,degree,anticanonical_degree,qstar,coeffs");
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cn, cdeg, ckdeg, cq, ccoeffs;
        std::getline(cells, cn, ',');
        std::getline(cells, cdeg, ',');
        std::getline(cells, ckdeg, ',');
        std::getline(cells, cq, ',');
        std::getline(cells, ccoeffs);
        REQUIRE(n < rows.size());
        CHECK(std::stoul(cn) == n);
        CHECK(cdeg == rows[n]["degree"]);
        CHECK(ckdeg == rows[n]["anticanonical_degree"]);
        CHECK(cq == rows[n]["qstar"]);
        std::string joined;
        for (const auto& cell : rows[n]["coeffs"]) {
            if (!joined.empty())
                joined += " ";
            joined += cell.get<std::string>();
        }
        CHECK(ccoeffs == joined);
        ++n;
    }
    CHECK(n == rows.size());
}

TEST_CASE("verify command reports a clean suite")
{
    RunConfig cfg;
    const auto r = run(cmd_verify, cfg);
    CHECK(r.code == exit_ok);
    const json rows = json::parse(r.out);
    CHECK(rows.size() > 20);
    for (const auto& row : rows)
        CHECK(row["pass"] == true);
}

TEST_CASE("orbit command writes a stable cache")
{
    RunConfig cfg;
    cfg.degree_bound = 3;
    cfg.cache_path = temp_file("orbit3.ndjson").string();
    fs::remove(cfg.cache_path);

    const auto first = run(cmd_orbit, cfg);
    CHECK(first.code == exit_ok);
    const std::string bytes1 = slurp(cfg.cache_path);

    // second run reuses the cache and leaves the bytes alone
    const auto second = run(cmd_orbit, cfg);
    CHECK(second.code == exit_ok);
    CHECK(second.out == first.out);
    CHECK(slurp(cfg.cache_path) == bytes1);

    // a fresh run at another thread count produces identical bytes
    RunConfig cfg4 = cfg;
    cfg4.threads = 4;
    cfg4.cache_path = temp_file("orbit3-t4.ndjson").string();
    fs::remove(cfg4.cache_path);
    const auto third = run(cmd_orbit, cfg4);
    CHECK(third.code == exit_ok);
    CHECK(slurp(cfg4.cache_path) == bytes1);

    const json counts = json::parse(first.out);
    CHECK(counts["by_degree"]["1"] == 28);
    CHECK(counts["by_degree"]["3"] == 28);
    CHECK(counts["total"] == 56);

    // the cache re-loads and re-verifies
    const auto cache = load_orbit_cache(cfg.cache_path);
    REQUIRE(cache.has_value());
    CHECK(cache->classes.size() == 56);
    CHECK(cache->header.bound == 3);

    // a parameter change recomputes rather than reusing
    RunConfig changed = cfg;
    changed.degree_bound = 1;
    changed.cache_path = temp_file("orbit1.ndjson").string();
    fs::remove(changed.cache_path);
    const auto r1 = run(cmd_orbit, changed);
    CHECK(r1.code == exit_ok);
    CHECK(json::parse(r1.out)["total"] == 28);
}

TEST_CASE("tampered caches are rejected on load")
{
    RunConfig cfg;
    cfg.degree_bound = 1;
    cfg.cache_path = temp_file("orbit-tamper.ndjson").string();
    fs::remove(cfg.cache_path);
    REQUIRE(run(cmd_orbit, cfg).code == exit_ok);

    std::string bytes = slurp(cfg.cache_path);
    const auto pos = bytes.find("\"-1\"");
    REQUIRE(pos != std::string::npos);
    bytes.replace(pos, 4, "\"-2\"");
    {
        std::ofstream f(cfg.cache_path, std::ios::binary | std::ios::trunc);
        f << bytes;
    }
    CHECK_THROWS_AS(load_orbit_cache(cfg.cache_path), std::runtime_error);
    CHECK(!load_orbit_cache("/nonexistent/path/orbit.ndjson").has_value());
}

TEST_CASE("orbit counts agree between CSV and JSON")
{
    RunConfig cfg;
    cfg.degree_bound = 3;
    const auto j = run(cmd_orbit, cfg);
    cfg.format = "csv";
    const auto c = run(cmd_orbit, cfg);
    const json counts = json::parse(j.out)["by_degree"];
    std::istringstream lines(c.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "degree,count");
    std::size_t rows = 0, total = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        const std::string key = line.substr(0, comma);
        const std::size_t count = std::stoul(line.substr(comma + 1));
        if (key == "total") {
            total = count;
            continue;
        }
        CHECK(counts[key] == count);
        ++rows;
    }
    CHECK(rows == counts.size());
    CHECK(total == json::parse(j.out)["total"]);
}

TEST_CASE("orbit command usage errors exit with the resource code")
{
    RunConfig cfg;
    cfg.degree_bound = 0;
    CHECK(run(cmd_orbit, cfg).code == exit_resource);

    RunConfig capped;
    capped.degree_bound = 3;
    capped.size_cap = 5;
    const auto r = run(cmd_orbit, capped);
    CHECK(r.code == exit_resource);
    CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("spectral command")
{
    RunConfig cfg;
    const auto r = run(cmd_spectral, cfg);
    CHECK(r.code == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["jordan_at_one"] == json::array({3}));
    CHECK(j["coxeter_charpoly_match"] == true);
    CHECK(j["all_roots_on_unit_circle"] == true);
    CHECK(j["char_poly"]["coeffs_ascending"] ==
          json({"-1", "0", "1", "1", "1", "-1", "-1", "-1", "0", "1"}));
    CHECK(j["family_growth"]["unbounded"] == true);
    CHECK(j["family_growth"]["quadratic_refinement"] == false);
    const std::string c0 = j["char_poly"]["coeffs_ascending"][0].get<std::string>();
    CHECK((c0 == "1" || c0 == "-1"));
}

TEST_CASE("surface command")
{
    RunConfig cfg;
    cfg.coeff_bound = 1;
    const auto r = run(cmd_surface, cfg);
    CHECK(r.code == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["count"] == 310);
    CHECK(j["kperp_gram_rank"] == 8);
    CHECK(j["kperp_negative_semidefinite"] == true);
    CHECK(j["kperp_kernel_is_canonical"] == true);
    bool found_ruling = false;
    for (const auto& row : j["classes"]) {
        CHECK(row["pushforward_anticanonical_degree"] == "0");
        if (row["coeffs"] == json({"0", "1", "-1", "-1", "0", "0", "0", "0", "0", "0"})) {
            found_ruling = true;
            CHECK(row["pushforward"] ==
                  json({"1", "-1", "-1", "0", "0", "0", "0", "0", "0"}));
        }
        // K_S itself never shows up
        CHECK(row["coeffs"] != json({"-2", "-2", "1", "1", "1", "1", "1", "1", "1", "1"}));
    }
    CHECK(found_ruling);
}

TEST_CASE("roots command")
{
    RunConfig cfg;
    const auto r = run(cmd_roots, cfg);
    CHECK(r.code == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["arm_lengths"] == json::array({2, 4, 4}));
    CHECK(j["simple_roots"].size() == 8);
    for (const auto& row : j["simple_roots"]) {
        CHECK(row["norm"] == "-2");
        CHECK(row["k_pairing"] == "0");
    }
    CHECK(j["edges"].size() == 7);
}

TEST_CASE("identical configurations give byte-identical reports")
{
    for (auto cmd : {cmd_family, cmd_orbit, cmd_spectral, cmd_surface, cmd_roots}) {
        RunConfig cfg;
        cfg.n_max = 40;
        cfg.degree_bound = 3;
        cfg.coeff_bound = 1;
        const auto a = run(cmd, cfg);
        const auto b = run(cmd, cfg);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("the intertwining fault hook pinpoints a corrupted entry")
{
    const auto step = coxeter_step(p3_8);
    IntMatrix corrupted = step.curve_action;
    corrupted.at(3, 4) += 1;
    const auto defect = intertwining_defect(step.div_action, corrupted, p3_8);
    REQUIRE(defect.has_value());
    // the broken column is the bumped one; the row is the first divisor
    // basis vector pairing into row 3 of the curve action
    CHECK(defect->second == 4);
    CHECK(defect->first == 0);
    CHECK(!intertwining_defect(step.div_action, step.curve_action, p3_8).has_value());
}
