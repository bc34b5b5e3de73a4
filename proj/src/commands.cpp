#include "ktriv/commands.hpp"

#include "ktriv/cremona.hpp"
#include "ktriv/lattice.hpp"
#include "ktriv/orbit_cache.hpp"
#include "ktriv/spectral.hpp"
#include "ktriv/surface.hpp"
#include "ktriv/verify.hpp"
#include "ktriv/weyl.hpp"

#include <json.hpp>

#include <map>
#include <ostream>

namespace ktriv {

using nlohmann::json;

namespace {

const BlowupLattice p3_8{Ambient::P3, 8};

bool is_json(const RunConfig& cfg) { return cfg.format != "csv"; }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string join_coeffs(const std::vector<Int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += " ";
        s += to_decimal(v[i]);
    }
    return s;
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out << ",";
        if (cells[i].find_first_of(",\"\n") != std::string::npos) {
            out << '"';
            for (char ch : cells[i]) {
                if (ch == '"')
                    out << '"';
                out << ch;
            }
            out << '"';
        } else {
            out << cells[i];
        }
    }
    out << "\n";
}

json growth_to_json(const GrowthReport& rep)
{
    json g;
    g["unbounded"] = rep.unbounded;
    g["increase_count"] = rep.increase_count;
    g["last_increase_index"] = rep.last_increase_index;
    g["third_diff_periodic"] = rep.third_diff_periodic;
    g["third_diff_period"] = rep.third_diff_period;
    g["third_diff_period_sum"] = to_decimal(rep.third_diff_period_sum);
    g["second_diff_period_sum"] = to_decimal(rep.second_diff_period_sum);
    g["quadratic_refinement"] = rep.quadratic;
    return g;
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_resource;
    }
}

} // namespace

int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto family = iterate_family(CurveClass::line_through(p3_8, 7, 8), cfg.n_max);
        bool all_trivial = true;
        long first_bad = -1;
        if (is_json(cfg)) {
            json rows = json::array();
            for (std::size_t n = 0; n < family.size(); ++n) {
                const auto& c = family[n];
                const Int kdeg = anticanonical_degree(c);
                json row;
                row["n"] = n;
                row["coeffs"] = to_decimal(c.coeffs);
                row["degree"] = to_decimal(degree(c));
                row["anticanonical_degree"] = to_decimal(kdeg);
                row["qstar"] = to_decimal(qstar(c));
                rows.push_back(std::move(row));
                if (kdeg != 0 && all_trivial) {
                    all_trivial = false;
                    first_bad = static_cast<long>(n);
                }
            }
            emit_json(out, rows);
        } else {
            emit_csv_row(out, {"n", "degree", "anticanonical_degree", "qstar", "coeffs"});
            for (std::size_t n = 0; n < family.size(); ++n) {
                const auto& c = family[n];
                const Int kdeg = anticanonical_degree(c);
                emit_csv_row(out, {std::to_string(n), to_decimal(degree(c)), to_decimal(kdeg),
                                   to_decimal(qstar(c)), join_coeffs(c.coeffs)});
                if (kdeg != 0 && all_trivial) {
                    all_trivial = false;
                    first_bad = static_cast<long>(n);
                }
            }
        }
        if (!all_trivial) {
            err << "anticanonical degree nonzero at n = " << first_bad << "\n";
            return exit_check_failed;
        }
        return exit_ok;
    });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto results = run_verification_suite();
        bool all = true;
        if (is_json(cfg)) {
            json rows = json::array();
            for (const auto& r : results) {
                json row;
                row["name"] = r.name;
                row["pass"] = r.pass;
                row["detail"] = r.detail;
                rows.push_back(std::move(row));
                all = all && r.pass;
            }
            emit_json(out, rows);
        } else {
            emit_csv_row(out, {"name", "pass", "detail"});
            for (const auto& r : results) {
                emit_csv_row(out, {r.name, r.pass ? "true" : "false", r.detail});
                all = all && r.pass;
            }
        }
        if (!all) {
            err << "verification failures reported above\n";
            return exit_check_failed;
        }
        return exit_ok;
    });
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (cfg.degree_bound < 1)
            throw std::invalid_argument("degree bound must be at least 1");
        const long slack = cfg.slack < 0 ? 2 * cfg.degree_bound : cfg.slack;
        const CurveClass start = CurveClass::line_through(p3_8, 7, 8);

        OrbitCacheHeader header;
        header.ambient = "P3";
        header.r = 8;
        header.start = to_decimal(start.coeffs);
        header.bound = cfg.degree_bound;
        header.slack = slack;

        std::vector<CurveClass> classes;
        bool have = false;
        if (!cfg.cache_path.empty()) {
            if (auto cached = load_orbit_cache(cfg.cache_path); cached && cached->header == header) {
                classes = std::move(cached->classes);
                have = true;
            }
        }
        if (!have) {
            OrbitOptions opts;
            opts.degree_bound = cfg.degree_bound;
            opts.slack = slack;
            opts.size_cap = cfg.size_cap;
            opts.threads = cfg.threads;
            classes = orbit_enumerate(start, opts);
            if (!cfg.cache_path.empty())
                write_orbit_cache(cfg.cache_path, header, classes);
        }

        std::map<std::string, std::size_t> by_degree;
        for (const auto& c : classes)
            ++by_degree[to_decimal(degree(c))];
        if (is_json(cfg)) {
            json j;
            j["start"] = header.start;
            j["bound"] = header.bound;
            j["slack"] = header.slack;
            j["by_degree"] = by_degree;
            j["total"] = classes.size();
            emit_json(out, j);
        } else {
            emit_csv_row(out, {"degree", "count"});
            for (const auto& [deg, count] : by_degree)
                emit_csv_row(out, {deg, std::to_string(count)});
            emit_csv_row(out, {"total", std::to_string(classes.size())});
        }
        return exit_ok;
    });
}

int cmd_spectral(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto step = coxeter_step(p3_8);
        const auto rs = build_root_system(p3_8);
        const auto cp = char_poly(step.curve_action);
        const auto fac = cyclotomic_factorization(cp);
        const auto partition = jordan_at_one(step.curve_action);
        const bool coxeter_match = coxeter_charpoly_check(step, rs);
        const auto kperp_cp = kperp_charpoly(step.div_action, rs);

        const auto family = iterate_family(CurveClass::line_through(p3_8, 7, 8), cfg.n_max);
        std::vector<Int> degs;
        for (const auto& c : family)
            degs.push_back(degree(c));
        const auto growth = growth_certificate(degs);

        if (is_json(cfg)) {
            json j;
            j["char_poly"]["coeffs_ascending"] = to_decimal(cp.coeffs());
            j["char_poly"]["pretty"] = cp.str();
            json factors = json::array();
            for (auto [m, mult] : fac.factors)
                factors.push_back({{"m", m}, {"multiplicity", mult}});
            j["cyclotomic_factors"] = factors;
            j["cyclotomic_remainder"] = fac.remainder.str();
            j["all_roots_on_unit_circle"] = fac.all_roots_on_unit_circle;
            j["jordan_at_one"] = partition;
            j["coxeter_charpoly_match"] = coxeter_match;
            j["kperp_char_poly"]["coeffs_ascending"] = to_decimal(kperp_cp.coeffs());
            j["kperp_char_poly"]["pretty"] = kperp_cp.str();
            j["family_growth"] = growth_to_json(growth);
            j["family_growth"]["n_max"] = cfg.n_max;
            emit_json(out, j);
        } else {
            emit_csv_row(out, {"key", "value"});
            emit_csv_row(out, {"char_poly", cp.str()});
            std::string fs;
            for (auto [m, mult] : fac.factors) {
                if (!fs.empty())
                    fs += " ";
                fs += "Phi_" + std::to_string(m) + "^" + std::to_string(mult);
            }
            emit_csv_row(out, {"cyclotomic_factors", fs});
            emit_csv_row(out, {"all_roots_on_unit_circle", fac.all_roots_on_unit_circle ? "true" : "false"});
            std::string ps;
            for (int p : partition) {
                if (!ps.empty())
                    ps += " ";
                ps += std::to_string(p);
            }
            emit_csv_row(out, {"jordan_at_one", ps});
            emit_csv_row(out, {"coxeter_charpoly_match", coxeter_match ? "true" : "false"});
            emit_csv_row(out, {"kperp_char_poly", kperp_cp.str()});
            emit_csv_row(out, {"family_growth_unbounded", growth.unbounded ? "true" : "false"});
            emit_csv_row(out, {"family_growth_quadratic_refinement", growth.quadratic ? "true" : "false"});
        }

        const bool ok = fac.all_roots_on_unit_circle && !partition.empty() && partition[0] == 3 &&
                        coxeter_match && growth.unbounded;
        if (!ok) {
            err << "spectral certificate failed\n";
            return exit_check_failed;
        }
        return exit_ok;
    });
}

int cmd_surface(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto classes = enumerate_minus2(cfg.coeff_bound, cfg.size_cap);
        const auto cert = kperp_semidefiniteness();
        bool ok = cert.negative_semidefinite && cert.kernel_is_canonical && cert.rank == 8;
        if (is_json(cfg)) {
            json rows = json::array();
            for (const auto& c : classes) {
                const auto push = pushforward(c);
                const Int kdeg = anticanonical_degree(push);
                ok = ok && kdeg == 0;
                json row;
                row["coeffs"] = to_decimal(c.coeffs);
                row["self_intersection"] = to_decimal(surface_pair(c, c));
                row["pushforward"] = to_decimal(push.coeffs);
                row["pushforward_anticanonical_degree"] = to_decimal(kdeg);
                rows.push_back(std::move(row));
            }
            json j;
            j["coeff_bound"] = cfg.coeff_bound;
            j["count"] = classes.size();
            j["kperp_gram_rank"] = cert.rank;
            j["kperp_gram_char_poly"] = cert.charpoly.str();
            j["kperp_negative_semidefinite"] = cert.negative_semidefinite;
            j["kperp_kernel_is_canonical"] = cert.kernel_is_canonical;
            j["classes"] = std::move(rows);
            emit_json(out, j);
        } else {
            emit_csv_row(out, {"coeffs", "self_intersection", "pushforward",
                               "pushforward_anticanonical_degree"});
            for (const auto& c : classes) {
                const auto push = pushforward(c);
                const Int kdeg = anticanonical_degree(push);
                ok = ok && kdeg == 0;
                emit_csv_row(out, {join_coeffs(c.coeffs), to_decimal(surface_pair(c, c)),
                                   join_coeffs(push.coeffs), to_decimal(kdeg)});
            }
        }
        if (!ok) {
            err << "surface lattice check failed\n";
            return exit_check_failed;
        }
        return exit_ok;
    });
}

int cmd_roots(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto rs = build_root_system(p3_8);
        const auto k = canonical_class(p3_8);
        const auto arms = arm_lengths(rs);
        bool ok = arms == std::vector<int>{2, 4, 4};
        if (is_json(cfg)) {
            json roots = json::array();
            for (const auto& a : rs.simple_roots) {
                const Int norm = weyl_form(a, a);
                const Int kp = weyl_form(a, k);
                ok = ok && norm == -2 && kp == 0;
                json row;
                row["coeffs"] = to_decimal(a.coeffs);
                row["norm"] = to_decimal(norm);
                row["k_pairing"] = to_decimal(kp);
                roots.push_back(std::move(row));
            }
            json edges = json::array();
            for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
                for (std::size_t j = i + 1; j < rs.simple_roots.size(); ++j)
                    if (weyl_form(rs.simple_roots[i], rs.simple_roots[j]) == 1)
                        edges.push_back({i, j});
            json j;
            j["simple_roots"] = std::move(roots);
            j["edges"] = std::move(edges);
            j["arm_lengths"] = arms;
            emit_json(out, j);
        } else {
            emit_csv_row(out, {"index", "coeffs", "norm", "k_pairing"});
            for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
                const auto& a = rs.simple_roots[i];
                const Int norm = weyl_form(a, a);
                const Int kp = weyl_form(a, k);
                ok = ok && norm == -2 && kp == 0;
                emit_csv_row(out, {std::to_string(i), join_coeffs(a.coeffs), to_decimal(norm),
                                   to_decimal(kp)});
            }
            std::string as;
            for (int a : arms) {
                if (!as.empty())
                    as += " ";
                as += std::to_string(a);
            }
            emit_csv_row(out, {"arms", as, "", ""});
        }
        if (!ok) {
            err << "root system check failed\n";
            return exit_check_failed;
        }
        return exit_ok;
    });
}

} // namespace ktriv
