// ktriv: exact lattice computations for the K-trivial curve family on the
// blow-up of P^3 at eight points. See README.md for the subcommands.

#include "ktriv/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

int main(int argc, char** argv)
{
    CLI::App app{"exact divisor/curve lattice computations on blow-ups of P^3"};
    app.require_subcommand(1);

    ktriv::RunConfig cfg;
    std::string threads = "1";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--size-cap", cfg.size_cap, "hard cap on enumerated set sizes")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--threads", threads, "worker threads, or 'auto'")->capture_default_str();
        return sub;
    };

    auto* family = add_common(app.add_subcommand("family", "iterate the K-trivial curve family C_n"));
    family->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::NonNegativeNumber)->capture_default_str();

    add_common(app.add_subcommand("verify", "run the full invariant suite"));

    auto* orbit = add_common(app.add_subcommand("orbit", "enumerate the Weyl orbit of the line class"));
    orbit->add_option("--degree-bound", cfg.degree_bound, "report classes up to this degree")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    orbit->add_option("--slack", cfg.slack, "explore this far past the bound (default 2x bound)")
        ->check(CLI::NonNegativeNumber);
    orbit->add_option("--cache", cfg.cache_path, "orbit cache file (reused when parameters match)");

    auto* spectral = add_common(app.add_subcommand("spectral", "characteristic polynomial, Jordan and Coxeter reports"));
    spectral->add_option("--n-max", cfg.n_max, "family length for the growth report")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    auto* surface = add_common(app.add_subcommand("surface", "enumerate (-2)-classes on the fiber surface"));
    surface->add_option("--coeff-bound", cfg.coeff_bound, "max |coefficient|")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    add_common(app.add_subcommand("roots", "report the simple roots and their Dynkin tree"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ktriv::exit_resource;
    }

    if (threads == "auto") {
        const unsigned hc = std::thread::hardware_concurrency();
        cfg.threads = hc ? static_cast<int>(hc) : 1;
    } else {
        try {
            cfg.threads = std::stoi(threads);
        } catch (const std::exception&) {
            std::cerr << "usage error: --threads takes a positive integer or 'auto'\n";
            return ktriv::exit_resource;
        }
        if (cfg.threads < 1) {
            std::cerr << "usage error: --threads takes a positive integer or 'auto'\n";
            return ktriv::exit_resource;
        }
    }

    if (app.got_subcommand("family"))
        return ktriv::cmd_family(cfg, std::cout, std::cerr);
    if (app.got_subcommand("verify"))
        return ktriv::cmd_verify(cfg, std::cout, std::cerr);
    if (app.got_subcommand("orbit"))
        return ktriv::cmd_orbit(cfg, std::cout, std::cerr);
    if (app.got_subcommand("spectral"))
        return ktriv::cmd_spectral(cfg, std::cout, std::cerr);
    if (app.got_subcommand("surface"))
        return ktriv::cmd_surface(cfg, std::cout, std::cerr);
    return ktriv::cmd_roots(cfg, std::cout, std::cerr);
}
