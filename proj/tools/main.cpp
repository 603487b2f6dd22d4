#include "sphereavoid/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"certified bounds for sets on the 2-sphere avoiding a forbidden inner product"};
    app.require_subcommand(1);

    sphereavoid::RunConfig cfg;
    bool json_flag = false;
    long circle_p = 0, circle_q = 0;

    CLI::App* vpc = app.add_subcommand("verify-paper-certificate",
                                       "verify the built-in dual certificate for t = 0");

    CLI::App* ver = app.add_subcommand("verify", "verify a certificate from a JSON file");
    ver->add_option("file", cfg.input_path, "certificate JSON file")->required();

    CLI::App* bound = app.add_subcommand("bound", "cutting-plane upper bound for t = 0");
    bound->add_option("--degree", cfg.degree, "truncation degree (default 40)");
    bound->add_option("--qmax", cfg.q_max, "largest odd cycle length (default 5)");
    bound->add_option("--rounds", cfg.rounds, "cutting-plane rounds (default 10)");
    bound->add_option("--emit-certificate", cfg.output_path, "write the dual as certificate JSON");

    CLI::App* construct = app.add_subcommand("construct", "cap construction lower bound");
    construct->add_option("--t", cfg.t, "forbidden inner product (exact rational)")->required();
    construct->add_flag("--validate", cfg.validate, "Monte Carlo avoidance/measure check");
    construct->add_option("--samples", cfg.samples, "Monte Carlo samples (default 10^6)");
    construct->add_option("--seed", cfg.seed, "random seed (default 0)");

    CLI::App* circle = app.add_subcommand("circle", "largest avoiding measure on the circle");
    circle->add_option("--p", circle_p, "rotation numerator");
    circle->add_option("--q", circle_q, "rotation denominator");
    circle->add_flag("--irrational", cfg.irrational, "irrational rotation");

    CLI::App* geg = app.add_subcommand("gegenbauer", "evaluate a normalized Gegenbauer polynomial");
    geg->add_option("--nu", cfg.nu, "weight parameter (default 1/2)");
    geg->add_option("--degree", cfg.degree, "polynomial degree")->required();
    geg->add_option("--at", cfg.at, "evaluation point: rational or [+|-]t(p,q)")->required();

    CLI::App* gb = app.add_subcommand("graph-bound", "independence bound from a points file");
    gb->add_option("--points", cfg.input_path, "points file (header: dimension count)")->required();
    gb->add_option("--forbid", cfg.forbid, "comma-separated forbidden inner products")->required();

    CLI::App* mu = app.add_subcommand("mu", "eigenvalue of the inner-product-t averaging operator");
    mu->add_option("--n", cfg.n, "ambient dimension (default 3)");
    mu->add_option("--degree", cfg.degree, "harmonic degree")->required();
    mu->add_option("--t", cfg.t, "inner product (exact rational)")->required();

    for (CLI::App* sc : {vpc, ver, bound, construct, circle, geg, gb, mu})
        sc->add_flag("--json", json_flag, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = json_flag ? sphereavoid::OutputFormat::json : sphereavoid::OutputFormat::human;
    if (circle->count("--p")) cfg.p = circle_p;
    if (circle->count("--q")) cfg.q = circle_q;

    return sphereavoid::run(cfg, std::cout, std::cerr);
}
