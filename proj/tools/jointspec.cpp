// jointspec: joint spectra of quantized integrable systems from the command line.
//
//   jointspec jc --n 5 --t-max 40 --out jc.csv --svg jc.svg
//   jointspec toric --model S2xS2 --k 16 --out k16.csv
//   jointspec classical --model JC --window 3
//   jointspec converge --model S2 --k-list 4,8,16,32,64
//   jointspec recover --in k8.csv --in k16.csv --in k32.csv --out polytope.json
//   jointspec plot --in jc.csv --out jc.svg
//
// Options may also come from a key=value file given with --config; flags on
// the command line take precedence.
#include <iostream>
#include <utility>

#include <CLI11.hpp>

#include "jointspec/cli.hpp"
#include "jointspec/errors.hpp"

int main(int argc, char** argv) {
    jointspec::RunConfig config;
    CLI::App app{"Joint spectra of quantized integrable systems"};
    app.set_config("--config", "", "key=value file with default option values");
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--model", config.model, "S2, S2xS2 or JC");
    app.add_option("--n", config.n, "Jaynes-Cummings spin parameter (hbar = 2/(n+1))");
    app.add_option("--k", config.k, "toric quantization level (hbar = 1/k)");
    app.add_option("--k-list", config.k_list, "strictly increasing k values")->delimiter(',');
    app.add_option("--t-max", config.t_max, "largest Jaynes-Cummings excitation block");
    app.add_option("--trunc", config.trunc, "oscillator truncation of the full-build cross-check");
    app.add_option("--window", config.window, "classical window f1 <= c");
    app.add_option("--tol", config.tol, "rounding tolerance for recover");
    app.add_option("--seed", config.seed, "seed of the random-combination cross-check");
    app.add_option("--out", config.out, "primary output file (default: stdout)");
    app.add_option("--in", config.in, "input spectrum CSV (repeatable)");
    app.add_option("--svg", config.svg, "jc: also write a scatter plot");
    app.add_option("--samples", config.samples, "classical: also write the sample cloud");
    app.add_option("--res", config.resolution, "classical/converge grid points per axis (>= 16)");

    const std::pair<const char*, const char*> commands[] = {
        {"jc", "Jaynes-Cummings joint spectrum (CSV)"},
        {"toric", "joint spectrum of S2 or S2xS2 at level k (CSV)"},
        {"classical", "hull of the classical moment image (JSON)"},
        {"converge", "Hausdorff distance to the classical image over k-list (CSV)"},
        {"recover", "rational polytope and Delzant check from several spectra (JSON)"},
        {"plot", "SVG scatter plot of a spectrum CSV"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->callback([&config, name] { config.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        jointspec::run(config, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
