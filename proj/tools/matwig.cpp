// SPDX-License-Identifier: Apache-2.0
// matwig: config-driven front end for the matrix-Wigner library.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "matwig/cohen.hpp"
#include "matwig/io.hpp"
#include "matwig/mwd.hpp"
#include "matwig/quantize.hpp"
#include "matwig/verify.hpp"

using namespace matwig;

namespace {

enum Exit { ok = 0, verify_failed = 1, config_failed = 2, numeric_failed = 3 };

struct Common {
    std::string config, out, format;
    std::uint64_t seed = 42;
    std::string scale = "fast";
    int threads = 0;
};

io::OutputConfig resolve_output(const io::RunConfig& rc, const Common& c, const char* what) {
    io::OutputConfig o = rc.output;
    if (!c.format.empty()) o.format = io::parse_format(c.format);
    if (!c.out.empty()) o.path = c.out;
    if (o.path.empty()) throw Error(Errc::config, std::string("output.path: missing (") + what + " needs --out or output.path)");
    return o;
}

io::RunConfig need_config(const Common& c) {
    if (c.config.empty()) throw Error(Errc::config, "--config is required");
    return io::load_config(c.config);
}

int cmd_transform(const Common& c) {
    const auto rc = need_config(c);
    if (!rc.matrix) throw Error(Errc::config, "matrix: missing");
    if (rc.signals.empty() || rc.signals.size() > 2) throw Error(Errc::config, "signals: expected one or two signals");
    const auto out = resolve_output(rc, c, "transform");
    const Signal& f = rc.signals[0];
    const Signal& g = rc.signals.size() == 2 ? rc.signals[1] : rc.signals[0];
    MwdOptions mo;
    mo.oversample = rc.oversample;
    const auto F = mwd(*rc.matrix, f, g, rc.grid, mo);
    switch (out.format) {
        case io::Format::csv: io::write_csv(out.path, F); break;
        case io::Format::bin: io::write_bin(out.path, io::to_array(F)); break;
        case io::Format::pgm: io::write_pgm(out.path, F); break;
    }
    std::printf("matrix: %s\n", describe(*rc.matrix).c_str());
    std::printf("wrote %s (%zu x %zu)\n", out.path.c_str(), F.size(), F.size());
    return ok;
}

int cmd_quantize(const Common& c, bool check_adjoint) {
    const auto rc = need_config(c);
    if (!rc.matrix) throw Error(Errc::config, "matrix: missing");
    if (!rc.symbol) throw Error(Errc::config, "symbol: missing");
    if (rc.signals.size() != 1) throw Error(Errc::config, "signals: expected exactly one input signal");
    const auto out = resolve_output(rc, c, "quantize");
    if (out.format == io::Format::pgm) throw Error(Errc::config, "output.format: pgm is for phase-space fields");
    const auto K = kernel_from_symbol(*rc.symbol, *rc.matrix);
    const auto fs = rc.signals[0].on(rc.grid);
    const auto y = apply_operator(K, fs);
    if (out.format == io::Format::csv)
        io::write_csv(out.path, y, rc.grid);
    else
        io::write_bin(out.path, io::to_array(y, rc.grid));
    std::printf("relative_difference %.6e\n", l2_diff_rel(y, fs));
    std::printf("operator_norm %.6e\n", op_norm(K));
    if (check_adjoint) std::printf("max_abs_K_minus_KH %.6e\n", (K.values - K.values.adjoint()).cwiseAbs().maxCoeff());
    std::printf("wrote %s\n", out.path.c_str());
    return ok;
}

int cmd_verify(const Common& c, const std::string& suite, bool break_det) {
    if (c.scale != "fast" && c.scale != "full") throw Error(Errc::config, "--scale must be fast or full");
    if (suite != "all" && !verify::is_suite(suite)) throw Error(Errc::config, "unknown suite '" + suite + "'");
    verify::SuiteOptions opt;
    opt.seed = c.seed;
    opt.full = c.scale == "full";
    opt.break_det = break_det;
    std::vector<std::string> names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
    bool all_ok = true;
    double total = 0;
    for (const auto& n : names) {
        const auto r = verify::run_suite(n, opt);
        for (const auto& ch : r.checks)
            std::printf("  %-4s %-12s %-55s %.3e %s %.1e\n", ch.pass() ? "ok" : "FAIL", n.c_str(), ch.name.c_str(), ch.value,
                        ch.lower ? ">" : "<", ch.bound);
        std::printf("%s %2d %s (%zu checks, %.1fs)\n", r.pass() ? "PASS" : "FAIL", r.criterion, n.c_str(), r.checks.size(),
                    r.seconds);
        std::fflush(stdout);
        all_ok = all_ok && r.pass();
        total += r.seconds;
    }
    std::printf("%s: %zu suite(s), %.1fs\n", all_ok ? "all passed" : "failures", names.size(), total);
    return all_ok ? ok : verify_failed;
}

int cmd_demo(const Common& c) {
    Grid grid = default_grid(1);
    Signal f = sum({tf_shift(gaussian(1), {-2.0}, {0.0}), tf_shift(gaussian(1), {2.0}, {1.0})});
    if (!c.config.empty()) {
        const auto rc = io::load_config(c.config);
        grid = rc.grid;
        if (!rc.signals.empty()) f = rc.signals[0];
    }
    if (grid.dim != 1) throw Error(Errc::config, "grid.dim: the interference demo is one-dimensional");
    const std::string prefix = c.out.empty() ? "interference" : c.out;
    const double energy = std::pow(norm(f, grid), 2);
    for (double mu : {0.0, 0.3, 0.6}) {
        const auto F = mwd(preset::cohen(Mat::Constant(1, 1, mu)), f, f, grid);
        cplx total = 0;
        for (const auto& v : F.values) total += v;
        total *= F.cell();
        char name[64];
        std::snprintf(name, sizeof name, "_M%.1f.pgm", mu);
        const std::string path = prefix + name;
        io::write_pgm(path, F);
        std::printf("M=%.1f energy %.12f (|f|^2 = %.12f) -> %s\n", mu, total.real(), energy, path.c_str());
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix-Wigner distributions and pseudodifferential operators"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&c](CLI::App* s) {
        s->add_option("--config", c.config, "JSON run configuration")->check(CLI::ExistingFile);
        s->add_option("--out", c.out, "output path (prefix for demo-interference)");
        s->add_option("--format", c.format, "csv, bin or pgm")->check(CLI::IsMember({"csv", "bin", "pgm"}));
        s->add_option("--threads", c.threads, "worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
    };

    auto* transform = app.add_subcommand("transform", "compute B_A(f, g) and write the field");
    add_common(transform);

    bool check_adjoint = false;
    auto* quantize = app.add_subcommand("quantize", "apply the operator sigma^A to a signal");
    add_common(quantize);
    quantize->add_flag("--check-adjoint", check_adjoint, "print max |K - K^H|");

    std::string suite;
    bool break_det = false;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    add_common(verify);
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--seed", c.seed, "random seed");
    verify->add_option("--scale", c.scale, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_flag("--break-det", break_det)->group("");

    auto* demo = app.add_subcommand("demo-interference", "W_M heatmaps of a two-Gaussian sum for M = 0, 0.3, 0.6");
    add_common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : config_failed;
    }
    if (c.threads > 0) omp_set_num_threads(c.threads);

    try {
        if (*transform) return cmd_transform(c);
        if (*quantize) return cmd_quantize(c, check_adjoint);
        if (*verify) return cmd_verify(c, suite, break_det);
        if (*demo) return cmd_demo(c);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code() == Errc::config ? config_failed : numeric_failed;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return numeric_failed;
    }
    return ok;
}
