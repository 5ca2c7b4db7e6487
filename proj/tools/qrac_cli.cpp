// Command-line front end: single-point evaluation, parameter sweeps,
// threshold tables, and optimizer dumps. All numeric output uses 12
// significant digits; CSV is UTF-8 with LF line endings.

#include <qrac/qrac.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qrac;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::vector<ChannelKind> parse_channel_list(const std::string& text) {
    if (text == "all")
        return {all_channel_kinds.begin(), all_channel_kinds.end()};
    std::vector<ChannelKind> kinds;
    for (const std::string& token : split_list(text)) kinds.push_back(parse_channel(token));
    return kinds;
}

std::vector<std::size_t> parse_dim_list(const std::string& text) {
    std::vector<std::size_t> dims;
    for (const std::string& token : split_list(text)) {
        std::size_t pos = 0;
        const long value = std::stol(token, &pos);
        if (pos != token.size() || value < 0)
            throw std::domain_error("invalid dimension token: " + token);
        dims.push_back(static_cast<std::size_t>(value));
    }
    return dims;
}

struct SeesawFlags {
    double tol = 1e-10;
    int max_iters = 500;
    int restarts = 1;
    unsigned long long seed = 0;

    SeesawConfig config() const {
        SeesawConfig cfg;
        cfg.tol = tol;
        cfg.max_iters = max_iters;
        cfg.restarts = restarts;
        cfg.seed = seed;
        return cfg;
    }
};

void add_seesaw_flags(CLI::App* cmd, SeesawFlags& flags) {
    cmd->add_option("--tol", flags.tol, "see-saw convergence tolerance")
        ->capture_default_str();
    cmd->add_option("--max-iters", flags.max_iters, "see-saw iteration cap")
        ->capture_default_str();
    cmd->add_option("--restarts", flags.restarts, "random restarts beyond the basis-aligned start")
        ->capture_default_str();
    cmd->add_option("--seed", flags.seed, "seed for all restart randomness")
        ->capture_default_str();
}

void print_matrix_parts(const ComplexMatrix& m) {
    std::printf("re:\n");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::printf("%s%s", j ? " " : "", format_significant(m(i, j).real()).c_str());
        std::printf("\n");
    }
    std::printf("im:\n");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::printf("%s%s", j ? " " : "", format_significant(m(i, j).imag()).c_str());
        std::printf("\n");
    }
}

int cmd_eval(const std::string& channel, std::size_t d, double gamma_t, bool optimized,
             const SeesawFlags& flags) {
    const SweepRecord rec =
        evaluate_record(parse_channel(channel), d, gamma_t, optimized, flags.config());
    std::ostringstream out;
    out << csv_header << '\n';
    write_csv_record(out, rec);
    std::fputs(out.str().c_str(), stdout);
    return 0;
}

int cmd_sweep(const SweepSpec& spec, unsigned threads) {
    const std::vector<SweepRecord> records = run_sweep(spec, threads);
    if (spec.output_path.empty() || spec.output_path == "-") {
        std::ostringstream out;
        write_csv(out, records);
        std::fputs(out.str().c_str(), stdout);
    } else {
        write_csv_file(spec.output_path, records);
        std::printf("wrote %zu records to %s\n", records.size(), spec.output_path.c_str());
    }
    return 0;
}

int cmd_threshold(const std::string& channels, const std::string& dims, bool optimized,
                  const SeesawFlags& flags, double scan_max, const std::string& output) {
    const std::vector<ChannelKind> kinds = parse_channel_list(channels);
    const std::vector<std::size_t> dim_list = parse_dim_list(dims);
    if (kinds.empty()) throw std::domain_error("threshold: channel list is empty");
    if (dim_list.empty()) throw std::domain_error("threshold: dimension list is empty");
    const std::optional<SeesawConfig> optimizer =
        optimized ? std::optional<SeesawConfig>(flags.config()) : std::nullopt;

    std::vector<ThresholdResult> results;
    for (ChannelKind kind : kinds)
        for (std::size_t d : dim_list)
            results.push_back(threshold_gamma_t(kind, d, optimizer, scan_max));

    std::printf("%-16s", "channel");
    for (std::size_t d : dim_list) std::printf("  %9s", ("d=" + std::to_string(d)).c_str());
    std::printf("\n");
    std::size_t index = 0;
    for (ChannelKind kind : kinds) {
        std::printf("%-16s", channel_name(kind));
        for (std::size_t c = 0; c < dim_list.size(); ++c, ++index) {
            const ThresholdResult& res = results[index];
            if (res.crossed) std::printf("  %9.6f", *res.gamma_t_star);
            else std::printf("  %9s", "none");
        }
        std::printf("\n");
    }

    if (!output.empty()) {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + output);
        out << "channel,d,gamma_t_star,p_star,crossed\n";
        for (const ThresholdResult& res : results) {
            out << channel_name(res.channel_kind) << ',' << res.dim << ','
                << (res.crossed ? format_significant(*res.gamma_t_star) : "none") << ','
                << (res.crossed ? format_significant(*res.p_star) : "none") << ','
                << (res.crossed ? 1 : 0) << '\n';
        }
        if (!out.flush()) throw std::runtime_error("failed writing output file: " + output);
        std::printf("wrote %zu thresholds to %s\n", results.size(), output.c_str());
    }
    return 0;
}

int cmd_optimize(const std::string& channel, std::size_t d, double gamma_t,
                 const SeesawFlags& flags) {
    const double p = gamma_t_to_p(gamma_t);
    const NoiseChannel noise = make_channel(parse_channel(channel), d, p);
    const SeesawResult result = seesaw(noise, flags.config());
    const Strategy& s = result.strategy;

    std::printf("channel: %s\n", channel_name(noise.kind));
    std::printf("d: %zu\n", d);
    std::printf("gamma_t: %s\n", format_significant(gamma_t).c_str());
    std::printf("p: %s\n", format_significant(p).c_str());
    std::printf("objective: %s\n", format_significant(result.objective_trace.back()).c_str());
    std::printf("converged: %s\n", result.converged ? "yes" : "no");
    std::printf("iterations: %d\n", result.iterations);
    std::printf("povm_deviation_q0: %s\n",
                format_significant(povm_deviation(s.effects_q0)).c_str());
    std::printf("povm_deviation_q1: %s\n",
                format_significant(povm_deviation(s.effects_q1)).c_str());

    std::printf("\nobjective_trace:\n");
    for (double value : result.objective_trace)
        std::printf("%s\n", format_significant(value).c_str());

    for (std::size_t x0 = 0; x0 < d; ++x0)
        for (std::size_t x1 = 0; x1 < d; ++x1) {
            std::printf("\nstate x0=%zu x1=%zu:\n", x0, x1);
            print_matrix_parts(s.states[x0 * d + x1]);
        }
    for (std::size_t b = 0; b < d; ++b) {
        std::printf("\neffect q0 b=%zu:\n", b);
        print_matrix_parts(s.effects_q0[b]);
    }
    for (std::size_t b = 0; b < d; ++b) {
        std::printf("\neffect q1 b=%zu:\n", b);
        print_matrix_parts(s.effects_q1[b]);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qudit random access code toolkit"};
    app.require_subcommand(1);

    std::string channel;
    std::string channels = "all";
    std::string dims = "2,3,4,5,6,7";
    std::size_t d = 2;
    double gamma_t = 0.0;
    bool optimized = false;
    SeesawFlags flags;
    double scan_max = 6.0;
    std::string output;
    unsigned threads = 1;
    SweepSpec spec;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one (channel, d, gamma_t) point");
    eval->add_option("--channel", channel, "noise channel name")->required();
    eval->add_option("--d", d, "qudit dimension")->required();
    eval->add_option("--gamma-t", gamma_t, "dimensionless time Gamma t")->required();
    eval->add_flag("--optimized", optimized, "optimize the strategy with see-saw");
    add_seesaw_flags(eval, flags);

    CLI::App* sweep = app.add_subcommand("sweep", "sweep gamma_t grids and write CSV");
    std::string sweep_channels;
    std::string sweep_dims;
    sweep->add_option("--channels", sweep_channels, "comma-separated channel names (or 'all')")
        ->required();
    sweep->add_option("--dims", sweep_dims, "comma-separated dimensions")->required();
    sweep->add_option("--gamma-t-start", spec.gamma_t_start, "grid start")->capture_default_str();
    sweep->add_option("--gamma-t-stop", spec.gamma_t_stop, "grid stop (inclusive)")->required();
    sweep->add_option("--gamma-t-step", spec.gamma_t_step, "grid step")->capture_default_str();
    sweep->add_flag("--optimized", spec.optimized, "optimize each point with see-saw");
    sweep->add_option("--output", spec.output_path, "CSV output path ('-' for stdout)");
    sweep->add_option("--threads", threads, "worker threads")->capture_default_str();
    SeesawFlags sweep_flags;
    add_seesaw_flags(sweep, sweep_flags);

    CLI::App* threshold = app.add_subcommand("threshold", "locate ratio = 1 crossings");
    threshold->add_option("--channels", channels, "comma-separated channel names (or 'all')")
        ->capture_default_str();
    threshold->add_option("--dims", dims, "comma-separated dimensions")->capture_default_str();
    threshold->add_flag("--optimized", optimized, "optimize each point with see-saw");
    threshold->add_option("--scan-max", scan_max, "largest gamma_t scanned")
        ->capture_default_str();
    threshold->add_option("--output", output, "optional CSV output path");
    add_seesaw_flags(threshold, flags);

    CLI::App* optimize = app.add_subcommand("optimize", "dump an optimized strategy");
    optimize->add_option("--channel", channel, "noise channel name")->required();
    optimize->add_option("--d", d, "qudit dimension")->required();
    optimize->add_option("--gamma-t", gamma_t, "dimensionless time Gamma t")->required();
    add_seesaw_flags(optimize, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return cmd_eval(channel, d, gamma_t, optimized, flags);
        if (sweep->parsed()) {
            spec.channels = parse_channel_list(sweep_channels);
            spec.dims = parse_dim_list(sweep_dims);
            spec.seesaw = sweep_flags.config();
            return cmd_sweep(spec, threads);
        }
        if (threshold->parsed())
            return cmd_threshold(channels, dims, optimized, flags, scan_max, output);
        if (optimize->parsed()) return cmd_optimize(channel, d, gamma_t, flags);
    } catch (const std::exception& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 2;
    }
    return 0;
}
