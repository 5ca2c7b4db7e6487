#ifndef QRAC_SWEEP_HPP
#define QRAC_SWEEP_HPP

// Parameter sweeps over (channel, dimension, Gamma t) and CSV emission.
// Evaluation points are independent and may fan out across worker threads;
// records are always merged in deterministic (channel, d, gamma_t) order.

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "channels.hpp"
#include "encoding.hpp"
#include "protocol.hpp"
#include "seesaw.hpp"

namespace qrac {

struct SweepSpec {
    std::vector<ChannelKind> channels;
    std::vector<std::size_t> dims;
    double gamma_t_start = 0.0;
    double gamma_t_stop = 0.0;
    double gamma_t_step = 0.01;
    bool optimized = false;
    SeesawConfig seesaw;
    std::string output_path;
};

struct SweepRecord {
    std::string channel;
    std::size_t d = 0;
    double gamma_t = 0.0;
    double p = 0.0;
    double pq = 0.0;
    double pc = 0.0;
    double ratio = 0.0;
    int optimized = 0;
    int iterations = 0;
    double povm_deviation = 0.0;
};

inline void validate_spec(const SweepSpec& spec) {
    if (spec.channels.empty()) throw std::domain_error("sweep: channel list is empty");
    if (spec.dims.empty()) throw std::domain_error("sweep: dimension list is empty");
    for (std::size_t d : spec.dims)
        if (d < 2) throw std::domain_error("sweep: dimensions must be at least 2");
    if (!(spec.gamma_t_start >= 0.0)) throw std::domain_error("sweep: gamma_t start must be non-negative");
    if (!(spec.gamma_t_step > 0.0)) throw std::domain_error("sweep: gamma_t step must be positive");
    if (!(spec.gamma_t_stop > spec.gamma_t_start))
        throw std::domain_error("sweep: gamma_t stop must exceed start");
}

inline SweepRecord evaluate_record(ChannelKind kind, std::size_t d, double gamma_t,
                                   bool optimized, const SeesawConfig& config = {}) {
    const double p = gamma_t_to_p(gamma_t);
    const NoiseChannel channel = make_channel(kind, d, p);
    SweepRecord rec;
    rec.channel = channel_name(kind);
    rec.d = d;
    rec.gamma_t = gamma_t;
    rec.p = p;
    rec.pc = classical_success(d);
    rec.optimized = optimized ? 1 : 0;
    if (optimized) {
        const SeesawResult result = seesaw(channel, config);
        rec.pq = result.objective_trace.back();
        rec.iterations = result.iterations;
        rec.povm_deviation = std::max(povm_deviation(result.strategy.effects_q0),
                                      povm_deviation(result.strategy.effects_q1));
    } else {
        const Strategy strategy = noiseless_strategy(d);
        rec.pq = average_success(strategy, channel);
        rec.iterations = 0;
        rec.povm_deviation = std::max(povm_deviation(strategy.effects_q0),
                                      povm_deviation(strategy.effects_q1));
    }
    rec.ratio = rec.pq / rec.pc;
    return rec;
}

namespace detail {

struct SweepTask {
    ChannelKind kind;
    std::size_t d;
    double gamma_t;
};

inline std::vector<SweepTask> sweep_tasks(const SweepSpec& spec) {
    const long points = static_cast<long>(
        std::floor((spec.gamma_t_stop - spec.gamma_t_start) / spec.gamma_t_step + 1e-9));
    std::vector<SweepTask> tasks;
    for (ChannelKind kind : spec.channels)
        for (std::size_t d : spec.dims)
            for (long k = 0; k <= points; ++k)
                tasks.push_back({kind, d,
                                 spec.gamma_t_start + static_cast<double>(k) * spec.gamma_t_step});
    return tasks;
}

} // namespace detail

inline std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads = 1) {
    validate_spec(spec);
    const std::vector<detail::SweepTask> tasks = detail::sweep_tasks(spec);
    std::vector<SweepRecord> records(tasks.size());
    const auto work_one = [&](std::size_t i) {
        records[i] = evaluate_record(tasks[i].kind, tasks[i].d, tasks[i].gamma_t,
                                     spec.optimized, spec.seesaw);
    };
    if (threads <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) work_one(i);
        return records;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(threads, tasks.size());
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                work_one(i);
        });
    for (auto& th : pool) th.join();
    return records;
}

inline std::string format_significant(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

inline constexpr const char* csv_header =
    "channel,d,gamma_t,p,pq,pc,ratio,optimized,iterations,povm_deviation";

inline void write_csv_record(std::ostream& out, const SweepRecord& rec) {
    const std::string pq = format_significant(rec.pq);
    const std::string pc = format_significant(rec.pc);
    // The ratio column is the quotient of pq and pc exactly as printed, so the
    // row stays self-consistent after re-parsing up to the ratio's own print
    // rounding (absolute step 1e-11 for ratios in [1, 10), hence <= 5e-12).
    const std::string ratio =
        format_significant(std::strtod(pq.c_str(), nullptr) / std::strtod(pc.c_str(), nullptr));
    out << rec.channel << ',' << rec.d << ',' << format_significant(rec.gamma_t) << ','
        << format_significant(rec.p) << ',' << pq << ',' << pc << ',' << ratio << ','
        << rec.optimized << ',' << rec.iterations << ','
        << format_significant(rec.povm_deviation) << '\n';
}

inline void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << csv_header << '\n';
    for (const auto& rec : records) write_csv_record(out, rec);
}

inline void write_csv_file(const std::string& path, const std::vector<SweepRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_csv(out, records);
    if (!out.flush()) throw std::runtime_error("failed writing output file: " + path);
}

} // namespace qrac

#endif
