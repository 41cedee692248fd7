#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rhomatch/certify.hpp"
#include "rhomatch/enumerate.hpp"
#include "rhomatch/graph6.hpp"
#include "rhomatch/matching.hpp"

namespace rhomatch {

struct VerifyCounts {
    long total = 0;
    long parse_errors = 0;
    long skipped_odd = 0;
    long skipped_disconnected = 0;
    long skipped_hypothesis = 0;  // order below the guarantee and no override given
    long checked = 0;
    long above_threshold = 0;
    long exceptions = 0;  // extremal graphs sitting at the threshold
    long violations = 0;  // above threshold yet no perfect matching

    void add(const VerifyCounts& o) {
        total += o.total;
        parse_errors += o.parse_errors;
        skipped_odd += o.skipped_odd;
        skipped_disconnected += o.skipped_disconnected;
        skipped_hypothesis += o.skipped_hypothesis;
        checked += o.checked;
        above_threshold += o.above_threshold;
        exceptions += o.exceptions;
        violations += o.violations;
    }
};

struct VerifyOptions {
    // Replaces the derived threshold; comparisons then become strict, and no
    // graph is excepted (used for sharpened small-order bounds).
    std::optional<double> threshold_override;
    bool record_certificates = false;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct VerifyReport {
    double alpha = 0.0;
    std::optional<double> threshold_override;
    VerifyCounts counts;
    std::vector<Certificate> certificates;      // checked graphs, input order
    std::vector<std::string> violating_graphs;  // graph6 ids
};

namespace detail {

inline void verify_one(const Graph& g, double alpha, const VerifyOptions& opt, VerifyCounts& counts,
                       std::vector<Certificate>* certs, std::vector<std::string>* violators) {
    ++counts.total;
    const int n = g.order();
    if (n % 2 != 0) {
        ++counts.skipped_odd;
        return;
    }
    if (!is_connected(g)) {
        ++counts.skipped_disconnected;
        return;
    }
    double thr;
    bool strict;
    if (opt.threshold_override) {
        thr = *opt.threshold_override;
        strict = true;
    } else if (n >= 4 && static_cast<double>(n) >= min_theorem_order(alpha)) {
        thr = threshold(n, alpha);
        strict = false;
    } else {
        ++counts.skipped_hypothesis;
        return;
    }
    ++counts.checked;
    Certificate cert;
    cert.alpha = alpha;
    if (n <= 62) cert.graph6 = to_graph6(g);
    cert.threshold = thr;
    cert.rho = rho_alpha(g, alpha);
    const bool above = strict ? cert.rho > thr + kThresholdTol : cert.rho >= thr - kThresholdTol;
    if (!above) {
        cert.verdict = Verdict::INCONCLUSIVE;
    } else {
        ++counts.above_threshold;
        if (!strict && is_extremal_graph(g)) {
            ++counts.exceptions;
            cert.verdict = Verdict::EXTREMAL_EXCEPTION;
        } else {
            cert.verdict = Verdict::PM_GUARANTEED;
            const bool pm = n <= 24 ? has_perfect_matching_dp(g) : max_matching(g).perfect;
            cert.oracle_pm = pm;
            if (!pm) {
                ++counts.violations;
                if (violators) violators->push_back(cert.graph6);
            }
        }
    }
    if (certs) certs->push_back(std::move(cert));
}

struct Chunk {
    VerifyCounts counts;
    std::vector<Certificate> certs;
    std::vector<std::string> violators;
};

inline unsigned worker_count(unsigned requested, std::uint64_t items) {
    unsigned t = requested ? requested : std::thread::hardware_concurrency();
    if (t < 1) t = 1;
    if (items < 256) t = 1;
    if (static_cast<std::uint64_t>(t) > items && items > 0) t = static_cast<unsigned>(items);
    return t;
}

}  // namespace detail

inline VerifyReport verify_graphs(const std::vector<Graph>& graphs, double alpha,
                                  const VerifyOptions& opt = {}) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("verify_graphs: alpha must lie in [0,1)");
    VerifyReport report;
    report.alpha = alpha;
    report.threshold_override = opt.threshold_override;
    const unsigned workers = detail::worker_count(opt.threads, graphs.size());
    std::vector<detail::Chunk> chunks(workers);
    auto run = [&](unsigned w) {
        detail::Chunk& c = chunks[w];
        const std::size_t lo = graphs.size() * w / workers;
        const std::size_t hi = graphs.size() * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i)
            detail::verify_one(graphs[i], alpha, opt, c.counts,
                               opt.record_certificates ? &c.certs : nullptr, &c.violators);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (std::thread& t : pool) t.join();
    }
    for (detail::Chunk& c : chunks) {
        report.counts.add(c.counts);
        report.certificates.insert(report.certificates.end(), c.certs.begin(), c.certs.end());
        report.violating_graphs.insert(report.violating_graphs.end(), c.violators.begin(),
                                       c.violators.end());
    }
    return report;
}

// Every labeled graph on n vertices (n <= 7), streamed straight out of the
// mask enumeration so nothing is materialized.
inline VerifyReport verify_internal(int n, double alpha, const VerifyOptions& opt = {}) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("verify_internal: alpha must lie in [0,1)");
    if (n < 1 || n > 7) throw std::invalid_argument("verify_internal: order must be in 1..7");
    VerifyReport report;
    report.alpha = alpha;
    report.threshold_override = opt.threshold_override;
    const std::uint64_t total = GraphEnumerator(n).total_masks();
    const unsigned workers = detail::worker_count(opt.threads, total);
    std::vector<detail::Chunk> chunks(workers);
    auto run = [&](unsigned w) {
        detail::Chunk& c = chunks[w];
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        for (std::uint64_t mask = lo; mask < hi; ++mask)
            detail::verify_one(GraphEnumerator::from_mask(n, static_cast<std::uint32_t>(mask)),
                               alpha, opt, c.counts, opt.record_certificates ? &c.certs : nullptr,
                               &c.violators);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (std::thread& t : pool) t.join();
    }
    for (detail::Chunk& c : chunks) {
        report.counts.add(c.counts);
        report.certificates.insert(report.certificates.end(), c.certs.begin(), c.certs.end());
        report.violating_graphs.insert(report.violating_graphs.end(), c.violators.begin(),
                                       c.violators.end());
    }
    return report;
}

// One graph6 string per line; blank lines skipped, unparsable lines counted.
inline VerifyReport verify_corpus(const std::string& path, double alpha,
                                  const VerifyOptions& opt = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("verify_corpus: cannot open " + path);
    std::vector<Graph> graphs;
    long parse_errors = 0;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Graph6Error&) {
            ++parse_errors;
        }
    }
    VerifyReport report = verify_graphs(graphs, alpha, opt);
    report.counts.parse_errors = parse_errors;
    report.counts.total += parse_errors;
    return report;
}

}  // namespace rhomatch
