#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rhomatch/rhomatch.hpp"

namespace {

using namespace rhomatch;

std::string coef_term(double c, const char* power) {
    std::string out = c < 0 ? " - " : " + ";
    out += format_real(std::abs(c));
    if (*power) {
        out += " ";
        out += power;
    }
    return out;
}

std::string cubic_to_string(const CubicPoly& p) {
    std::string out = "x^3";
    out += coef_term(p.c2, "x^2");
    out += coef_term(p.c1, "x");
    out += coef_term(p.c0, "");
    return out;
}

std::string certificate_line(const Certificate& c) {
    std::string line = "graph6=" + c.graph6 + " alpha=" + format_real(c.alpha) +
                       " rho=" + format_real(c.rho) + " threshold=" + format_real(c.threshold) +
                       " verdict=" + to_string(c.verdict);
    if (c.oracle_pm) line += std::string(" oracle_pm=") + (*c.oracle_pm ? "true" : "false");
    return line;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

void parse_grid_spec(const std::string& spec, std::vector<int>& orders, std::vector<double>& alphas) {
    for (const std::string& group : split(spec, ';')) {
        if (group.empty()) continue;
        const std::size_t eq = group.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid: expected key=v1,v2,... in '" + group + "'");
        const std::string key = group.substr(0, eq);
        const std::string values = group.substr(eq + 1);
        if (key == "n" || key == "orders") {
            orders.clear();
            for (const std::string& v : split(values, ','))
                if (!v.empty()) orders.push_back(std::stoi(v));
        } else if (key == "alpha" || key == "alphas") {
            alphas.clear();
            for (const std::string& v : split(values, ','))
                if (!v.empty()) alphas.push_back(parse_alpha(v));
        } else {
            throw std::invalid_argument("grid: unknown key '" + key + "'");
        }
    }
}

void print_counts(const VerifyCounts& c) {
    std::cout << "total=" << c.total << " parse_errors=" << c.parse_errors
              << " skipped_odd=" << c.skipped_odd
              << " skipped_disconnected=" << c.skipped_disconnected
              << " skipped_hypothesis=" << c.skipped_hypothesis << " checked=" << c.checked
              << " above_threshold=" << c.above_threshold << " exceptions=" << c.exceptions
              << " violations=" << c.violations << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect-matching certification from the A_alpha spectral radius"};
    app.require_subcommand(1);
    int exit_code = 0;

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Certify one or more graphs");
    std::string certify_alpha, certify_g6, certify_file;
    bool certify_oracle = false;
    certify_cmd->add_option("--alpha", certify_alpha, "alpha in [0,1), decimal or p/q")->required();
    auto* g6_opt = certify_cmd->add_option("--graph6", certify_g6, "graph6 string");
    auto* file_opt = certify_cmd->add_option("--file", certify_file, "file with one graph6 per line");
    g6_opt->excludes(file_opt);
    certify_cmd->add_flag("--oracle", certify_oracle, "also run the exact matching oracle");
    certify_cmd->callback([&] {
        const double alpha = parse_alpha(certify_alpha);
        std::vector<std::string> lines;
        if (!certify_g6.empty()) {
            lines.push_back(certify_g6);
        } else if (!certify_file.empty()) {
            std::ifstream in(certify_file);
            if (!in) throw std::runtime_error("certify: cannot open " + certify_file);
            std::string line;
            while (std::getline(in, line)) {
                while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
                if (!line.empty()) lines.push_back(line);
            }
        } else {
            throw std::invalid_argument("certify: pass --graph6 or --file");
        }
        for (const std::string& line : lines) {
            Graph g = parse_graph6(line);
            std::cout << certificate_line(certify(g, alpha, certify_oracle)) << "\n";
        }
    });

    // threshold
    auto* threshold_cmd = app.add_subcommand("threshold", "Certification threshold for (n, alpha)");
    std::string thr_alpha;
    int thr_n = 0;
    bool thr_force = false;
    threshold_cmd->add_option("--alpha", thr_alpha, "alpha in [0,1), decimal or p/q")->required();
    threshold_cmd->add_option("--n", thr_n, "graph order")->required();
    threshold_cmd->add_flag("--force", thr_force, "evaluate even where the guarantee does not apply");
    threshold_cmd->callback([&] {
        const double alpha = parse_alpha(thr_alpha);
        const double value = threshold(thr_n, alpha, thr_force);
        std::cout << "n=" << thr_n << " alpha=" << format_real(alpha)
                  << " min_order=" << format_real(min_theorem_order(alpha)) << "\n";
        std::cout << "cubic: " << cubic_to_string(threshold_cubic(thr_n, alpha)) << "\n";
        std::cout << "threshold: " << format_real(value) << "\n";
    });

    // extremal
    auto* extremal_cmd = app.add_subcommand("extremal", "The excepted extremal graph for order n");
    int ext_n = 0;
    bool ext_g6_only = false;
    extremal_cmd->add_option("--n", ext_n, "graph order (>= 4)")->required();
    extremal_cmd->add_flag("--g6", ext_g6_only, "print only the graph6 encoding");
    extremal_cmd->callback([&] {
        const Graph g = extremal_graph(ext_n);
        const std::string g6 = ext_n <= 62 ? to_graph6(g) : std::string();
        if (ext_g6_only) {
            if (g6.empty()) throw std::invalid_argument("extremal: order > 62 has no graph6 form");
            std::cout << g6 << "\n";
            return;
        }
        std::cout << "n=" << ext_n << " edges=" << g.edge_count();
        if (!g6.empty()) std::cout << " graph6=" << g6;
        std::cout << "\n";
    });

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Candidate radius for every clique size s");
    std::string sweep_alpha, sweep_out, sweep_format = "jsonl";
    int sweep_n = 0;
    sweep_cmd->add_option("--alpha", sweep_alpha, "alpha in [0,1), decimal or p/q")->required();
    sweep_cmd->add_option("--n", sweep_n, "even graph order >= 4")->required();
    sweep_cmd->add_option("--out", sweep_out, "write the table to this file");
    sweep_cmd->add_option("--format", sweep_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    sweep_cmd->callback([&] {
        const double alpha = parse_alpha(sweep_alpha);
        const std::vector<SweepEntry> table = candidate_root_table(sweep_n, alpha);
        std::cout << "n,alpha,s,largest_root,is_argmax\n";
        int best = 1;
        for (const SweepEntry& e : table) {
            std::cout << e.n << ',' << format_real(e.alpha) << ',' << e.s << ','
                      << format_real(e.largest_root) << ',' << (e.is_argmax ? "true" : "false")
                      << "\n";
            if (e.is_argmax) best = e.s;
        }
        std::cout << "argmax: s=" << best << "\n";
        if (!sweep_out.empty()) emit_report(table, parse_format(sweep_format), sweep_out);
    });

    // verify-claims
    auto* claims_cmd = app.add_subcommand("verify-claims", "Numeric ordering checks over a grid");
    std::string claims_grid, claims_out, claims_format = "jsonl", claims_sweep_out;
    claims_cmd->add_option("--grid", claims_grid, "e.g. \"n=10,12;alpha=0,1/2,11/16\" (default: full grid)");
    claims_cmd->add_option("--out", claims_out, "write check rows to this file");
    claims_cmd->add_option("--sweep-out", claims_sweep_out, "write the root table to this file");
    claims_cmd->add_option("--format", claims_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    claims_cmd->callback([&] {
        std::vector<int> orders = default_order_grid();
        std::vector<double> alphas = default_alpha_grid();
        if (!claims_grid.empty()) parse_grid_spec(claims_grid, orders, alphas);
        const SweepReport report = run_grid(orders, alphas);
        long pass = 0, expected_fail = 0;
        for (const OrderingCheck& c : report.checks) {
            if (c.pass) ++pass;
            else if (!c.hypothesis_met) ++expected_fail;
        }
        const long violations = report.violations();
        std::cout << "grid: " << orders.size() << " orders x " << alphas.size() << " alphas\n";
        std::cout << "checks: " << report.checks.size() << " total, " << pass << " pass, "
                  << expected_fail << " expected-fail (hypothesis unmet), " << violations
                  << " violations\n";
        if (!claims_out.empty()) emit_report(report.checks, parse_format(claims_format), claims_out);
        if (!claims_sweep_out.empty())
            emit_report(report.grid, parse_format(claims_format), claims_sweep_out);
        if (violations > 0) exit_code = 2;
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive/corpus soundness check");
    std::string ver_alpha, ver_corpus, ver_out, ver_format = "jsonl";
    int ver_internal = 0;
    double ver_override = 0.0;
    verify_cmd->add_option("--alpha", ver_alpha, "alpha in [0,1), decimal or p/q")->required();
    auto* internal_opt = verify_cmd->add_option("--internal", ver_internal, "all labeled graphs on n <= 7 vertices");
    auto* corpus_opt = verify_cmd->add_option("--corpus", ver_corpus, "file with one graph6 per line");
    internal_opt->excludes(corpus_opt);
    auto* override_opt =
        verify_cmd->add_option("--threshold-override", ver_override,
                               "use this threshold (strict comparison, no excepted graph)");
    verify_cmd->add_option("--out", ver_out, "report path")->required();
    verify_cmd->add_option("--format", ver_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    verify_cmd->callback([&] {
        const double alpha = parse_alpha(ver_alpha);
        VerifyOptions opt;
        opt.record_certificates = true;
        if (override_opt->count() > 0) opt.threshold_override = ver_override;
        VerifyReport report;
        if (internal_opt->count() > 0) {
            report = verify_internal(ver_internal, alpha, opt);
        } else if (corpus_opt->count() > 0) {
            report = verify_corpus(ver_corpus, alpha, opt);
        } else {
            throw std::invalid_argument("verify: pass --internal N or --corpus PATH");
        }
        std::cout << "alpha=" << format_real(alpha);
        if (report.threshold_override)
            std::cout << " threshold_override=" << format_real(*report.threshold_override);
        std::cout << "\n";
        print_counts(report.counts);
        for (const std::string& g6 : report.violating_graphs)
            std::cout << "violation: " << g6 << "\n";
        emit_report(report.certificates, parse_format(ver_format), ver_out);
        if (report.counts.violations > 0) exit_code = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
