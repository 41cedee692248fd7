#pragma once

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhomatch/certify.hpp"
#include "rhomatch/format.hpp"
#include "rhomatch/sweeps.hpp"

namespace rhomatch {

enum class ReportFormat { jsonl, csv };

inline ReportFormat parse_format(std::string_view text) {
    if (text == "jsonl") return ReportFormat::jsonl;
    if (text == "csv") return ReportFormat::csv;
    throw std::invalid_argument("format: expected 'jsonl' or 'csv', got '" + std::string(text) + "'");
}

namespace detail {

inline std::ofstream open_report(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("report: cannot open " + path + " for writing");
    return out;
}

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string json_number(double x) {
    if (!std::isfinite(x)) return "null";
    return format_real(x);
}

}  // namespace detail

// graph6,alpha,rho,threshold,verdict,oracle_pm — one certificate per row.
inline void emit_report(const std::vector<Certificate>& certs, ReportFormat format,
                        const std::string& path) {
    std::ofstream out = detail::open_report(path);
    if (format == ReportFormat::csv) out << "graph6,alpha,rho,threshold,verdict,oracle_pm\n";
    for (const Certificate& c : certs) {
        if (format == ReportFormat::csv) {
            out << detail::csv_field(c.graph6) << ',' << format_real(c.alpha) << ','
                << format_real(c.rho) << ',' << format_real(c.threshold) << ',' << to_string(c.verdict)
                << ',' << (c.oracle_pm ? (*c.oracle_pm ? "true" : "false") : "") << '\n';
        } else {
            out << "{\"graph6\":\"" << json_escape(c.graph6)
                << "\",\"alpha\":" << detail::json_number(c.alpha)
                << ",\"rho\":" << detail::json_number(c.rho)
                << ",\"threshold\":" << detail::json_number(c.threshold) << ",\"verdict\":\""
                << to_string(c.verdict) << "\",\"oracle_pm\":"
                << (c.oracle_pm ? (*c.oracle_pm ? "true" : "false") : "null") << "}\n";
        }
    }
    if (!out) throw std::runtime_error("report: write failed for " + path);
}

// n,alpha,s,largest_root,is_argmax — the candidate radius sweep.
inline void emit_report(const std::vector<SweepEntry>& rows, ReportFormat format,
                        const std::string& path) {
    std::ofstream out = detail::open_report(path);
    if (format == ReportFormat::csv) out << "n,alpha,s,largest_root,is_argmax\n";
    for (const SweepEntry& e : rows) {
        if (format == ReportFormat::csv) {
            out << e.n << ',' << format_real(e.alpha) << ',' << e.s << ','
                << format_real(e.largest_root) << ',' << (e.is_argmax ? "true" : "false") << '\n';
        } else {
            out << "{\"n\":" << e.n << ",\"alpha\":" << detail::json_number(e.alpha)
                << ",\"s\":" << e.s << ",\"largest_root\":" << detail::json_number(e.largest_root)
                << ",\"is_argmax\":" << (e.is_argmax ? "true" : "false") << "}\n";
        }
    }
    if (!out) throw std::runtime_error("report: write failed for " + path);
}

// rule,n,alpha,s,q,detail,lhs,rhs,margin,expect_equal,hypothesis_met,pass.
inline void emit_report(const std::vector<OrderingCheck>& rows, ReportFormat format,
                        const std::string& path) {
    std::ofstream out = detail::open_report(path);
    if (format == ReportFormat::csv)
        out << "rule,n,alpha,s,q,detail,lhs,rhs,margin,expect_equal,hypothesis_met,pass\n";
    for (const OrderingCheck& c : rows) {
        if (format == ReportFormat::csv) {
            out << c.rule << ',' << c.n << ',' << format_real(c.alpha) << ',' << c.s << ',' << c.q
                << ',' << detail::csv_field(c.detail) << ',' << format_real(c.lhs) << ','
                << format_real(c.rhs) << ',' << format_real(c.margin) << ','
                << (c.expect_equal ? "true" : "false") << ',' << (c.hypothesis_met ? "true" : "false")
                << ',' << (c.pass ? "true" : "false") << '\n';
        } else {
            out << "{\"rule\":\"" << c.rule << "\",\"n\":" << c.n
                << ",\"alpha\":" << detail::json_number(c.alpha) << ",\"s\":" << c.s
                << ",\"q\":" << c.q << ",\"detail\":\"" << json_escape(c.detail)
                << "\",\"lhs\":" << detail::json_number(c.lhs)
                << ",\"rhs\":" << detail::json_number(c.rhs)
                << ",\"margin\":" << detail::json_number(c.margin)
                << ",\"expect_equal\":" << (c.expect_equal ? "true" : "false")
                << ",\"hypothesis_met\":" << (c.hypothesis_met ? "true" : "false")
                << ",\"pass\":" << (c.pass ? "true" : "false") << "}\n";
        }
    }
    if (!out) throw std::runtime_error("report: write failed for " + path);
}

}  // namespace rhomatch
