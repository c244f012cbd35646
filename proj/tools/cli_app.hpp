// cli_app.hpp
// Command-line front end. Exit codes: 0 success / ISO, 1 NON-ISO or a
// verification mismatch, 2 usage or input error.

#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclconf/cyclconf.hpp"

namespace cyclconf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

struct VRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

/// "N" or "A..B".
inline VRange parse_v_range(const std::string& text) {
    auto to_u64 = [](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad --v value '" + s + "'");
        return std::stoull(s);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = to_u64(text);
        return {v, v};
    }
    VRange r{to_u64(text.substr(0, dots)), to_u64(text.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty --v range");
    return r;
}

/// Comma-separated residues, e.g. "0,1,3".
inline std::vector<Residue> parse_residues(const std::string& text) {
    std::vector<Residue> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad residue list '" + text + "'");
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw std::invalid_argument("empty residue list");
    return out;
}

/// v=.. k=.. base_line=.. connected=.. canonical=.. orbit_size=..
inline std::string to_record(const BaseLine& b) {
    std::ostringstream os;
    os << "v=" << b.v() << " k=" << b.k() << " base_line=" << format_residues(b.elements())
       << " connected=" << (is_connected(b) ? "true" : "false")
       << " canonical=" << format_residues(canonical_form(b).elements())
       << " orbit_size=" << affine_orbit(b).size();
    return os.str();
}

struct Options {
    std::string v;
    std::size_t k = 3;
    std::string mode = "formula";
    std::string method = "auto";
    std::string format;
    std::string s, s1, s2;
    std::optional<std::uint64_t> cap;
    bool connected = false;
    bool reps = false;
    bool full = false;
    bool oracle = false;
};

inline std::uint64_t effective_cap(const Options& o) { return o.cap.value_or(default_cap(o.k)); }

inline BaseLine base_line_arg(const std::string& v_text, const std::string& s_text) {
    const auto r = parse_v_range(v_text);
    if (r.lo != r.hi) throw std::invalid_argument("a single --v is required here");
    const auto residues = parse_residues(s_text);
    for (auto x : residues)
        if (x >= r.lo) throw std::invalid_argument("residue " + std::to_string(x) + " is not reduced mod v");
    return BaseLine(r.lo, residues);
}

inline int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
    const auto r = parse_v_range(o.v);
    const bool needs_formula = o.mode == "formula" || o.mode == "sum" || o.mode == "all" || o.mode == "total";
    if (o.mode != "formula" && o.mode != "sum" && o.mode != "orbits" && o.mode != "all" && o.mode != "total") {
        err << "error: unknown --mode '" << o.mode << "'\n";
        return kExitUsage;
    }
    if (needs_formula && o.k != 3) {
        err << "error: no closed formula for k=" << o.k << "; use --mode orbits\n";
        return kExitUsage;
    }
    int status = kExitOk;
    for (auto v = r.lo; v <= r.hi; ++v) {
        const std::string prefix = r.lo == r.hi ? "" : "v=" + std::to_string(v) + " ";
        if (o.mode == "formula") {
            out << prefix << count_formula(v) << '\n';
        } else if (o.mode == "sum") {
            out << prefix << count_sum(v) << '\n';
        } else if (o.mode == "orbits") {
            out << prefix << count_orbits(v, o.k, effective_cap(o)) << '\n';
        } else if (o.mode == "total") {
            out << prefix << "total " << count_all_formula(v) << " (experimental: includes disconnected)\n";
        } else {
            const auto f = count_formula(v);
            const auto s = count_sum(v);
            const auto b = count_orbits(v, o.k, effective_cap(o));
            const bool agree = f == s && s == b;
            out << prefix << "formula " << f << '\n'
                << prefix << "sum " << s << '\n'
                << prefix << "orbits " << b << '\n'
                << prefix << (agree ? "AGREE" : "DISAGREE") << '\n';
            if (!agree) status = kExitNegative;
        }
    }
    return status;
}

inline int cmd_enumerate(const Options& o, std::ostream& out, std::ostream&) {
    const auto r = parse_v_range(o.v);
    const std::string format = o.format.empty() ? "list" : o.format;
    if (format != "list" && format != "record") throw std::invalid_argument("--format must be list or record");
    for (auto v = r.lo; v <= r.hi; ++v) {
        const Modulus m(v);
        std::vector<BaseLine> found;
        if (o.reps) {
            found = orbit_representatives(m, o.k, o.connected, effective_cap(o));
        } else if (o.full) {
            found = all_base_lines(m, o.k, o.connected, effective_cap(o));
        } else {
            found = enumerate_base_lines(m, o.k, o.connected, effective_cap(o));
        }
        for (const auto& b : found) {
            if (format == "record") {
                out << to_record(b) << '\n';
            } else {
                out << (r.lo == r.hi ? "" : "v=" + std::to_string(v) + " ") << format_residues(b.elements()) << '\n';
            }
        }
    }
    return kExitOk;
}

inline int cmd_iso(const Options& o, std::ostream& out, std::ostream& err) {
    const auto method = parse_iso_method(o.method);
    if (!method) {
        err << "error: unknown --method '" << o.method << "'\n";
        return kExitUsage;
    }
    const CyclicConfiguration c1(base_line_arg(o.v, o.s1));
    const CyclicConfiguration c2(base_line_arg(o.v, o.s2));
    const auto decision = isomorphic(c1, c2, *method, o.cap.value_or(kEnumerationLimit));
    if (decision.witness && !verify_witness(c1, c2, *decision.witness)) {
        err << "internal error: witness failed replay\n";
        return kExitUsage;
    }
    out << (decision.witness ? "ISO" : "NON-ISO") << " method=" << to_string(decision.method);
    if (decision.componentwise) out << " componentwise";
    if (decision.witness) out << ' ' << *decision.witness;
    out << '\n';
    return decision.witness ? kExitOk : kExitNegative;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    const auto r = parse_v_range(o.v);
    const auto rows = sweep(r.lo, r.hi, o.k, effective_cap(o), o.oracle);
    std::size_t mismatches = 0;
    auto opt = [](const auto& x) { return x ? std::to_string(*x) : std::string("-"); };
    auto flag = [](const std::optional<bool>& x) { return x ? (*x ? "ok" : "FAIL") : "-"; };
    for (const auto& row : rows) {
        if (!row.ok) ++mismatches;
        out << "v=" << row.v << " formula=" << opt(row.formula) << " sum=" << opt(row.sum)
            << " orbits=" << opt(row.orbits) << " burnside=" << flag(row.burnside_ok)
            << " per_unit=" << flag(row.per_unit_ok);
        if (row.oracle) {
            out << " oracle=" << (row.oracle->mismatches == 0 ? "ok" : "FAIL") << " classes=" << row.oracle->classes;
        }
        out << (row.ok ? "" : " MISMATCH") << '\n';
        if (row.oracle)
            for (const auto& d : row.oracle->details) out << "  " << d << '\n';
    }
    out << "verify " << (mismatches == 0 ? "PASS" : "FAIL") << " k=" << o.k << " v=" << r.lo << ".." << r.hi
        << " checked=" << rows.size() << " mismatches=" << mismatches << '\n';
    return mismatches == 0 ? kExitOk : kExitNegative;
}

inline int cmd_export(const Options& o, std::ostream& out, std::ostream&) {
    const CyclicConfiguration c(base_line_arg(o.v, o.s));
    const std::string format = o.format.empty() ? "record" : o.format;
    if (format == "levi") {
        out << to_levi_text(levi_graph(c));
    } else if (format == "incidence") {
        out << to_incidence_text(incidence_matrix(c));
    } else if (format == "record") {
        out << to_record(c.base()) << '\n';
    } else {
        throw std::invalid_argument("--format must be levi, incidence or record");
    }
    return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic (v_k) configurations: counting, enumeration, isomorphism, export"};
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count", "Count connected cyclic configurations");
    count->add_option("--v", o.v, "v or A..B")->required();
    count->add_option("--k", o.k, "line size");
    count->add_option("--mode", o.mode, "formula|sum|orbits|all|total");
    count->add_option("--cap", o.cap, "enumeration cap on v");

    auto* enumerate = app.add_subcommand("enumerate", "List base lines containing 0, or orbit representatives");
    enumerate->add_option("--v", o.v, "v or A..B")->required();
    enumerate->add_option("--k", o.k, "line size");
    enumerate->add_flag("--connected", o.connected, "connected configurations only");
    enumerate->add_flag("--reps", o.reps, "canonical AGL_1(v) orbit representatives only");
    enumerate->add_flag("--full", o.full, "every translate, not only sets containing 0");
    enumerate->add_option("--format", o.format, "list|record");
    enumerate->add_option("--cap", o.cap, "enumeration cap on v");

    auto* iso = app.add_subcommand("iso", "Decide isomorphism of con(Z_v,S1) and con(Z_v,S2)");
    iso->add_option("--v", o.v, "v")->required();
    iso->add_option("--s1", o.s1, "first base line, e.g. 0,1,3")->required();
    iso->add_option("--s2", o.s2, "second base line")->required();
    iso->add_option("--method", o.method, "auto|multiplier|exact|solving-set");
    iso->add_option("--cap", o.cap, "cap on v for the exact search");

    auto* verify = app.add_subcommand("verify", "Cross-check counting routes and isomorphism methods");
    verify->add_option("--v", o.v, "v or A..B")->required();
    verify->add_option("--k", o.k, "line size");
    verify->add_flag("--oracle", o.oracle, "also compare multiplier classes with exact isomorphism");
    verify->add_option("--cap", o.cap, "enumeration cap on v");

    auto* exp = app.add_subcommand("export", "Write a configuration as levi, incidence or record text");
    exp->add_option("--v", o.v, "v")->required();
    exp->add_option("--s", o.s, "base line")->required();
    exp->add_option("--format", o.format, "levi|incidence|record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(o, out, err);
        if (enumerate->parsed()) return cmd_enumerate(o, out, err);
        if (iso->parsed()) return cmd_iso(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (exp->parsed()) return cmd_export(o, out, err);
    } catch (const limit_exceeded& e) {
        err << "error: " << e.what() << " (raise --cap)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cyclconf::cli
