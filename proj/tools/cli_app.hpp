#pragma once

// Command-line front end. Exit codes:
//   0 success / affirmative answer
//   1 usage error
//   2 parse or validation error
//   3 negative answer (infeasible, not equivalent, hypothesis violated)
//   4 internal invariant breach

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <zsr/zsr.hpp>

namespace zsr::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalid = 2, kNegative = 3, kInternal = 4 };

namespace detail {

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidFile, "cannot write '" + path + "'");
    f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::vector<double> parse_point(const std::string& text) {
    std::vector<double> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.find('/') != std::string::npos) {
            pt.push_back(parse_rational(item).get_d());
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (...) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error(ErrorKind::InvalidArgument, "bad coordinate '" + item + "'");
        pt.push_back(v);
    }
    return pt;
}

inline ReplicatorSystem system_for(const SystemFile& sys) {
    if (sys.kind == SystemKind::Payoff) return make_system(PayoffMatrix(sys.payoff));
    return make_system(decompose(sys.field).A);
}

inline PayoffMatrix constant_payoff(const SystemFile& sys) {
    if (sys.kind != SystemKind::Payoff) throw Error(ErrorKind::InvalidFile, "expected a payoff system file");
    PayoffMatrix h(sys.payoff);
    if (!h.is_constant()) throw Error(ErrorKind::NotConstant, "payoff matrix must be constant");
    return h;
}

inline std::string replace_extension(const std::string& path, const std::string& ext) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
    return path.substr(0, dot) + ext;
}

} // namespace detail

/// Runs the CLI with the given arguments (argv[0] included); output goes to out/err.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero-sum representation of polynomial replicator dynamics", "zsr"};
    app.require_subcommand(1);

    std::string system_path, output_path, report_path, h1_path, h2_path, csv_path, x0_text;
    int basis_n = 0, basis_m = 0;
    double horizon = 10.0, dt = 1e-3;
    std::size_t density = 6;
    bool no_renormalize = false;

    auto* cmd_decompose = app.add_subcommand("decompose", "Build a skew-symmetric A(x) with g = A(x)x and certify it");
    cmd_decompose->add_option("system", system_path, "System file (payoff or field)")->required();
    cmd_decompose->add_option("-o,--output", output_path, "Write the report here instead of stdout");

    auto* cmd_verify = app.add_subcommand("verify", "Re-check a decomposition report");
    cmd_verify->add_option("report", report_path, "Report file")->required();

    auto* cmd_equiv = app.add_subcommand("equiv", "Payoff equivalence tools");
    cmd_equiv->require_subcommand(1);
    auto* cmd_skew = cmd_equiv->add_subcommand("skew", "Affine skew-symmetric equivalent of a constant payoff");
    cmd_skew->add_option("payoff", system_path, "Constant payoff system file")->required();
    cmd_skew->add_option("-o,--output", output_path, "Output file");
    auto* cmd_null = cmd_equiv->add_subcommand("null", "Do two constant payoffs differ by 1v^T?");
    cmd_null->add_option("first", h1_path, "First payoff file")->required();
    cmd_null->add_option("second", h2_path, "Second payoff file")->required();

    auto* cmd_repr = app.add_subcommand("representable", "Is g induced by a constant payoff on the simplex?");
    cmd_repr->add_option("field", system_path, "System file")->required();
    cmd_repr->add_option("-o,--output", output_path, "Output file");

    auto* cmd_basis = app.add_subcommand("basis", "Spanning set and exact dimension of the x^T g == 0 fields");
    cmd_basis->add_option("n", basis_n, "Number of strategies")->required();
    cmd_basis->add_option("m", basis_m, "Homogeneous degree of g")->required();
    cmd_basis->add_option("-o,--output", output_path, "Output file");

    auto* cmd_sim = app.add_subcommand("simulate", "Integrate the replicator dynamics, CSV output");
    cmd_sim->add_option("system", system_path, "System file")->required();
    cmd_sim->add_option("--x0", x0_text, "Initial point, comma separated (decimals or p/q)")->required();
    cmd_sim->add_option("--T", horizon, "Time horizon");
    cmd_sim->add_option("--dt", dt, "Step size");
    cmd_sim->add_flag("--no-renormalize", no_renormalize, "Do not project back onto sum(x) = 1 after each step");
    cmd_sim->add_option("-o,--output", output_path, "Output CSV");

    auto* cmd_portrait = app.add_subcommand("portrait", "Phase portrait on the 2-simplex (SVG + CSV)");
    cmd_portrait->add_option("system", system_path, "System file (n = 3)")->required();
    cmd_portrait->add_option("--density", density, "Barycentric grid density k");
    cmd_portrait->add_option("--T", horizon, "Time horizon");
    cmd_portrait->add_option("--dt", dt, "Step size");
    cmd_portrait->add_flag("--no-renormalize", no_renormalize, "Do not renormalize");
    cmd_portrait->add_option("-o,--output", output_path, "Output SVG")->required();
    cmd_portrait->add_option("--csv", csv_path, "Output CSV (default: SVG path with .csv)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (*cmd_decompose) {
            const SystemFile sys = load_system(system_path);
            const DecompositionReport rep = decompose(sys.increment());
            detail::emit(detail::dump(to_json(rep)), output_path, out);
            return kOk;
        }
        if (*cmd_verify) {
            const VerifyResult res = verify_report(read_json_file(report_path));
            for (const auto& c : res.checks)
                out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            out << (res.ok() ? "report verified\n" : "report REJECTED\n");
            return res.ok() ? kOk : kNegative;
        }
        if (*cmd_skew) {
            const SystemFile sys = load_system(system_path);
            const SkewPolyMatrix hp = affine_skew_equivalent(detail::constant_payoff(sys));
            SystemFile result;
            result.name = sys.name.empty() ? "skew equivalent" : sys.name + " (skew equivalent)";
            result.description = "affine skew-symmetric payoff inducing the same replicator dynamics";
            result.n = sys.n;
            result.kind = SystemKind::Payoff;
            result.payoff = hp.matrix();
            detail::emit(detail::dump(to_json(result)), output_path, out);
            return kOk;
        }
        if (*cmd_null) {
            const PayoffMatrix a = detail::constant_payoff(load_system(h1_path));
            const PayoffMatrix b = detail::constant_payoff(load_system(h2_path));
            const bool eq = nullspace_equivalent(a, b);
            Json j;
            j["equivalent"] = eq;
            if (eq) {
                Json v = Json::array();
                for (std::size_t c = 0; c < a.size(); ++c) v.push_back(to_string(Rational(a.value(0, c) - b.value(0, c))));
                j["v"] = v;
            }
            out << detail::dump(j);
            return eq ? kOk : kNegative;
        }
        if (*cmd_repr) {
            const SystemFile sys = load_system(system_path);
            const FeasibilityVerdict verdict = constant_representability(sys.increment());
            Json j;
            j["feasible"] = verdict.feasible;
            if (verdict.feasible) {
                j["witness"] = to_json(verdict.witness->matrix());
            } else {
                Json combo = Json::array();
                for (const auto& [eq, lambda] : verdict.obstruction->combination)
                    combo.push_back({{"entry", eq.entry + 1},
                                     {"monomial", to_string(Polynomial::monomial(eq.monomial))},
                                     {"multiplier", to_string(lambda)}});
                j["obstruction"] = {{"combination", combo},
                                    {"value", to_string(verdict.obstruction->value)},
                                    {"text", verdict.obstruction->describe()}};
            }
            detail::emit(detail::dump(j), output_path, out);
            return verdict.feasible ? kOk : kNegative;
        }
        if (*cmd_basis) {
            if (basis_n < 2 || basis_m < 1) throw Error(ErrorKind::InvalidDimension, "basis needs n >= 2 and m >= 1");
            const auto n = static_cast<std::size_t>(basis_n);
            const auto elements = spanning_set(n, basis_m);
            Json j;
            j["n"] = n;
            j["m"] = basis_m;
            Json items = Json::array();
            std::vector<PolyVector> vectors, adjacent;
            for (const auto& e : elements) {
                Json item;
                item["i"] = e.i + 1;
                item["j"] = e.j + 1;
                item["alpha"] = e.alpha.exponents();
                item["vector"] = to_json(e.vector());
                items.push_back(std::move(item));
                vectors.push_back(e.vector());
                if (e.j == e.i + 1) adjacent.push_back(e.vector());
            }
            const std::size_t dim = kernel_dimension(n, basis_m);
            const std::size_t adj_rank = coefficient_rank(adjacent);
            j["elements"] = std::move(items);
            j["count"] = elements.size();
            j["spanning_rank"] = coefficient_rank(vectors);
            j["exact_dimension"] = dim;
            j["adjacent_pair_count"] = adjacent.size();
            j["adjacent_pair_rank"] = adj_rank;
            j["adjacent_pairs_span"] = adj_rank == dim;
            detail::emit(detail::dump(j), output_path, out);
            return kOk;
        }
        if (*cmd_sim) {
            const SystemFile sys = load_system(system_path);
            const ReplicatorSystem rs = detail::system_for(sys);
            const Trajectory t = integrate(rs, detail::parse_point(x0_text), horizon, dt, {!no_renormalize});
            std::ostringstream csv;
            write_trajectory_csv(csv, t);
            detail::emit(csv.str(), output_path, out);
            return kOk;
        }
        if (*cmd_portrait) {
            const SystemFile sys = load_system(system_path);
            const ReplicatorSystem rs = detail::system_for(sys);
            const PhasePortrait pp = phase_portrait(rs, density, horizon, dt, {!no_renormalize});
            std::ostringstream svg, csv;
            write_portrait_svg(svg, pp, sys.name);
            write_portrait_csv(csv, pp);
            detail::emit(svg.str(), output_path, out);
            detail::emit(csv.str(), csv_path.empty() ? detail::replace_extension(output_path, ".csv") : csv_path, out);
            return kOk;
        }
    } catch (const HypothesisViolation& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return kNegative;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.is_internal() ? kInternal : kInvalid;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}

} // namespace zsr::cli
