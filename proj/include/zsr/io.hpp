#pragma once

// JSON system files and decomposition reports, CSV trajectories, SVG portraits.
// All writers are deterministic: same input, same bytes.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "decomposition.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "games.hpp"
#include "parse.hpp"
#include "polymat.hpp"

namespace zsr {

using Json = nlohmann::ordered_json;

enum class SystemKind { Payoff, Field };

/// A replicator system on disk: either a payoff matrix or a vector field g (x' = diag(x)g).
struct SystemFile {
    std::string name;
    std::string description;
    std::size_t n = 0;
    SystemKind kind = SystemKind::Payoff;
    PolyMatrix payoff;
    PolyVector field;

    /// The replicator increment g: the given field, or Hx − (x⊤Hx)1 for a payoff.
    PolyVector increment() const { return kind == SystemKind::Field ? field : build_h(payoff); }
};

// ---- polynomial containers <-> JSON ---------------------------------------

inline Json to_json(const PolyVector& v) {
    Json arr = Json::array();
    for (const auto& e : v) arr.push_back(to_string(e));
    return arr;
}

inline Json to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

inline std::string entry_text(const Json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(ErrorKind::InvalidFile, where + ": expected a polynomial string");
}

inline Polynomial parse_entry(const Json& j, std::size_t n, const std::string& where) {
    try {
        return parse_polynomial(entry_text(j, where), n);
    } catch (const ParseError& e) {
        throw ParseError(e.kind(), [&] {
            ParseDiagnostic d = e.diagnostic();
            d.message = where + ": " + d.message;
            return d;
        }());
    }
}

} // namespace detail

inline PolyVector vector_from_json(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw Error(ErrorKind::InvalidFile, where + ": expected an array of " + std::to_string(n) + " polynomials");
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < n; ++i)
        entries.push_back(detail::parse_entry(j[i], n, where + "[" + std::to_string(i) + "]"));
    return PolyVector(std::move(entries));
}

inline PolyMatrix matrix_from_json(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw Error(ErrorKind::InvalidFile, where + ": expected " + std::to_string(n) + " rows");
    PolyMatrix m = PolyMatrix::square(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw Error(ErrorKind::InvalidFile, where + "[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = detail::parse_entry(j[i][k], n, where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidFile, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidFile, path + ": " + e.what());
    }
}

// ---- system files ---------------------------------------------------------

/// Schema: {"name", "description", "n", "kind": "payoff"|"field", "payoff": [[...]] | "field": [...]}.
/// When "kind" is absent it is inferred from which of "payoff"/"field" is present.
inline SystemFile system_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidFile, "system file must be a JSON object");
    SystemFile sys;
    sys.name = j.value("name", "");
    sys.description = j.value("description", "");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw Error(ErrorKind::InvalidFile, "'n' must be a positive integer");
    sys.n = j["n"].get<std::size_t>();

    std::string kind = j.value("kind", "");
    if (kind.empty()) kind = j.contains("payoff") ? "payoff" : "field";
    if (kind == "payoff") {
        if (!j.contains("payoff")) throw Error(ErrorKind::InvalidFile, "missing 'payoff'");
        sys.kind = SystemKind::Payoff;
        sys.payoff = matrix_from_json(j["payoff"], sys.n, "payoff");
        sys.field = PolyVector(sys.n);
    } else if (kind == "field") {
        if (!j.contains("field")) throw Error(ErrorKind::InvalidFile, "missing 'field'");
        sys.kind = SystemKind::Field;
        sys.field = vector_from_json(j["field"], sys.n, "field");
        sys.payoff = PolyMatrix::square(sys.n);
    } else {
        throw Error(ErrorKind::InvalidFile, "unknown kind '" + kind + "'");
    }
    return sys;
}

inline SystemFile load_system(const std::string& path) { return system_from_json(read_json_file(path)); }

inline Json to_json(const SystemFile& sys) {
    Json j;
    j["name"] = sys.name;
    j["description"] = sys.description;
    j["n"] = sys.n;
    if (sys.kind == SystemKind::Payoff) {
        j["kind"] = "payoff";
        j["payoff"] = to_json(sys.payoff);
    } else {
        j["kind"] = "field";
        j["field"] = to_json(sys.field);
    }
    return j;
}

// ---- decomposition reports -------------------------------------------------

inline Json to_json(const DecompositionReport& r) {
    Json j;
    j["n"] = r.g.size();
    j["g"] = to_json(r.g);
    j["g_bar"] = to_json(r.g_bar);
    j["s"] = to_string(r.s);
    j["H"] = to_json(r.H.matrix());
    j["h"] = to_json(r.h);
    j["B"] = to_json(r.B.matrix());
    j["g_prime"] = to_json(r.g_prime);
    j["A_prime"] = to_json(r.A_prime.matrix());
    j["A"] = to_json(r.A.matrix());
    j["degree"] = {{"g", r.g.degree()}, {"A", r.A.degree()}};
    j["certificate"] = {{"divisor", to_string(simplex_form(r.g.size()))},
                        {"quotient", to_json(r.certificate.quotient)},
                        {"remainder", to_json(r.certificate.remainder)}};
    return j;
}

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyResult {
    std::vector<VerifyCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

/// Independent re-check of a serialized report: A skew, deg(A) ≤ deg(g) − 1, and
/// g − A·x = (1 − Σx)·quotient exactly with every stored remainder equal to "0".
inline VerifyResult verify_report(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw Error(ErrorKind::InvalidFile, "report must be an object with positive 'n'");
    const std::size_t n = j["n"].get<std::size_t>();
    if (!j.contains("g") || !j.contains("A") || !j.contains("certificate"))
        throw Error(ErrorKind::InvalidFile, "report needs 'g', 'A' and 'certificate'");
    const Json& cert = j["certificate"];
    if (!cert.is_object() || !cert.contains("quotient") || !cert.contains("remainder"))
        throw Error(ErrorKind::InvalidFile, "certificate needs 'quotient' and 'remainder'");

    const PolyVector g = vector_from_json(j["g"], n, "g");
    const PolyMatrix a = matrix_from_json(j["A"], n, "A");
    const PolyVector q = vector_from_json(cert["quotient"], n, "certificate.quotient");
    const PolyVector rem = vector_from_json(cert["remainder"], n, "certificate.remainder");

    VerifyResult res;
    const bool skew = skew_check(a);
    res.checks.push_back({"skew_symmetric", skew, skew ? "A^T = -A" : "A + A^T is nonzero"});

    const bool deg_ok = degree_at_most(a, g.degree() - 1);
    res.checks.push_back({"degree_bound", deg_ok,
                          "deg(A) = " + std::to_string(a.degree()) + ", deg(g) = " + std::to_string(g.degree())});

    res.checks.push_back({"remainder_zero", rem.is_zero(), rem.is_zero() ? "all remainders are 0" : "nonzero remainder recorded"});

    PolyVector residual = g - apply_to_x(a);
    const Polynomial form = simplex_form(n);
    for (std::size_t i = 0; i < n; ++i) residual[i] -= form * q[i];
    residual -= rem;
    res.checks.push_back({"certificate_identity", residual.is_zero(),
                          residual.is_zero() ? "g - A x == (1 - sum x) q exactly"
                                             : "identity fails in entry with residual " + [&] {
                                                   for (const auto& e : residual)
                                                       if (!e.is_zero()) return to_string(e);
                                                   return std::string();
                                               }()});
    const bool zero_sum = dot_x(apply_to_x(a)).is_zero();
    res.checks.push_back({"zero_sum", zero_sum, zero_sum ? "x^T A x == 0" : "x^T A x is nonzero"});
    return res;
}

// ---- numeric output ---------------------------------------------------------

inline std::string format_double(double v, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

/// Header `t,x1,...,xn,sum_err`, one row per recorded state.
inline void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
    out << "t";
    for (std::size_t i = 0; i < t.n; ++i) out << ",x" << (i + 1);
    out << ",sum_err\n";
    for (std::size_t k = 0; k < t.length(); ++k) {
        out << format_double(t.time(k), 12);
        const double* x = t.state(k);
        for (std::size_t i = 0; i < t.n; ++i) out << ',' << format_double(x[i]);
        out << ',' << format_double(t.sum_err[k]) << '\n';
    }
}

/// Indices of a trajectory kept for plotting: at most `max_points`, always the last.
inline std::vector<std::size_t> plot_samples(std::size_t length, std::size_t max_points = 400) {
    std::vector<std::size_t> idx;
    if (length == 0) return idx;
    const std::size_t stride = std::max<std::size_t>(1, (length + max_points - 1) / max_points);
    for (std::size_t k = 0; k < length; k += stride) idx.push_back(k);
    if (idx.back() != length - 1) idx.push_back(length - 1);
    return idx;
}

/// Header `traj,t,x1,x2,x3,px,py`; rows subsampled as in the SVG.
inline void write_portrait_csv(std::ostream& out, const PhasePortrait& pp) {
    out << "traj,t,x1,x2,x3,px,py\n";
    for (std::size_t k = 0; k < pp.trajectories.size(); ++k) {
        const Trajectory& t = pp.trajectories[k];
        for (std::size_t s : plot_samples(t.length())) {
            const double* x = t.state(s);
            out << k << ',' << format_double(t.time(s), 12) << ',' << format_double(x[0]) << ','
                << format_double(x[1]) << ',' << format_double(x[2]) << ',' << format_double(pp.projected[k][s].x)
                << ',' << format_double(pp.projected[k][s].y) << '\n';
        }
    }
}

struct SvgStyle {
    double size = 600.0;           ///< canvas width in px
    double margin = 30.0;
    double arrow_spacing = 0.15;   ///< arc length between arrowheads, in triangle units
    double arrow_length = 0.018;
};

/// Triangle outline, one polyline per trajectory, arrowheads every `arrow_spacing`
/// of projected arc length.
inline void write_portrait_svg(std::ostream& out, const PhasePortrait& pp, const std::string& title = "",
                               const SvgStyle& style = {}) {
    const double scale = style.size - 2 * style.margin;
    const double tri_h = 0.5 * std::sqrt(3.0);
    const double height = tri_h * scale + 2 * style.margin;
    auto px = [&](const PlanarPoint& p) { return format_fixed(style.margin + p.x * scale, 3); };
    auto py = [&](const PlanarPoint& p) { return format_fixed(style.margin + (tri_h - p.y) * scale, 3); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(style.size, 0) << "\" height=\""
        << format_fixed(height, 0) << "\" viewBox=\"0 0 " << format_fixed(style.size, 0) << ' '
        << format_fixed(height, 0) << "\">\n";
    if (!title.empty()) out << "<title>" << title << "</title>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const PlanarPoint v1{0, 0}, v2{1, 0}, v3{0.5, tri_h};
    out << "<polygon points=\"" << px(v1) << ',' << py(v1) << ' ' << px(v2) << ',' << py(v2) << ' ' << px(v3) << ','
        << py(v3) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << px(v1) << "\" y=\"" << format_fixed(style.margin + tri_h * scale + 18, 3)
        << "\" font-size=\"14\" text-anchor=\"middle\">x1</text>\n";
    out << "<text x=\"" << px(v2) << "\" y=\"" << format_fixed(style.margin + tri_h * scale + 18, 3)
        << "\" font-size=\"14\" text-anchor=\"middle\">x2</text>\n";
    out << "<text x=\"" << px(v3) << "\" y=\"" << format_fixed(style.margin - 8, 3)
        << "\" font-size=\"14\" text-anchor=\"middle\">x3</text>\n";

    for (std::size_t k = 0; k < pp.projected.size(); ++k) {
        const auto& path = pp.projected[k];
        const auto samples = plot_samples(path.size());
        out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
        for (std::size_t s = 0; s < samples.size(); ++s) {
            if (s) out << ' ';
            out << px(path[samples[s]]) << ',' << py(path[samples[s]]);
        }
        out << "\"/>\n";

        double travelled = 0.0, next_mark = style.arrow_spacing * 0.5;
        for (std::size_t s = 1; s < path.size(); ++s) {
            const double dx = path[s].x - path[s - 1].x, dy = path[s].y - path[s - 1].y;
            const double seg = std::hypot(dx, dy);
            if (seg == 0.0) continue;
            travelled += seg;
            if (travelled < next_mark) continue;
            next_mark += style.arrow_spacing;
            const double ux = dx / seg, uy = dy / seg, L = style.arrow_length;
            const PlanarPoint tip = path[s];
            const PlanarPoint left{tip.x - L * ux - 0.5 * L * uy, tip.y - L * uy + 0.5 * L * ux};
            const PlanarPoint right{tip.x - L * ux + 0.5 * L * uy, tip.y - L * uy - 0.5 * L * ux};
            out << "<polygon fill=\"steelblue\" points=\"" << px(tip) << ',' << py(tip) << ' ' << px(left) << ','
                << py(left) << ' ' << px(right) << ',' << py(right) << "\"/>\n";
        }
    }
    out << "</svg>\n";
}

} // namespace zsr
