#pragma once

// Replicator dynamics x' = diag(x)(H(x)x − (x⊤H(x)x)1) on the simplex.
//
// The field is built symbolically (exact), then compiled once into a flat
// double-precision coefficient table for time stepping with fixed-step RK4.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "games.hpp"
#include "parallel.hpp"
#include "polymat.hpp"

namespace zsr {

/// Flat table of a polynomial vector field for fast double evaluation.
class CompiledField {
public:
    CompiledField() = default;
    explicit CompiledField(const PolyVector& f) : n_(f.size()) {
        offsets_.push_back(0);
        for (const auto& entry : f) {
            for (const auto& [alpha, c] : entry.terms()) {
                coefs_.push_back(c.get_d());
                for (std::size_t i = 0; i < n_; ++i) {
                    exps_.push_back(alpha[i]);
                    max_exp_ = std::max<std::uint32_t>(max_exp_, alpha[i]);
                }
            }
            offsets_.push_back(coefs_.size());
        }
        powers_.resize(n_ * (max_exp_ + 1));
    }

    std::size_t size() const noexcept { return n_; }

    /// out = f(x). Not thread-safe on a shared instance (uses a scratch buffer); copy per thread.
    void eval(const double* x, double* out) const {
        const std::size_t stride = max_exp_ + 1;
        for (std::size_t i = 0; i < n_; ++i) {
            double* row = &powers_[i * stride];
            row[0] = 1.0;
            for (std::size_t k = 1; k < stride; ++k) row[k] = row[k - 1] * x[i];
        }
        for (std::size_t e = 0; e < n_; ++e) {
            double acc = 0.0;
            for (std::size_t t = offsets_[e]; t < offsets_[e + 1]; ++t) {
                double m = coefs_[t];
                const std::uint32_t* a = &exps_[t * n_];
                for (std::size_t i = 0; i < n_; ++i)
                    if (a[i] != 0) m *= powers_[i * stride + a[i]];
                acc += m;
            }
            out[e] = acc;
        }
    }

private:
    std::size_t n_ = 0;
    std::uint32_t max_exp_ = 0;
    std::vector<double> coefs_;
    std::vector<std::uint32_t> exps_;
    std::vector<std::size_t> offsets_;
    mutable std::vector<double> powers_;
};

class ReplicatorSystem {
public:
    using Payoff = std::variant<PayoffMatrix, SkewPolyMatrix>;

    ReplicatorSystem(Payoff payoff, PolyVector field)
        : payoff_(std::move(payoff)), field_(std::move(field)), compiled_(field_) {}

    std::size_t size() const noexcept { return field_.size(); }
    const Payoff& payoff() const noexcept { return payoff_; }
    bool is_zero_sum() const noexcept { return std::holds_alternative<SkewPolyMatrix>(payoff_); }
    /// The exact symbolic field f(x).
    const PolyVector& field() const noexcept { return field_; }
    const CompiledField& compiled() const noexcept { return compiled_; }

    const PolyMatrix& payoff_matrix() const {
        return is_zero_sum() ? std::get<SkewPolyMatrix>(payoff_).matrix() : std::get<PayoffMatrix>(payoff_).matrix();
    }

private:
    Payoff payoff_;
    PolyVector field_;
    CompiledField compiled_;
};

inline ReplicatorSystem make_system(const PayoffMatrix& payoff) { return {payoff, phi(payoff)}; }

/// Zero-sum form: x⊤A(x)x ≡ 0, so the field is diag(x)A(x)x.
inline ReplicatorSystem make_system(const SkewPolyMatrix& a) {
    PolyVector f = apply_to_x(a.matrix());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = f[i].shifted(MultiIndex::unit(f.size(), i));
    return {a, std::move(f)};
}

struct IntegrateOptions {
    bool renormalize = true; ///< divide by Σx after every step
};

struct Trajectory {
    double dt = 0.0;
    double horizon = 0.0;
    std::size_t n = 0;
    std::vector<double> states;  ///< (steps + 1) × n, row-major
    std::vector<double> sum_err; ///< |Σx − 1| per recorded state
    std::vector<double> min_x;   ///< min_i x_i per recorded state

    std::size_t length() const { return n == 0 ? 0 : states.size() / n; }
    double time(std::size_t k) const { return static_cast<double>(k) * dt; }
    const double* state(std::size_t k) const { return states.data() + k * n; }

    double max_sum_error() const {
        return sum_err.empty() ? 0.0 : *std::max_element(sum_err.begin(), sum_err.end());
    }
    double min_coordinate() const {
        return min_x.empty() ? 0.0 : *std::min_element(min_x.begin(), min_x.end());
    }
};

inline constexpr double kSimplexTolerance = 1e-12;

/// Number of fixed steps covering [0, T].
inline std::size_t step_count(double horizon, double dt) {
    return static_cast<std::size_t>(std::floor(horizon / dt + 1e-9));
}

/// Classical RK4 with uniform step dt up to step_count(T, dt)·dt.
inline Trajectory integrate(const ReplicatorSystem& sys, const std::vector<double>& x0, double horizon, double dt,
                            IntegrateOptions opts = {}) {
    const std::size_t n = sys.size();
    if (!(dt > 0.0)) throw Error(ErrorKind::StepSizeNonpositive, "dt must be positive");
    if (!(horizon >= 0.0)) throw Error(ErrorKind::InvalidArgument, "horizon must be non-negative");
    if (x0.size() != n) throw Error(ErrorKind::InvalidInitialCondition, "initial condition has wrong length");
    double total = 0.0;
    for (double v : x0) {
        if (!std::isfinite(v) || v < -kSimplexTolerance)
            throw Error(ErrorKind::InvalidInitialCondition, "initial condition leaves the simplex");
        total += v;
    }
    if (std::abs(total - 1.0) > kSimplexTolerance)
        throw Error(ErrorKind::InvalidInitialCondition, "initial condition does not sum to 1");

    const std::size_t steps = step_count(horizon, dt);
    Trajectory traj;
    traj.dt = dt;
    traj.horizon = horizon;
    traj.n = n;
    traj.states.reserve((steps + 1) * n);
    traj.sum_err.reserve(steps + 1);
    traj.min_x.reserve(steps + 1);

    CompiledField field = sys.compiled();
    std::vector<double> x = x0, k1(n), k2(n), k3(n), k4(n), tmp(n);
    auto record = [&] {
        traj.states.insert(traj.states.end(), x.begin(), x.end());
        double s = 0.0, lo = std::numeric_limits<double>::infinity();
        for (double v : x) {
            s += v;
            lo = std::min(lo, v);
        }
        traj.sum_err.push_back(std::abs(s - 1.0));
        traj.min_x.push_back(n == 0 ? 0.0 : lo);
    };
    record();
    for (std::size_t step = 0; step < steps; ++step) {
        field.eval(x.data(), k1.data());
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
        field.eval(tmp.data(), k2.data());
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
        field.eval(tmp.data(), k3.data());
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
        field.eval(tmp.data(), k4.data());
        for (std::size_t i = 0; i < n; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (opts.renormalize) {
            double s = 0.0;
            for (double v : x) s += v;
            for (double& v : x) v /= s;
        }
        record();
    }
    return traj;
}

/// x⊤M(x)x at a double point.
inline double quadratic_form(const PolyMatrix& m, const double* x) {
    const std::size_t n = m.rows();
    std::vector<double> pt(x, x + m.nvars());
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) acc += x[i] * m(i, j).eval(std::span<const double>(pt)) * x[j];
    return acc;
}

/// Equilateral embedding of the 2-simplex: e1 → (0,0), e2 → (1,0), e3 → (1/2, √3/2).
struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

inline PlanarPoint project_simplex(const double* p) {
    return {p[1] + 0.5 * p[2], 0.5 * std::sqrt(3.0) * p[2]};
}

struct PhasePortrait {
    std::size_t density = 0;
    std::vector<std::vector<double>> starts; ///< barycentric grid points, ordered by (i, j)
    std::vector<Trajectory> trajectories;
    std::vector<std::vector<PlanarPoint>> projected;
};

/// Interior lattice points (i/k, j/k, (k−i−j)/k) with all parts ≥ 1, ordered by i then j.
inline std::vector<std::vector<double>> barycentric_grid(std::size_t k) {
    std::vector<std::vector<double>> pts;
    const double kd = static_cast<double>(k);
    for (std::size_t i = 1; i + 2 <= k; ++i)
        for (std::size_t j = 1; i + j + 1 <= k; ++j) {
            const std::size_t l = k - i - j;
            pts.push_back({static_cast<double>(i) / kd, static_cast<double>(j) / kd, static_cast<double>(l) / kd});
        }
    return pts;
}

inline PhasePortrait phase_portrait(const ReplicatorSystem& sys, std::size_t density, double horizon, double dt,
                                    IntegrateOptions opts = {}) {
    if (sys.size() != 3) throw Error(ErrorKind::UnsupportedDimension, "phase portraits need n = 3");
    if (density < 3) throw Error(ErrorKind::InvalidArgument, "grid density must be at least 3");
    if (!(dt > 0.0)) throw Error(ErrorKind::StepSizeNonpositive, "dt must be positive");
    PhasePortrait pp;
    pp.density = density;
    pp.starts = barycentric_grid(density);
    pp.trajectories.resize(pp.starts.size());
    pp.projected.resize(pp.starts.size());
    parallel_for(pp.starts.size(), [&](std::size_t k) {
        pp.trajectories[k] = integrate(sys, pp.starts[k], horizon, dt, opts);
        const Trajectory& t = pp.trajectories[k];
        auto& proj = pp.projected[k];
        proj.reserve(t.length());
        for (std::size_t s = 0; s < t.length(); ++s) proj.push_back(project_simplex(t.state(s)));
    });
    return pp;
}

} // namespace zsr
