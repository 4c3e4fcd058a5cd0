#include "cpgate/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <utility>

namespace cpgate {

namespace {

constexpr double kDefaultTol = 1e-12;
// polish drives the iteration well past the acceptance threshold so that
// the refined parameters do not leave a residual infidelity plateau above
// the double-precision floor
constexpr double kPolishLmTol = 1e-14;
constexpr double kFdStep = 1e-7;
constexpr double kBasinTol = 5e-4 * pi;  // tabulated values print 4 decimals

bool is_symmetric(Family f) {
    return f == Family::SymmetricX || f == Family::SymmetricRot;
}

void validate_problem(const DesignProblem& problem) {
    if (problem.order < 0)
        throw std::invalid_argument("design order must be >= 0");
    if (!std::isfinite(problem.theta))
        throw std::invalid_argument("design angle must be finite");
    if (problem.family == Family::Custom)
        throw std::invalid_argument("custom sequences have no solver layout");
    if (problem.family == Family::SymmetricX &&
        std::fabs(problem.theta - pi) > 1e-9)
        throw std::invalid_argument(
            "symmetric-x sequences only implement the theta = pi gate");
    if ((problem.family == Family::AsymTheta ||
         problem.family == Family::SymmetricRot ||
         problem.family == Family::AsymAlphaBeta) &&
        !(problem.theta > 0.0 && problem.theta < 2.0 * pi))
        throw std::invalid_argument("design angle must lie in (0, 2 pi)");
}

} // namespace

int problem_pulse_count(const DesignProblem& problem) {
    validate_problem(problem);
    int count = problem.pulse_count;
    if (count == 0)
        count = problem.family == Family::AsymAlphaBeta
                    ? std::max(2, 2 * problem.order)
                    : 2 * problem.order + 1;
    if (count < 1) throw std::invalid_argument("pulse count must be positive");
    if (is_symmetric(problem.family) && count % 2 == 0)
        throw std::invalid_argument("symmetric sequences need an odd pulse count");
    if (problem.family == Family::SymmetricRot && count < 3)
        throw std::invalid_argument("symmetric-rot sequences need >= 3 pulses");
    if (problem.family == Family::AsymAlphaBeta && count < 2)
        throw std::invalid_argument("alpha/beta sequences need >= 2 pulses");
    if (problem.order >= 1 && count < 2 * problem.order)
        throw std::invalid_argument(
            "pulse count too small for the requested compensation order");
    return count;
}

int parameter_count(const DesignProblem& problem) {
    const int n = problem_pulse_count(problem);
    switch (problem.family) {
        case Family::SymmetricX: return (n + 1) / 2;
        case Family::SymmetricRot: return 1 + (n + 1) / 2;
        case Family::AsymTheta: return n;
        case Family::AsymAlphaBeta: return 2 + n;
        case Family::Custom: break;
    }
    throw std::invalid_argument("custom sequences have no solver layout");
}

CompositeSequence build_sequence(const DesignProblem& problem,
                                 std::span<const double> params) {
    const int count = problem_pulse_count(problem);
    if (static_cast<int>(params.size()) != parameter_count(problem))
        throw std::domain_error("parameter vector length does not match layout");

    std::vector<Pulse> pulses;
    pulses.reserve(count);
    switch (problem.family) {
        case Family::SymmetricX: {
            const int half = (count + 1) / 2;
            for (int k = 0; k < count; ++k) {
                const int idx = k < half ? k : count - 1 - k;
                pulses.push_back(make_pulse(pi, params[idx]));
            }
            break;
        }
        case Family::SymmetricRot: {
            const int half = (count + 1) / 2;
            const double alpha = params[0];
            for (int k = 0; k < count; ++k) {
                const int idx = k < half ? k : count - 1 - k;
                const bool cap = (k == 0 || k == count - 1);
                pulses.push_back(make_pulse(cap ? alpha : pi, params[1 + idx]));
            }
            break;
        }
        case Family::AsymTheta: {
            pulses.push_back(make_pulse(problem.theta, params[0]));
            for (int k = 1; k < count; ++k)
                pulses.push_back(make_pulse(pi, params[k]));
            break;
        }
        case Family::AsymAlphaBeta: {
            for (int k = 0; k < count; ++k) {
                double area = pi;
                if (k == 0) area = params[0];
                if (k == count - 1) area = params[1];
                pulses.push_back(make_pulse(area, params[2 + k]));
            }
            break;
        }
        case Family::Custom:
            throw std::invalid_argument("custom sequences have no solver layout");
    }
    return make_sequence(std::move(pulses), problem.theta, problem.family);
}

std::vector<double> residual_vector(std::span<const double> params,
                                    const DesignProblem& problem) {
    const CompositeSequence seq = build_sequence(problem, params);
    const Su2Series series = compose_series(seq, problem.order);
    const Su2Matrix target = target_rotation(problem.theta);

    std::vector<double> res;
    res.reserve(4 * (problem.order + 1));
    const complexd da = series.a[0] - target.a;
    const complexd db = series.b[0] - target.b;
    res.push_back(da.real());
    res.push_back(da.imag());
    res.push_back(db.real());
    res.push_back(db.imag());
    for (int m = 1; m <= problem.order; ++m) {
        res.push_back(series.a[m].real());
        res.push_back(series.a[m].imag());
        res.push_back(series.b[m].real());
        res.push_back(series.b[m].imag());
    }
    return res;
}

namespace {

using ResidualFn = std::function<std::vector<double>(std::span<const double>)>;

double norm2(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

// Cholesky solve of the (SPD + damping) normal equations; a must be k x k
// row major.  Returns false when the factorization breaks down.
bool cholesky_solve(std::vector<double> a, std::vector<double> rhs, int k,
                    std::vector<double>& out) {
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = a[i * k + j];
            for (int p = 0; p < j; ++p) sum -= a[i * k + p] * a[j * k + p];
            if (i == j) {
                if (sum <= 0.0) return false;
                a[i * k + i] = std::sqrt(sum);
            } else {
                a[i * k + j] = sum / a[j * k + j];
            }
        }
    }
    for (int i = 0; i < k; ++i) {
        double sum = rhs[i];
        for (int p = 0; p < i; ++p) sum -= a[i * k + p] * rhs[p];
        rhs[i] = sum / a[i * k + i];
    }
    out.assign(k, 0.0);
    for (int i = k - 1; i >= 0; --i) {
        double sum = rhs[i];
        for (int p = i + 1; p < k; ++p) sum -= a[p * k + i] * out[p];
        out[i] = sum / a[i * k + i];
    }
    return true;
}

struct LmOutcome {
    std::vector<double> params;
    double residual_norm = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

// Damped Newton on a stacked residual.  free_mask marks the parameters the
// iteration may move; the rest stay pinned at their start values.
LmOutcome levenberg_marquardt(const ResidualFn& f, std::vector<double> start,
                              const std::vector<char>& free_mask, double tol,
                              int max_iterations = 200) {
    std::vector<int> free_idx;
    for (std::size_t i = 0; i < free_mask.size(); ++i)
        if (free_mask[i]) free_idx.push_back(static_cast<int>(i));
    const int k = static_cast<int>(free_idx.size());

    LmOutcome out;
    out.params = start;
    std::vector<double> r;
    try {
        r = f(start);
    } catch (const std::exception&) {
        return out;  // start already infeasible
    }
    double rnorm = norm2(r);
    out.residual_norm = rnorm;

    const int m = static_cast<int>(r.size());
    double lambda = 1e-3;
    std::vector<double> jac(static_cast<std::size_t>(m) * k);
    std::vector<double> jtj(static_cast<std::size_t>(k) * k);
    std::vector<double> jtr(k);
    std::vector<double> delta;

    for (int iter = 1; iter <= max_iterations; ++iter) {
        out.iterations = iter;
        if (rnorm <= tol) {
            out.converged = true;
            return out;
        }

        bool jacobian_ok = true;
        for (int j = 0; j < k; ++j) {
            std::vector<double> probe = out.params;
            probe[free_idx[j]] += kFdStep;
            std::vector<double> rj;
            try {
                rj = f(probe);
            } catch (const std::exception&) {
                jacobian_ok = false;
                break;
            }
            for (int i = 0; i < m; ++i)
                jac[static_cast<std::size_t>(i) * k + j] =
                    (rj[i] - r[i]) / kFdStep;
        }
        if (!jacobian_ok) return out;

        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j) {
                double sum = 0.0;
                for (int p = 0; p < m; ++p)
                    sum += jac[static_cast<std::size_t>(p) * k + i] *
                           jac[static_cast<std::size_t>(p) * k + j];
                jtj[static_cast<std::size_t>(i) * k + j] = sum;
                jtj[static_cast<std::size_t>(j) * k + i] = sum;
            }
            double sum = 0.0;
            for (int p = 0; p < m; ++p)
                sum += jac[static_cast<std::size_t>(p) * k + i] * r[p];
            jtr[i] = sum;
        }

        bool stepped = false;
        while (!stepped) {
            std::vector<double> damped = jtj;
            for (int i = 0; i < k; ++i)
                damped[static_cast<std::size_t>(i) * k + i] +=
                    lambda * std::max(jtj[static_cast<std::size_t>(i) * k + i],
                                      1e-12);
            std::vector<double> neg = jtr;
            for (double& x : neg) x = -x;
            if (cholesky_solve(damped, neg, k, delta)) {
                std::vector<double> trial = out.params;
                for (int j = 0; j < k; ++j) trial[free_idx[j]] += delta[j];
                bool ok = true;
                std::vector<double> rt;
                try {
                    rt = f(trial);
                } catch (const std::exception&) {
                    ok = false;
                }
                if (ok && norm2(rt) < rnorm) {
                    out.params = std::move(trial);
                    r = std::move(rt);
                    rnorm = norm2(r);
                    out.residual_norm = rnorm;
                    lambda = std::max(lambda * 0.1, 1e-14);
                    stepped = true;
                    continue;
                }
            }
            lambda *= 10.0;
            if (lambda > 1e12) {
                out.converged = rnorm <= tol;
                return out;  // stalled
            }
        }
    }
    out.converged = rnorm <= tol;
    return out;
}

// Indices of area parameters in the layout; everything else is a phase.
std::vector<int> area_param_indices(const DesignProblem& problem) {
    switch (problem.family) {
        case Family::SymmetricRot: return {0};
        case Family::AsymAlphaBeta: return {0, 1};
        default: return {};
    }
}

// Flip negative areas via the exact identity U_phi(-A) = U_{phi+pi}(A)
// (valid at every eps) and wrap phases into [0, 2 pi).  Returns false for
// roots whose area lands outside (0, 2 pi]: the propagator is only
// 4 pi-periodic in the area at eps = 0, so no in-band reduction of a wide
// pulse is exact, and such roots are discarded rather than distorted.
bool canonicalize_params(const DesignProblem& problem,
                         std::vector<double>& params) {
    const std::vector<int> area_idx = area_param_indices(problem);
    for (int idx : area_idx) {
        if (params[idx] < 0.0) {
            params[idx] = -params[idx];
            // alpha caps both ends for SymmetricRot, a single end otherwise
            if (problem.family == Family::SymmetricRot) {
                params[1] += pi;
            } else if (problem.family == Family::AsymAlphaBeta) {
                const int count = problem_pulse_count(problem);
                const int phase_slot = (idx == 0) ? 2 : 2 + count - 1;
                params[phase_slot] += pi;
            }
        }
        if (params[idx] <= 1e-9 || params[idx] > 2.0 * pi + 1e-9) return false;
    }
    const std::size_t first_phase = area_idx.size();
    for (std::size_t i = first_phase; i < params.size(); ++i)
        params[i] = canonical_phase(params[i]);
    return true;
}

bool pulses_match(const std::vector<Pulse>& x, const std::vector<Pulse>& y,
                  double tol) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (std::fabs(x[k].area - y[k].area) > tol) return false;
        if (phase_distance(x[k].phase, y[k].phase) > tol) return false;
    }
    return true;
}

bool lexicographic_before(const Solution& lhs, const Solution& rhs) {
    const double la = total_area(lhs.sequence);
    const double ra = total_area(rhs.sequence);
    if (std::fabs(la - ra) > 1e-9) return la < ra;
    const auto& lp = lhs.sequence.pulses;
    const auto& rp = rhs.sequence.pulses;
    if (lp.size() != rp.size()) return lp.size() < rp.size();
    for (std::size_t k = 0; k < lp.size(); ++k) {
        if (lp[k].area != rp[k].area) return lp[k].area < rp[k].area;
        if (lp[k].phase != rp[k].phase) return lp[k].phase < rp[k].phase;
    }
    return false;
}

} // namespace

SolveReport solve(const DesignProblem& problem, int seeds,
                  std::uint64_t rng_seed, double tol) {
    if (seeds < 1) throw std::invalid_argument("solve: need at least one seed");
    const int param_count = parameter_count(problem);
    const std::vector<int> area_idx = area_param_indices(problem);

    std::vector<char> free_mask(param_count, 1);
    if (problem.family == Family::AsymTheta)
        free_mask[0] = 0;  // theta-pulse phase pinned to pi/2

    const ResidualFn fn = [&problem](std::span<const double> p) {
        return residual_vector(p, problem);
    };

    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> area_dist(0.1 * pi, 1.9 * pi);

    SolveReport report;
    std::vector<Solution> found;
    for (int seed = 0; seed < seeds; ++seed) {
        std::vector<double> start(param_count);
        for (int i = 0; i < param_count; ++i) {
            const bool is_area =
                std::find(area_idx.begin(), area_idx.end(), i) != area_idx.end();
            if (!free_mask[i])
                start[i] = 0.5 * pi;
            else
                start[i] = is_area ? area_dist(rng) : phase_dist(rng);
        }

        LmOutcome lm = levenberg_marquardt(fn, std::move(start), free_mask, tol);
        report.seeds.push_back(
            {seed, lm.converged, lm.residual_norm, lm.iterations});
        if (!lm.converged) continue;

        if (!canonicalize_params(problem, lm.params)) continue;
        Solution sol;
        sol.params = lm.params;
        sol.sequence = build_sequence(problem, lm.params);
        sol.residual_norm = norm2(residual_vector(lm.params, problem));
        sol.achieved_order =
            compensation_order(sol.sequence, problem.theta, 1e-10,
                               problem.order + 3)
                .order;
        sol.seed_id = seed;
        found.push_back(std::move(sol));
    }

    std::sort(found.begin(), found.end(), lexicographic_before);
    for (const Solution& candidate : found) {
        bool duplicate = false;
        for (const Solution& kept : report.solutions) {
            std::vector<Pulse> reversed(candidate.sequence.pulses.rbegin(),
                                        candidate.sequence.pulses.rend());
            if (pulses_match(kept.sequence.pulses, candidate.sequence.pulses,
                             1e-6) ||
                pulses_match(kept.sequence.pulses, reversed, 1e-6)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) report.solutions.push_back(candidate);
    }
    return report;
}

namespace {

// Extract the family parameter vector from an existing sequence.  For
// Family::Custom the layout is the full phase list with areas frozen.
struct PolishLayout {
    std::vector<double> params;
    std::vector<char> free_mask;
    std::function<CompositeSequence(std::span<const double>)> rebuild;
};

PolishLayout make_polish_layout(const CompositeSequence& seq) {
    const int count = static_cast<int>(seq.pulses.size());
    PolishLayout layout;
    switch (seq.family) {
        case Family::SymmetricX: {
            const int half = (count + 1) / 2;
            for (int k = 0; k < half; ++k)
                layout.params.push_back(seq.pulses[k].phase);
            layout.free_mask.assign(layout.params.size(), 1);
            DesignProblem problem{Family::SymmetricX, 0, seq.target_theta,
                                  count};
            layout.rebuild = [problem](std::span<const double> p) {
                return build_sequence(problem, p);
            };
            break;
        }
        case Family::SymmetricRot: {
            const int half = (count + 1) / 2;
            layout.params.push_back(seq.pulses.front().area);
            for (int k = 0; k < half; ++k)
                layout.params.push_back(seq.pulses[k].phase);
            layout.free_mask.assign(layout.params.size(), 1);
            DesignProblem problem{Family::SymmetricRot, 0, seq.target_theta,
                                  count};
            layout.rebuild = [problem](std::span<const double> p) {
                return build_sequence(problem, p);
            };
            break;
        }
        case Family::AsymAlphaBeta: {
            layout.params.push_back(seq.pulses.front().area);
            layout.params.push_back(seq.pulses.back().area);
            for (const Pulse& p : seq.pulses) layout.params.push_back(p.phase);
            layout.free_mask.assign(layout.params.size(), 1);
            DesignProblem problem{Family::AsymAlphaBeta, 0, seq.target_theta,
                                  count};
            layout.rebuild = [problem](std::span<const double> p) {
                return build_sequence(problem, p);
            };
            break;
        }
        case Family::AsymTheta:
        case Family::Custom: {
            // Phases only; areas are frozen at their current values.  For
            // the theta-capped family the leading phase stays pinned too.
            std::vector<double> areas;
            for (const Pulse& p : seq.pulses) {
                layout.params.push_back(p.phase);
                areas.push_back(p.area);
            }
            layout.free_mask.assign(layout.params.size(), 1);
            if (seq.family == Family::AsymTheta) layout.free_mask[0] = 0;
            const double theta = seq.target_theta;
            const Family family = seq.family;
            layout.rebuild = [areas, theta,
                              family](std::span<const double> p) {
                std::vector<Pulse> pulses;
                pulses.reserve(areas.size());
                for (std::size_t k = 0; k < areas.size(); ++k)
                    pulses.push_back(make_pulse(areas[k], p[k]));
                return make_sequence(std::move(pulses), theta, family);
            };
            break;
        }
    }
    return layout;
}

} // namespace

PolishResult polish(const CompositeSequence& seq, int order) {
    if (order < 0) throw std::invalid_argument("polish: order must be >= 0");
    PolishLayout layout = make_polish_layout(seq);
    const Su2Matrix target = target_rotation(seq.target_theta);

    const ResidualFn fn = [&layout, order,
                           target](std::span<const double> p) {
        const CompositeSequence candidate = layout.rebuild(p);
        const Su2Series series = compose_series(candidate, order);
        std::vector<double> res;
        res.reserve(4 * (order + 1));
        const complexd da = series.a[0] - target.a;
        const complexd db = series.b[0] - target.b;
        res.push_back(da.real());
        res.push_back(da.imag());
        res.push_back(db.real());
        res.push_back(db.imag());
        for (int m = 1; m <= order; ++m) {
            res.push_back(series.a[m].real());
            res.push_back(series.a[m].imag());
            res.push_back(series.b[m].real());
            res.push_back(series.b[m].imag());
        }
        return res;
    };

    LmOutcome lm =
        levenberg_marquardt(fn, layout.params, layout.free_mask, kPolishLmTol);
    if (lm.residual_norm > kDefaultTol)
        throw PolishDivergence("polish did not converge", lm.params);

    PolishResult result;
    result.iterations = lm.iterations;
    for (std::size_t i = 0; i < layout.params.size(); ++i) {
        // Area parameters sit in front for the variable-area families; both
        // kinds are compared on the same absolute scale.
        const double shift = phase_distance(lm.params[i], layout.params[i]);
        const double direct = std::fabs(lm.params[i] - layout.params[i]);
        result.max_param_shift =
            std::max(result.max_param_shift, std::min(shift, direct));
    }
    result.basin_escape = result.max_param_shift > kBasinTol;

    result.solution.sequence = layout.rebuild(lm.params);
    result.solution.params = lm.params;
    result.solution.residual_norm = lm.residual_norm;
    result.solution.achieved_order =
        compensation_order(result.solution.sequence, seq.target_theta, 1e-10,
                           order + 3)
            .order;
    return result;
}

PhaseRelation symmetric_x_phase_relations(std::span<const double> phases) {
    if (phases.empty())
        throw std::domain_error(
            "symmetric_x_phase_relations: need at least phi_1");
    const int n = static_cast<int>(phases.size());

    double alternating = 0.0;  // phi_n - phi_{n-1} + ... +- phi_1
    for (int j = 1; j <= n; ++j) {
        const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
        alternating += sign * phases[j - 1];
    }

    double constraint = 0.0;
    double prefix = 0.0;  // 2 sum_{j<k} (-1)^{j+1} phi_j
    for (int k = 1; k <= n; ++k) {
        const double sign_k = (k % 2 == 1) ? 1.0 : -1.0;
        constraint += std::sin(prefix + sign_k * phases[k - 1]);
        prefix += 2.0 * sign_k * phases[k - 1];
    }
    const double parity = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}

    return {canonical_phase(0.5 * pi + 2.0 * alternating),
            2.0 * constraint - parity};
}

double inverse_sinc(double v) {
    if (!std::isfinite(v) || v < 0.0 || v >= pi)
        throw std::domain_error(
            "inverse_sinc: value must lie in [0, pi), the range of "
            "sin(pi u)/u on (0, 1]");
    if (v == 0.0) return 1.0;

    const auto f = [](double u) { return std::sin(pi * u) / u; };
    double lo = 1e-15, hi = 1.0;  // f decreases from pi to 0
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > v ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Solution scrofulous_solve(double theta) {
    if (!(theta > 0.0) || theta > pi + 1e-12)
        throw std::domain_error("scrofulous_solve: theta must lie in (0, pi]");
    theta = std::min(theta, pi);

    const double u = inverse_sinc(2.0 * std::cos(0.5 * theta));
    const double alpha = pi * u;
    const double cos_d = -1.0 / (2.0 * u);
    // The conjugate branch (d < 0) matches the published rotation tables;
    // the d > 0 branch is its complex conjugate, phi -> pi - phi.
    const double d = -std::acos(std::clamp(cos_d, -1.0, 1.0));
    const complexd z(std::sin(d), std::cos(alpha) * std::cos(d));
    const double phi1 = canonical_phase(pi - std::arg(z));
    const double phi2 = canonical_phase(phi1 - d);

    const CompositeSequence seq = make_sequence(
        {make_pulse(alpha, phi1), make_pulse(pi, phi2), make_pulse(alpha, phi1)},
        theta, Family::SymmetricRot);

    // The closed form fixes the branch; the full order-1 conditions are
    // certified numerically rather than trusted from the algebra.
    PolishResult refined = polish(seq, 1);
    if (refined.solution.residual_norm > kDefaultTol || refined.basin_escape)
        throw std::runtime_error(
            "scrofulous_solve: closed form failed post-hoc verification");
    refined.solution.seed_id = -1;
    return refined.solution;
}

namespace {

double forward_distance(const std::vector<Pulse>& x,
                        const std::vector<Pulse>& y) {
    double dist = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        dist = std::max(dist, std::fabs(x[k].area - y[k].area));
        dist = std::max(dist, phase_distance(x[k].phase, y[k].phase));
    }
    return dist;
}

} // namespace

double sequence_distance(const CompositeSequence& lhs,
                         const CompositeSequence& rhs) {
    if (lhs.pulses.size() != rhs.pulses.size())
        return std::numeric_limits<double>::infinity();
    return forward_distance(lhs.pulses, rhs.pulses);
}

double sequence_class_distance(const CompositeSequence& lhs,
                               const CompositeSequence& rhs) {
    if (lhs.pulses.size() != rhs.pulses.size())
        return std::numeric_limits<double>::infinity();

    double best = std::numeric_limits<double>::infinity();
    for (int reversed = 0; reversed < 2; ++reversed) {
        for (int conjugated = 0; conjugated < 2; ++conjugated) {
            for (int shifted = 0; shifted < 2; ++shifted) {
                std::vector<Pulse> variant = rhs.pulses;
                if (reversed) std::reverse(variant.begin(), variant.end());
                for (Pulse& p : variant) {
                    double phase = p.phase;
                    if (conjugated) phase = pi - phase;
                    if (shifted) phase += pi;
                    p.phase = canonical_phase(phase);
                }
                best = std::min(best, forward_distance(lhs.pulses, variant));
            }
        }
    }
    return best;
}

} // namespace cpgate
