#include "cpgate/fidelity.hpp"

#include <cmath>
#include <stdexcept>

namespace cpgate {

double frobenius_fidelity(const Su2Matrix& u, const Su2Matrix& target) {
    const auto ue = u.entries();
    const auto te = target.entries();
    double sum = 0.0;
    for (std::size_t k = 0; k < 4; ++k) sum += std::norm(ue[k] - te[k]);
    return 1.0 - std::sqrt(0.25 * sum);
}

double trace_fidelity(const Su2Matrix& u, const Su2Matrix& target) {
    const Su2Matrix m = u * target.dagger();
    return std::real(0.5 * (m.a + std::conj(m.a)));
}

double frobenius_fidelity(const CompositeSequence& seq, double theta,
                          double eps) {
    return frobenius_fidelity(compose(seq, eps), target_rotation(theta));
}

double trace_fidelity(const CompositeSequence& seq, double theta, double eps) {
    return trace_fidelity(compose(seq, eps), target_rotation(theta));
}

double x3_infidelity(double eps) {
    const double s = std::sin(0.25 * pi * eps);
    const double c = std::cos(0.25 * pi * eps);
    return std::sqrt(2.0 * (1.0 + 2.0 * c * c)) * s * s;
}

double x5_infidelity(double eps) {
    const double c = std::cos(0.5 * pi * eps);
    const double s = std::fabs(std::sin(0.25 * pi * eps));
    return std::sqrt(8.0 + 9.0 * c + 3.0 * c * c) * s * s * s;
}

FidelityProfile profile(const CompositeSequence& seq, double theta,
                        double eps_min, double eps_max, int count) {
    if (count < 2)
        throw std::domain_error("profile: need at least 2 grid points");
    if (!(eps_min < eps_max))
        throw std::domain_error("profile: eps_min must be below eps_max");

    const Su2Matrix target = target_rotation(theta);
    FidelityProfile out;
    out.eps.reserve(count);
    out.frobenius.reserve(count);
    out.trace.reserve(count);
    const double step = (eps_max - eps_min) / (count - 1);
    for (int i = 0; i < count; ++i) {
        const double eps = eps_min + step * i;
        const Su2Matrix u = compose(seq, eps);
        out.eps.push_back(eps);
        out.frobenius.push_back(frobenius_fidelity(u, target));
        out.trace.push_back(trace_fidelity(u, target));
    }
    return out;
}

namespace {

constexpr double kScanStep = 1e-4;
constexpr double kScanCap = 0.999;
constexpr double kBisectWidth = 1e-7;

// First |eps| at which the infidelity crosses the threshold, on one side.
// inside/outside bracket the crossing; returns the bracket midpoint.
double crossing(const CompositeSequence& seq, const Su2Matrix& target,
                double threshold, double sign) {
    double inside = 0.0;
    double outside = 0.0;
    bool crossed = false;
    for (double mag = kScanStep; mag <= kScanCap; mag += kScanStep) {
        const double infid =
            1.0 - frobenius_fidelity(compose(seq, sign * mag), target);
        if (infid > threshold) {
            outside = mag;
            crossed = true;
            break;
        }
        inside = mag;
    }
    if (!crossed) return sign * kScanCap;

    while (outside - inside > kBisectWidth) {
        const double mid = 0.5 * (inside + outside);
        const double infid =
            1.0 - frobenius_fidelity(compose(seq, sign * mid), target);
        (infid > threshold ? outside : inside) = mid;
    }
    return sign * 0.5 * (inside + outside);
}

} // namespace

HighFidelityRange high_fidelity_range(const CompositeSequence& seq,
                                      double theta, double threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw std::domain_error("high_fidelity_range: threshold in (0, 1)");
    const Su2Matrix target = target_rotation(theta);
    const double infid0 = 1.0 - frobenius_fidelity(compose(seq, 0.0), target);
    if (infid0 > threshold)
        throw std::domain_error(
            "no range: infidelity exceeds the threshold at eps = 0");
    HighFidelityRange range;
    range.threshold = threshold;
    range.eps_plus = crossing(seq, target, threshold, +1.0);
    range.eps_minus = crossing(seq, target, threshold, -1.0);
    return range;
}

} // namespace cpgate
