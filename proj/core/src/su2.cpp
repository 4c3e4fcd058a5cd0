#include "cpgate/su2.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cpgate {

double canonical_phase(double phase) {
    double p = std::fmod(phase, 2.0 * pi);
    if (p < 0.0) p += 2.0 * pi;
    if (p >= 2.0 * pi) p = 0.0;  // fmod rounding right at the boundary
    return p;
}

double phase_distance(double x, double y) {
    double d = std::fabs(canonical_phase(x) - canonical_phase(y));
    return std::min(d, 2.0 * pi - d);
}

double Su2Matrix::unitarity_defect() const {
    return std::fabs(std::norm(a) + std::norm(b) - 1.0);
}

Su2Matrix operator*(const Su2Matrix& lhs, const Su2Matrix& rhs) {
    return {lhs.a * rhs.a - lhs.b * std::conj(rhs.b),
            lhs.a * rhs.b + lhs.b * std::conj(rhs.a)};
}

double max_entry_distance(const Su2Matrix& u, const Su2Matrix& v) {
    const auto ue = u.entries();
    const auto ve = v.entries();
    double d = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
        d = std::max(d, std::abs(ue[k] - ve[k]));
    return d;
}

Pulse make_pulse(double area, double phase) {
    if (!std::isfinite(area) || !std::isfinite(phase))
        throw std::domain_error("pulse parameters must be finite");
    if (area <= 0.0)
        throw std::domain_error("pulse area must be positive");
    return {area, canonical_phase(phase)};
}

const char* family_name(Family f) {
    switch (f) {
        case Family::SymmetricX: return "symmetric-x";
        case Family::SymmetricRot: return "symmetric-rot";
        case Family::AsymTheta: return "asym-theta";
        case Family::AsymAlphaBeta: return "asym-alpha-beta";
        case Family::Custom: return "custom";
    }
    return "custom";
}

Family family_from_name(std::string_view s) {
    if (s == "symmetric-x") return Family::SymmetricX;
    if (s == "symmetric-rot") return Family::SymmetricRot;
    if (s == "asym-theta") return Family::AsymTheta;
    if (s == "asym-alpha-beta") return Family::AsymAlphaBeta;
    if (s == "custom") return Family::Custom;
    throw std::invalid_argument("unknown family: " + std::string(s));
}

namespace {

constexpr double kStructureTol = 1e-9;

bool phases_palindromic(const std::vector<Pulse>& pulses, std::size_t first,
                        std::size_t last) {
    while (first < last) {
        if (phase_distance(pulses[first].phase, pulses[last].phase) >
            kStructureTol)
            return false;
        ++first;
        --last;
    }
    return true;
}

void check_family_structure(const std::vector<Pulse>& pulses, Family family) {
    const std::size_t n = pulses.size();
    switch (family) {
        case Family::SymmetricX:
            for (const Pulse& p : pulses)
                if (std::fabs(p.area - pi) > kStructureTol)
                    throw std::invalid_argument(
                        "symmetric-x sequences consist of nominal pi pulses");
            if (!phases_palindromic(pulses, 0, n - 1))
                throw std::invalid_argument(
                    "symmetric-x phases must be palindromic");
            break;
        case Family::SymmetricRot: {
            if (n < 3)
                throw std::invalid_argument(
                    "symmetric-rot sequences have at least 3 pulses");
            const Pulse& head = pulses.front();
            const Pulse& tail = pulses.back();
            if (std::fabs(head.area - tail.area) > kStructureTol ||
                phase_distance(head.phase, tail.phase) > kStructureTol)
                throw std::invalid_argument(
                    "symmetric-rot end pulses must share area and phase");
            for (std::size_t k = 1; k + 1 < n; ++k)
                if (std::fabs(pulses[k].area - pi) > kStructureTol)
                    throw std::invalid_argument(
                        "symmetric-rot interior pulses must be pi pulses");
            if (!phases_palindromic(pulses, 1, n - 2))
                throw std::invalid_argument(
                    "symmetric-rot interior phases must be palindromic");
            break;
        }
        case Family::AsymTheta:
        case Family::AsymAlphaBeta:
        case Family::Custom:
            break;
    }
}

} // namespace

CompositeSequence make_sequence(std::vector<Pulse> pulses, double target_theta,
                                Family family) {
    if (pulses.empty())
        throw std::domain_error("a composite sequence needs at least one pulse");
    if (!std::isfinite(target_theta))
        throw std::domain_error("target angle must be finite");
    for (Pulse& p : pulses) p = make_pulse(p.area, p.phase);
    check_family_structure(pulses, family);
    return {std::move(pulses), target_theta, family};
}

Su2Matrix pulse_propagator(double area, double phase, double eps) {
    if (!std::isfinite(area) || !std::isfinite(phase) || !std::isfinite(eps))
        throw std::domain_error("pulse_propagator: inputs must be finite");
    if (area <= 0.0)
        throw std::domain_error("pulse_propagator: area must be positive");
    if (eps <= -1.0)
        throw std::domain_error("pulse_propagator: eps must exceed -1");
    const double half = 0.5 * area * (1.0 + eps);
    const complexd phase_factor = std::polar(1.0, phase);
    return {complexd(std::cos(half), 0.0),
            complexd(0.0, -std::sin(half)) * phase_factor};
}

Su2Matrix compose(const CompositeSequence& seq, double eps) {
    if (seq.pulses.empty())
        throw std::domain_error("compose: empty sequence");
    Su2Matrix u = pulse_propagator(seq.pulses.front().area,
                                   seq.pulses.front().phase, eps);
    for (std::size_t k = 1; k < seq.pulses.size(); ++k)
        u = pulse_propagator(seq.pulses[k].area, seq.pulses[k].phase, eps) * u;
    return u;
}

Su2Matrix target_rotation(double theta) {
    return {complexd(std::cos(0.5 * theta), 0.0),
            complexd(std::sin(0.5 * theta), 0.0)};
}

Su2Matrix phase_gate(double phi) {
    return {std::polar(1.0, phi), complexd(0.0, 0.0)};
}

double total_area(const CompositeSequence& seq) {
    double sum = 0.0;
    for (const Pulse& p : seq.pulses) sum += std::fabs(p.area);
    return sum;
}

double total_area_pi(const CompositeSequence& seq) {
    return total_area(seq) / pi;
}

CompositeSequence concat(const CompositeSequence& lhs,
                         const CompositeSequence& rhs) {
    std::vector<Pulse> pulses = lhs.pulses;
    pulses.insert(pulses.end(), rhs.pulses.begin(), rhs.pulses.end());
    return {std::move(pulses), lhs.target_theta, Family::Custom};
}

} // namespace cpgate
