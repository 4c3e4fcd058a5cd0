#pragma once
// fidelity.hpp — gate fidelity metrics, infidelity profiles over the
// pulse-area error, and high-fidelity range extraction.

#include "cpgate/su2.hpp"

#include <vector>

namespace cpgate {

/// Frobenius distance fidelity between two propagators:
///   1 - sqrt( 1/4 sum_{jk} |U_jk - R_jk|^2 ),
/// computed from all four matrix entries.
double frobenius_fidelity(const Su2Matrix& u, const Su2Matrix& target);

/// Trace fidelity Re( Tr(U R^dagger) / 2 ).  The real part is taken; the
/// raw half-trace can be complex for an arbitrary propagator.
double trace_fidelity(const Su2Matrix& u, const Su2Matrix& target);

/// Same metrics for a sequence at error eps against R(theta).
double frobenius_fidelity(const CompositeSequence& seq, double theta,
                          double eps);
double trace_fidelity(const CompositeSequence& seq, double theta, double eps);

/// Closed-form Frobenius infidelity of the first-order three-pulse X gate:
///   I1(eps) = sqrt(2 (1 + 2 cos^2(pi eps/4))) sin^2(pi eps/4).
/// Test oracle; independent of compose().
double x3_infidelity(double eps);

/// Closed-form Frobenius infidelity of the second-order X sequences:
///   I2(eps) = sqrt(8 + 9 cos(pi eps/2) + 3 cos^2(pi eps/2)) |sin(pi eps/4)|^3.
double x5_infidelity(double eps);

struct FidelityProfile {
    std::vector<double> eps;
    std::vector<double> frobenius;
    std::vector<double> trace;
};

/// Both metrics on a uniform eps grid (count >= 2, endpoints included).
FidelityProfile profile(const CompositeSequence& seq, double theta,
                        double eps_min, double eps_max, int count);

struct HighFidelityRange {
    double eps_minus = 0.0;  // <= 0
    double eps_plus = 0.0;   // >= 0
    double threshold = 1e-4;

    /// Display form [(1+eps-)*pi, (1+eps+)*pi] in units of pi.
    double area_lo_pi() const { return 1.0 + eps_minus; }
    double area_hi_pi() const { return 1.0 + eps_plus; }
};

/// Innermost interval around eps = 0 where the Frobenius infidelity stays
/// at or below the threshold.  Scans outward in steps of 1e-4 for the first
/// crossing on each side, then bisects the bracketing step.  Throws
/// std::domain_error("no range") when the infidelity already exceeds the
/// threshold at eps = 0.  The scan is capped at |eps| = 0.999; a side that
/// never crosses is reported at the cap.
HighFidelityRange high_fidelity_range(const CompositeSequence& seq,
                                      double theta, double threshold = 1e-4);

} // namespace cpgate
