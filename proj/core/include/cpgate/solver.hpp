#pragma once
// solver.hpp — construction and numerical solution of the derivative
// vanishing conditions for the three sequence families, plus the closed-form
// three-pulse rotation solution and re-polish of tabulated parameters.
//
// A design problem of order n for target angle theta demands
//   a(0) = cos(theta/2),  b(0) = sin(theta/2),
//   c_m(a) = c_m(b) = 0   for m = 1..n,
// where c_m are the series coefficients of the composite propagator.  The
// residual stacks real and imaginary parts of these conditions; a damped
// Newton (Levenberg-Marquardt) iteration with a forward-difference Jacobian
// drives it to zero from random starting points.

#include "cpgate/series.hpp"
#include "cpgate/su2.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cpgate {

struct DesignProblem {
    Family family = Family::SymmetricX;
    int order = 1;       // target compensation order n >= 0
    double theta = pi;   // radians; SymmetricX requires theta = pi
    int pulse_count = 0; // N; 0 selects the family default (2n+1, or 2n for
                         // the alpha/beta-capped asymmetric family)
};

/// Number of pulses the problem resolves to.
int problem_pulse_count(const DesignProblem& problem);

/// Free parameter count of the family layout:
///   SymmetricX     n+1 phases
///   SymmetricRot   alpha + n+1 phases
///   AsymTheta      N phases (the leading theta-pulse phase is pinned to
///                  pi/2 by convention and not optimized)
///   AsymAlphaBeta  alpha, beta + N phases
int parameter_count(const DesignProblem& problem);

/// Materialize the sequence described by a parameter vector.
CompositeSequence build_sequence(const DesignProblem& problem,
                                 std::span<const double> params);

/// Stacked real/imaginary residual of the order-n conditions, length 4(n+1):
/// [Re(a0-cos), Im(a0-cos), Re(b0-sin), Im(b0-sin),
///  Re c1(a), Im c1(a), Re c1(b), Im c1(b), ...].
std::vector<double> residual_vector(std::span<const double> params,
                                    const DesignProblem& problem);

struct Solution {
    CompositeSequence sequence;
    std::vector<double> params;  // canonical family parameters
    double residual_norm = 0.0;
    int achieved_order = 0;
    int seed_id = -1;
};

struct SeedDiagnostic {
    int seed_id = -1;
    bool converged = false;
    double residual = 0.0;
    int iterations = 0;
};

struct SolveReport {
    std::vector<Solution> solutions;    // deduplicated, total area ascending
    std::vector<SeedDiagnostic> seeds;  // one entry per start
};

/// Multi-start solve.  Starting points are drawn uniformly: phases in
/// [0, 2 pi), free areas in (0.1 pi, 1.9 pi).  Converged iterates
/// (residual <= tol) are canonicalized, deduplicated (componentwise pulse
/// distance <= 1e-6, forward or reversed) and sorted by total area, then
/// lexicographically.  Identical rng_seed gives an identical solution list.
SolveReport solve(const DesignProblem& problem, int seeds,
                  std::uint64_t rng_seed, double tol = 1e-12);

struct PolishResult {
    Solution solution;
    double max_param_shift = 0.0;  // radians, over phases and free areas
    bool basin_escape = false;     // some parameter moved more than 5e-4 pi
    int iterations = 0;
};

/// Thrown by polish() on divergence; carries the last iterate.
struct PolishDivergence : std::runtime_error {
    PolishDivergence(std::string what, std::vector<double> iterate)
        : std::runtime_error(std::move(what)), last_iterate(std::move(iterate)) {}
    std::vector<double> last_iterate;
};

/// Local Newton refinement of a sequence already near a solution of the
/// order-n conditions (tabulated 4-decimal parameters qualify).  Refines to
/// residual <= 1e-12 or throws PolishDivergence.
PolishResult polish(const CompositeSequence& seq, int order);

struct PhaseRelation {
    double next_phase = 0.0;          // phi_{n+1}, radians, canonical
    double constraint_residual = 0.0; // 2 sum_k sin(Phi_k) - (-1)^{n+1}
};

/// Zeroth-order phase relation of palindromic all-pi X sequences:
///   phi_{n+1} = pi/2 + 2 (phi_n - phi_{n-1} + ... +- phi_1),
/// plus the residual of the first-derivative constraint
///   2 sum_{k=1..n} sin(Phi_k) = (-1)^{n+1},
///   Phi_k = 2 sum_{j<k} (-1)^{j+1} phi_j + (-1)^{k+1} phi_k.
/// Input: phi_1..phi_n in radians.
PhaseRelation symmetric_x_phase_relations(std::span<const double> phases);

/// Solve sin(pi u) / u = v for u in (0, 1] by bisection to 1e-12.  The
/// relation only closes with the area measured in units of pi (in radians
/// sin(x)/x never exceeds 1); v must lie in [0, pi).
double inverse_sinc(double v);

/// Closed-form three-pulse rotation gate alpha_{p1} pi_{p2} alpha_{p1} of
/// first order for theta in (0, pi]:
///   alpha = pi * inverse_sinc(2 cos(theta/2)),
///   cos(p1 - p2) = -1 / (2 alpha/pi),
///   p1 from the complex zeroth-order condition.
/// The result is polished and the order-1 conditions are asserted to hold
/// at 1e-12 rather than trusted from the formulas.
Solution scrofulous_solve(double theta);

/// Distance between two sequences modulo the symmetry class that leaves the
/// published tables invariant: global phase shift by pi (conjugate target),
/// global reflection phi -> pi - phi (complex conjugation), pulse-order
/// reversal, and their compositions.  Max-norm over pulses of area and
/// phase differences, radians; +inf for different lengths.
double sequence_class_distance(const CompositeSequence& lhs,
                               const CompositeSequence& rhs);

/// Plain componentwise distance (areas and phases mod 2 pi), forward order.
double sequence_distance(const CompositeSequence& lhs,
                         const CompositeSequence& rhs);

} // namespace cpgate
