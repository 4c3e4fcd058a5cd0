#pragma once
// su2.hpp — exact SU(2) propagator algebra for resonant composite pulse
// sequences.
//
// Conventions used throughout the library:
//
//   * A propagator is stored as its Cayley-Klein pair (a, b), i.e. the matrix
//         [[ a, b ], [ -conj(b), conj(a) ]]     with |a|^2 + |b|^2 = 1.
//   * A resonant pulse of nominal area A, composite phase phi and relative
//     pulse-area error eps produces
//         a = cos(A (1+eps) / 2),   b = -i sin(A (1+eps) / 2) e^{i phi}.
//   * The target rotation gate is the real matrix
//         R(theta) = [[ cos(theta/2), sin(theta/2) ],
//                     [ -sin(theta/2), cos(theta/2) ]].
//     Under these conventions a single pi pulse of phase pi/2 is an exact
//     X gate [[0, 1], [-1, 0]].
//   * Pulses of a sequence are listed in the order they are applied; the
//     sequence propagator is U_N ... U_2 U_1 (first pulse = rightmost factor).
//
// All angles and areas are radians.  The CLI and file formats convert to
// units of pi at the boundary only.

#include <complex>
#include <array>
#include <cstddef>
#include <vector>

namespace cpgate {

using complexd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Wrap an angle into [0, 2*pi).
double canonical_phase(double phase);

/// Distance between two angles modulo 2*pi (always in [0, pi]).
double phase_distance(double x, double y);

/// SU(2) matrix [[a, b], [-conj(b), conj(a)]].
struct Su2Matrix {
    complexd a{1.0, 0.0};
    complexd b{0.0, 0.0};

    /// | |a|^2 + |b|^2 - 1 |, zero for an exact SU(2) element.
    double unitarity_defect() const;

    Su2Matrix dagger() const { return {std::conj(a), -b}; }

    /// Full 2x2 matrix, row major: {m11, m12, m21, m22}.
    std::array<complexd, 4> entries() const {
        return {a, b, -std::conj(b), std::conj(a)};
    }
};

/// Matrix product lhs * rhs (rhs acts first).
Su2Matrix operator*(const Su2Matrix& lhs, const Su2Matrix& rhs);

/// Max-norm of the entrywise difference between two propagators.
double max_entry_distance(const Su2Matrix& u, const Su2Matrix& v);

/// One pulse of a composite sequence.  Area is the nominal pulse area
/// (radians, > 0); phase is the composite phase, stored in [0, 2*pi).
struct Pulse {
    double area = pi;
    double phase = 0.0;
};

/// Validating constructor; canonicalizes the phase.
Pulse make_pulse(double area, double phase);

enum class Family {
    SymmetricX,    // 2n+1 nominal pi pulses, palindromic phases (theta = pi)
    SymmetricRot,  // alpha_{p1} pi_{p2} ... pi_{p2} alpha_{p1}
    AsymTheta,     // theta-area pulse followed by nominal pi pulses
    AsymAlphaBeta, // alpha ... pi ... beta
    Custom,
};

const char* family_name(Family f);            // "symmetric-x", ...
Family family_from_name(std::string_view s);  // throws std::invalid_argument

/// A composite pulse sequence together with the rotation angle it is meant
/// to implement.  Immutable by convention: build once, then share freely.
struct CompositeSequence {
    std::vector<Pulse> pulses;  // applied first-to-last
    double target_theta = pi;   // radians
    Family family = Family::Custom;
};

/// Validating constructor.  Checks the structural invariants of the family
/// (all-pi palindromic phases for SymmetricX, matched end pulses for
/// SymmetricRot) and rejects empty sequences.
CompositeSequence make_sequence(std::vector<Pulse> pulses, double target_theta,
                                Family family = Family::Custom);

/// Propagator of one resonant pulse at relative area error eps.
/// Requires area > 0, eps > -1, all inputs finite.
Su2Matrix pulse_propagator(double area, double phase, double eps);

/// Propagator of the whole sequence at error eps: U_N ... U_1.
/// An empty sequence is a domain error (identity is not a composite gate).
Su2Matrix compose(const CompositeSequence& seq, double eps);

/// Target gate R(theta); real entries a = cos(theta/2), b = sin(theta/2).
Su2Matrix target_rotation(double theta);

/// Phase gate F(phi) = diag(e^{i phi}, e^{-i phi}) = R_z(phi).
/// Only used to express gate equivalences such as
/// R_x(theta) = F(pi/4) R_y(theta) F(-pi/4).
Su2Matrix phase_gate(double phi);

/// Total nominal pulse area, sum of |A_k|.
double total_area(const CompositeSequence& seq);

/// Same, in units of pi.
double total_area_pi(const CompositeSequence& seq);

/// Concatenation (lhs applied first, then rhs).
CompositeSequence concat(const CompositeSequence& lhs,
                         const CompositeSequence& rhs);

} // namespace cpgate
