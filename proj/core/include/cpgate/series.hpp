#pragma once
// series.hpp — truncated power series in the pulse-area error and the
// compensation order of a composite sequence.
//
// The m-th coefficient of a series is the m-th Taylor coefficient at eps = 0,
// i.e. the m-th derivative divided by m!.  Per-pulse coefficients are closed
// form, so a compose_series() coefficient is exact to rounding at any order;
// no symbolic algebra and no numerical differentiation is involved.

#include "cpgate/su2.hpp"

#include <vector>

namespace cpgate {

/// Truncated power series sum_m c_m eps^m, m = 0..truncation_order.
class EpsSeries {
public:
    EpsSeries() : coeffs_(1, complexd(0.0)) {}
    explicit EpsSeries(int truncation_order);

    static EpsSeries constant(complexd value, int truncation_order);

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    complexd& operator[](int m) { return coeffs_[static_cast<std::size_t>(m)]; }
    const complexd& operator[](int m) const {
        return coeffs_[static_cast<std::size_t>(m)];
    }

    EpsSeries& operator+=(const EpsSeries& other);
    EpsSeries& operator-=(const EpsSeries& other);
    EpsSeries& operator*=(complexd scale);

    /// Cauchy product truncated at the common truncation order.
    friend EpsSeries operator*(const EpsSeries& lhs, const EpsSeries& rhs);
    friend EpsSeries operator+(EpsSeries lhs, const EpsSeries& rhs);
    friend EpsSeries operator-(EpsSeries lhs, const EpsSeries& rhs);

    /// Coefficient-wise complex conjugate (eps is real).
    EpsSeries conjugate() const;

    /// Horner evaluation at a given eps.
    complexd eval(double eps) const;

private:
    std::vector<complexd> coeffs_;  // index m = coefficient of eps^m
};

/// Series-valued propagator: the (1,1) and (1,2) entries of the composite
/// propagator as power series in eps.  The remaining entries follow from the
/// SU(2) structure.
struct Su2Series {
    EpsSeries a;
    EpsSeries b;

    /// Largest magnitude among the coefficients of |a|^2 + |b|^2 - 1;
    /// unitarity order by order.
    double unitarity_defect() const;
};

/// Exact Taylor coefficients of one pulse propagator:
///   a_m = (A/2)^m / m! cos(A/2 + m pi/2),
///   b_m = -i e^{i phi} (A/2)^m / m! sin(A/2 + m pi/2).
/// truncation_order must lie in [0, 64].
Su2Series pulse_series(double area, double phase, int truncation_order);

/// Truncated product of the per-pulse series, first pulse rightmost.
Su2Series compose_series(const CompositeSequence& seq, int truncation_order);

/// Result of the coefficient-based compensation-order test.
struct OrderReport {
    int order = 0;              // largest n with all coefficients <= tol
    bool zeroth_ok = false;     // gate condition at eps = 0 within tol
    double zeroth_error = 0.0;  // max of |a(0)-cos|, |b(0)-sin|
    int leading_index = -1;     // order of the first violating coefficient
    double leading_error = 0.0; // its magnitude (0 when truncated clean)
    int truncation = 0;         // highest order examined
};

/// Determine the compensation order of a sequence for target angle theta.
/// Comparison against tol is inclusive (<= tol passes).  When the zeroth
/// order test fails the report carries order 0 with zeroth_ok = false.
OrderReport compensation_order(const CompositeSequence& seq, double theta,
                               double tol, int max_order = 12);

/// Log-log slope of the Frobenius infidelity versus |eps|; for an order-n
/// sequence the slope is n+1.  Sample magnitudes are chosen adaptively so
/// that the fit stays above the double-precision noise floor and below the
/// onset of higher-order corrections.
struct SlopeEstimate {
    double slope = 0.0;
    bool machine_limited = false;  // not enough resolvable samples
    int points_used = 0;
};

SlopeEstimate order_slope_estimate(const CompositeSequence& seq, double theta);

} // namespace cpgate
