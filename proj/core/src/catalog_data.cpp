// Raw published sequence data and its materialization into catalog records.
//
// Values are kept exactly as tabulated (units of pi, 4 decimals) unless a
// closed form exists, in which case the closed form is used and the rounded
// value is recovered by printing.  Two adjustments are applied while
// materializing, both exact symmetries of the design conditions:
//
//   * Palindromic all-pi X rows list phi_1..phi_n and the middle phase; the
//     middle phase is reconstructed from the zeroth-order phase relation,
//     which makes the eps = 0 gate exact instead of 4-decimal accurate.
//   * Rows published in a different global phase gauge (the tabulated gauges
//     are not uniform) are shifted by a constant offset in {0, pi/2, pi,
//     3pi/2} chosen so that the sequence composes to R(theta) at eps = 0
//     under this library's convention.  A shift maps the propagator to
//     F(d/2) U F(-d/2) for all eps, so fidelity profiles and compensation
//     orders are untouched.  Applied shifts are noted in the source tag.

#include "catalog_detail.hpp"

#include "cpgate/solver.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpgate {
namespace catalog {
namespace detail {

namespace {

using Range = std::pair<double, double>;

NamedSequence make_record(std::string name, CompositeSequence seq, int order,
                          std::optional<Range> range_pi,
                          std::optional<double> area_pi, std::string source,
                          std::vector<std::string> aliases = {}) {
    NamedSequence rec;
    rec.name = std::move(name);
    rec.sequence = std::move(seq);
    rec.claimed_order = order;
    rec.claimed_range_pi = range_pi;
    rec.claimed_total_area_pi = area_pi;
    rec.source = std::move(source);
    rec.aliases = std::move(aliases);
    return rec;
}

// Pick the constant phase offset under which the sequence realizes R(theta).
CompositeSequence apply_gauge(std::vector<Pulse> pulses, double theta,
                              Family family, std::string& source) {
    static constexpr double kOffsets[] = {0.0, pi, 0.5 * pi, 1.5 * pi};
    static const char* const kNotes[] = {"", "; phases shifted by pi",
                                         "; phases shifted by pi/2",
                                         "; phases shifted by 3pi/2"};
    const Su2Matrix target = target_rotation(theta);
    double best_err = 1e99;
    int best = 0;
    for (int k = 0; k < 4; ++k) {
        std::vector<Pulse> shifted = pulses;
        for (Pulse& p : shifted)
            p.phase = canonical_phase(p.phase + kOffsets[k]);
        const CompositeSequence candidate =
            make_sequence(std::move(shifted), theta, family);
        const double err = max_entry_distance(compose(candidate, 0.0), target);
        if (err < best_err) {
            best_err = err;
            best = k;
        }
    }
    if (best_err > 0.02)
        throw std::logic_error("catalog row fails the gate condition in "
                               "every phase gauge");
    for (Pulse& p : pulses)
        p.phase = canonical_phase(p.phase + kOffsets[best]);
    source += kNotes[best];
    return make_sequence(std::move(pulses), theta, family);
}

// Palindromic all-pi X sequence from phi_1..phi_n (the middle phase comes
// from the zeroth-order relation).
CompositeSequence x_sequence(const std::vector<double>& leading_phases_rad) {
    std::vector<double> phases = leading_phases_rad;
    phases.push_back(symmetric_x_phase_relations(leading_phases_rad).next_phase);
    const int half = static_cast<int>(phases.size());
    std::vector<Pulse> pulses;
    for (int k = 0; k < 2 * half - 1; ++k) {
        const int idx = k < half ? k : 2 * half - 2 - k;
        pulses.push_back(make_pulse(pi, phases[idx]));
    }
    return make_sequence(std::move(pulses), pi, Family::SymmetricX);
}

NamedSequence x_row(std::string name, int order,
                    std::initializer_list<double> phases_pi, Range range) {
    std::vector<double> leading;
    int k = 0;
    for (double p : phases_pi) {
        if (k++ == order) break;  // printed middle value is provenance only
        leading.push_back(p * pi);
    }
    return make_record(std::move(name), x_sequence(leading), order, range,
                       std::nullopt,
                       "x-table; middle phase from the zeroth-order relation");
}

// Symmetric rotation sequence alpha_{p1} pi_{p2} ... pi_{p2} alpha_{p1}.
std::vector<Pulse> rot_pulses(double alpha_pi,
                              const std::vector<double>& phases_pi) {
    const int half = static_cast<int>(phases_pi.size());
    std::vector<Pulse> pulses;
    for (int k = 0; k < 2 * half - 1; ++k) {
        const int idx = k < half ? k : 2 * half - 2 - k;
        const bool cap = (k == 0 || k == 2 * half - 2);
        pulses.push_back(
            make_pulse((cap ? alpha_pi : 1.0) * pi, phases_pi[idx] * pi));
    }
    return pulses;
}

NamedSequence rot_row(std::string name, int order, double theta_pi,
                      double alpha_pi, std::vector<double> phases_pi,
                      std::optional<Range> range, std::optional<double> area,
                      std::string source, std::vector<std::string> aliases = {}) {
    std::string tagged = std::move(source);
    CompositeSequence seq = apply_gauge(rot_pulses(alpha_pi, phases_pi),
                                        theta_pi * pi, Family::SymmetricRot,
                                        tagged);
    return make_record(std::move(name), std::move(seq), order, range, area,
                       std::move(tagged), std::move(aliases));
}

// theta-area pulse followed by nominal pi pulses, phases as listed.
NamedSequence w_row(std::string name, int order, double theta_pi,
                    std::vector<double> phases_pi, double area_pi, Range range,
                    std::string extra = "") {
    std::vector<Pulse> pulses;
    pulses.push_back(make_pulse(theta_pi * pi, phases_pi[0] * pi));
    for (std::size_t k = 1; k < phases_pi.size(); ++k)
        pulses.push_back(make_pulse(pi, phases_pi[k] * pi));
    std::string source = "hadamard-table/bb1-like" + extra;
    CompositeSequence seq = apply_gauge(std::move(pulses), theta_pi * pi,
                                        Family::AsymTheta, source);
    NamedSequence rec = make_record(std::move(name), std::move(seq), order,
                                    range, area_pi, std::move(source));
    rec.range_claim_is_order_class = true;
    return rec;
}

NamedSequence a_row(std::string name, int order, double alpha_pi,
                    double beta_pi, std::vector<double> phases_pi,
                    double area_pi, Range range) {
    std::vector<Pulse> pulses;
    const std::size_t count = phases_pi.size();
    for (std::size_t k = 0; k < count; ++k) {
        double area = 1.0;
        if (k == 0) area = alpha_pi;
        if (k == count - 1) area = beta_pi;
        pulses.push_back(make_pulse(area * pi, phases_pi[k] * pi));
    }
    std::string source = "hadamard-table/asymmetric";
    CompositeSequence seq = apply_gauge(std::move(pulses), 0.5 * pi,
                                        Family::AsymAlphaBeta, source);
    NamedSequence rec = make_record(std::move(name), std::move(seq), order,
                                    range, area_pi, std::move(source));
    rec.range_claim_is_order_class = true;
    return rec;
}

} // namespace

std::vector<NamedSequence> build_all_records() {
    std::vector<NamedSequence> records;
    records.reserve(90);

    // --- X gate, palindromic nominal pi pulses -------------------------
    records.push_back(make_record(
        "single",
        make_sequence({make_pulse(pi, 0.5 * pi)}, pi, Family::SymmetricX), 0,
        Range{0.99991, 1.00009}, std::nullopt, "x-table", {"single-pi"}));

    records.push_back(make_record(
        "X3", x_sequence({pi / 6.0}), 1, Range{0.992, 1.008}, std::nullopt,
        "x-table; exact phases pi/6, 5pi/6"));

    const double x5_phi1 = std::asin(1.0 - std::sqrt(5.0 / 8.0));
    const double x5_phi2 = std::asin((3.0 * std::sqrt(10.0) - 2.0) / 8.0);
    records.push_back(make_record(
        "X5", x_sequence({x5_phi1, x5_phi2}), 2, Range{0.964, 1.036},
        std::nullopt, "x-table; arcsin closed forms"));

    records.push_back(
        x_row("X7", 3, {0.2560, 1.6839, 0.5933, 0.8306}, {0.925, 1.075}));
    records.push_back(x_row("X9", 4, {0.3951, 1.2211, 0.7806, 1.9335, 0.4580},
                            {0.883, 1.117}));
    records.push_back(x_row("X11", 5,
                            {0.2984, 1.8782, 1.1547, 0.0982, 0.6883, 0.8301},
                            {0.843, 1.157}));
    records.push_back(
        x_row("X13", 6, {0.8800, 0.6048, 1.4357, 0.9817, 0.0781, 0.5025, 1.8904},
              {0.807, 1.193}));
    records.push_back(x_row("X15", 7,
                            {0.5672, 1.4322, 0.9040, 0.2397, 0.9118, 0.5426,
                             1.6518, 0.1406},
                            {0.773, 1.227}));
    records.push_back(x_row("X17", 8,
                            {0.3604, 1.1000, 0.7753, 1.6298, 1.2338, 0.2969,
                             0.6148, 1.9298, 0.4443},
                            {0.743, 1.257}));

    // --- second-order X variants with one 2 pi pulse --------------------
    const double chi = std::asin(0.25);
    const Range x4_range{0.964, 1.036};
    const auto x4 = [&](std::string name, std::vector<Pulse> pulses) {
        return make_record(
            std::move(name),
            make_sequence(std::move(pulses), pi, Family::Custom), 2, x4_range,
            5.0, "x-second-order-set; chi = arcsin(1/4)");
    };
    records.push_back(x4("X4-1", {make_pulse(2.0 * pi, 3.0 * chi),
                                  make_pulse(pi, pi + chi),
                                  make_pulse(pi, 0.5 * pi),
                                  make_pulse(pi, -chi)}));
    records.push_back(x4("X4-2", {make_pulse(pi, pi + chi),
                                  make_pulse(2.0 * pi, 3.0 * chi),
                                  make_pulse(pi, pi + chi),
                                  make_pulse(pi, 0.5 * pi)}));
    records.push_back(x4("X4-3", {make_pulse(pi, 0.5 * pi),
                                  make_pulse(pi, pi + chi),
                                  make_pulse(2.0 * pi, 3.0 * chi),
                                  make_pulse(pi, pi + chi)}));
    records.push_back(x4("X4-4", {make_pulse(pi, -chi),
                                  make_pulse(pi, 0.5 * pi),
                                  make_pulse(pi, pi + chi),
                                  make_pulse(2.0 * pi, 3.0 * chi)}));

    {
        // Asymmetric five-pulse X sequence, arcsin closed forms.
        const double s31 = std::sqrt(31.0);
        std::vector<double> phases = {
            0.0, std::asin((14.0 + s31) / 20.0),
            pi + std::asin((9.0 * s31 - 19.0) / 80.0),
            std::asin((9.0 * s31 + 19.0) / 80.0),
            std::asin((14.0 - s31) / 20.0)};
        std::vector<Pulse> pulses;
        for (double p : phases) pulses.push_back(make_pulse(pi, p));
        records.push_back(make_record(
            "X5a", make_sequence(std::move(pulses), pi, Family::AsymTheta), 2,
            x4_range, 5.0, "x-second-order-set; arcsin closed forms"));
    }

    // --- BB1, four- and five-pulse writings ----------------------------
    // The Wimperis phase for a theta rotation is arccos(-theta/(4 pi)); for
    // the Hadamard that is arccos(-1/8) ~ 0.5401 pi.  The tabulated
    // arcsin(1/4) is the X-gate value and leaves a first-order coefficient
    // of 4.9, so the corrected phase is stored.
    const double bb1_chi = std::acos(-0.125);
    {
        std::string source =
            "bb1; chi read as arccos(-1/8), the quoted arcsin(1/4) is the "
            "X-gate phase and fails the first-order conditions";
        CompositeSequence bb1 = apply_gauge(
            {make_pulse(0.5 * pi, 0.0), make_pulse(pi, bb1_chi),
             make_pulse(2.0 * pi, 3.0 * bb1_chi), make_pulse(pi, bb1_chi)},
            0.5 * pi, Family::Custom, source);
        records.push_back(make_record("BB1", std::move(bb1), 2, std::nullopt,
                                      4.5, std::move(source)));
    }
    {
        std::string source = "bb1; five-pulse writing, chi = arccos(-1/8)";
        CompositeSequence bb15 = apply_gauge(
            {make_pulse(0.5 * pi, 0.0), make_pulse(pi, bb1_chi),
             make_pulse(pi, 3.0 * bb1_chi), make_pulse(pi, 3.0 * bb1_chi),
             make_pulse(pi, bb1_chi)},
            0.5 * pi, Family::AsymTheta, source);
        records.push_back(make_record("BB1-5", std::move(bb15), 2,
                                      std::nullopt, 4.5, std::move(source)));
    }

    // --- Hadamard, symmetric rows ---------------------------------------
    const char* hs = "hadamard-table/symmetric";
    records.push_back(rot_row("H3s", 1, 0.5, 0.6399, {1.8442, 1.0587},
                              Range{0.988, 1.012}, 2.28, hs,
                              {"H3", "SCROFULOUS-H", "ROT-1/2-3"}));
    records.push_back(rot_row("H5s", 2, 0.5, 0.45, {1.9494, 0.5106, 1.3179},
                              Range{0.952, 1.048}, 3.90, hs, {"ROT-1/2-5"}));
    records.push_back(rot_row("H7s", 3, 0.5, 0.2769,
                              {1.6803, 0.2724, 0.8255, 1.6624},
                              Range{0.905, 1.095}, 5.55, hs, {"ROT-1/2-7"}));
    records.push_back(rot_row("H9s", 4, 0.5, 0.2947,
                              {0.2711, 1.1069, 1.5283, 0.1283, 0.9884},
                              Range{0.857, 1.143}, 7.59, hs, {"ROT-1/2-9"}));
    records.push_back(rot_row("H11s", 5, 0.5, 0.2985,
                              {1.7377, 0.1651, 0.9147, 0.1510, 0.9331, 1.6415},
                              Range{0.814, 1.186}, 9.60, hs));
    records.push_back(rot_row(
        "H13s", 6, 0.5, 0.5065,
        {0.0065, 1.7755, 0.7155, 0.5188, 0.2662, 1.2251, 1.3189},
        Range{0.776, 1.224}, 12.01, hs));
    // The tabulated alpha = 0.3213 fails the eps = 0 gate condition by
    // 2e-2, 40x the 4-decimal rounding budget; re-polish moves only alpha,
    // to 0.3132 (transposed digits), and confirms all eight phases.  The
    // area claim follows alpha: 2*0.3132 + 13 = 13.63.
    records.push_back(rot_row(
        "H15s", 7, 0.5, 0.3132,
        {1.2316, 0.9204, 0.2043, 1.9199, 0.8910, 0.7381, 1.9612, 1.3649},
        Range{0.740, 1.260}, 13.63,
        std::string(hs) +
            "; typo-resolved: alpha 0.3213 read as 0.3132, area claim 13.64 "
            "adjusted to 13.63"));

    // --- Hadamard, BB1-like rows ----------------------------------------
    records.push_back(w_row("H5w", 2, 0.5,
                            {0.5, 1.0399, 0.1197, 0.1197, 1.0399}, 4.50,
                            {0.952, 1.048}));
    records.push_back(w_row(
        "H7w", 3, 0.5, {0.5, 1.4581, 0.7153, 0.1495, 1.3738, 0.2568, 0.7752},
        6.50, {0.905, 1.095}));
    records.push_back(w_row("H9w", 4, 0.5,
                            {0.5, 1.1990, 0.3622, 0.6007, 1.6773, 1.7779,
                             0.6773, 0.4124, 1.2732},
                            8.50, {0.857, 1.143},
                            "; typo-resolved: 04124 read as 0.4124"));
    records.push_back(w_row("H11w", 5, 0.5,
                            {0.5, 0.7807, 0.1769, 1.4678, 0.1085, 1.0174,
                             0.2988, 0.8883, 1.2697, 0.3773, 1.6775},
                            10.50, {0.814, 1.186}));
    records.push_back(w_row("H13w", 6, 0.5,
                            {0.5, 1.3795, 0.5435, 0.5111, 1.3032, 0.4295,
                             1.7578, 1.4181, 0.3340, 0.4403, 1.7563, 0.6708,
                             1.1544},
                            12.50, {0.776, 1.224}));

    // --- Hadamard, alpha/beta-capped rows --------------------------------
    records.push_back(a_row("H4a", 2, 0.7821, 1.3914,
                            {1.8226, 0.6492, 1.2131, 0.3071}, 4.17,
                            {0.952, 1.048}));
    records.push_back(a_row("H6a", 3, 0.5917, 1.1305,
                            {1.5943, 0.2860, 0.8435, 1.6553, 0.7962, 0.2523},
                            5.72, {0.905, 1.095}));
    {
        // As printed (alpha 0.4954, beta 0.9028, phases 1.5971, 0.7674,
        // 0.5721, 1.8487, 1.0592, 1.9512, 0.3824, 0.9846) the row misses the
        // eps = 0 gate by 2e-2: the tabulated digits carry only ~3-decimal
        // convergence.  Re-polish finds the unique order-4 solution 0.005 pi
        // away; its 4-decimal rounding is stored.
        NamedSequence rec =
            a_row("H8a", 4, 0.4942, 0.8986,
                  {1.6012, 0.7728, 0.5684, 1.8490, 1.0553, 1.9558, 0.3852,
                   0.9815},
                  7.40, {0.857, 1.143});
        rec.source +=
            "; precision-resolved: tabulated digits converged to ~3 decimals, "
            "refined to the adjacent order-4 solution";
        records.push_back(std::move(rec));
    }
    records.push_back(a_row("H10a", 5, 0.6041, 1.1819,
                            {1.3480, 0.9259, 0.0292, 0.7288, 0.0996, 1.3909,
                             0.0183, 0.9322, 0.2169, 0.7975},
                            9.79, {0.814, 1.186}));
    records.push_back(a_row("H12a", 6, 0.4168, 0.8841,
                            {1.5817, 1.1160, 0.3751, 0.9583, 0.1333, 1.9445,
                             1.0381, 1.6293, 0.4845, 0.0046, 0.8278, 0.7416},
                            11.30, {0.776, 1.224}));

    // --- general rotation table (theta = 1/2 rows alias the Hadamard
    //     records above) ---------------------------------------------------
    struct RotCell {
        double alpha;
        std::vector<double> phases;
    };
    struct RotGroup {
        const char* tag;
        double theta_pi;
        RotCell cells[4];  // 3, 5, 7, 9 pulses
    };
    static const RotGroup rotation_table[] = {
        {"1/10", 0.1,
         {{0.5061, {1.0389, 1.9892}},
          {0.4548, {0.6416, 1.5230, 0.4258}},
          {0.4625, {0.7317, 1.8366, 1.0783, 0.1821}},
          {0.5125, {1.9200, 0.8412, 1.5473, 0.2812, 1.1816}}}},
        {"1/8", 0.125,
         {{0.5096, {1.0483, 1.9865}},
          {0.4453, {0.6626, 1.5245, 0.4168}},
          {0.4500, {0.7069, 1.8222, 1.0860, 0.1970}},
          {0.5101, {1.9490, 0.8687, 1.5489, 0.2665, 1.1618}}}},
        {"1/6", 1.0 / 6.0,
         {{0.5169, {1.0636, 1.9819}},
          {0.4315, {0.6964, 1.5259, 0.4032}},
          {0.4277, {0.6691, 1.8020, 1.0976, 0.2183}},
          {0.5022, {1.9918, 0.9092, 1.5502, 0.2455, 1.1340}}}},
        {"1/5", 0.2,
         {{0.5242, {1.0754, 1.9782}},
          {0.4225, {0.7231, 1.5263, 0.3934}},
          {0.4090, {0.6404, 1.7886, 1.1061, 0.2334}},
          {0.4926, {0.0229, 0.9382, 1.5502, 0.2308, 1.1148}}}},
        {"1/4", 0.25,
         {{0.5375, {1.0921, 1.9726}},
          {0.4129, {0.7630, 1.5259, 0.3796}},
          {0.3803, {0.5977, 1.7717, 1.1181, 0.2536}},
          {0.4729, {0.0661, 0.9770, 1.5491, 0.2110, 1.0894}}}},
        {"1/3", 1.0 / 3.0,
         {{0.5653, {1.1173, 1.9628}},
          {0.4087, {0.8293, 1.5231, 0.3583}},
          {0.3336, {0.5212, 1.7505, 1.1370, 0.2836}},
          {0.4269, {0.1326, 1.0314, 1.5448, 0.1815, 1.0525}}}},
        {"2/3", 2.0 / 3.0,
         {{0.7365, {1.1779, 1.9155}},
          {0.5563, {1.0329, 1.4886, 0.2746}},
          {0.3410, {0.1020, 1.7252, 1.2168, 0.3923}},
          {0.1700, {0.5700, 1.1449, 1.5009, 0.0735, 0.9254}}}},
        {"3/4", 0.75,
         {{0.7925, {1.1827, 1.9000}},
          {0.6322, {1.0585, 1.4728, 0.2498}},
          {0.4269, {0.0309, 1.7317, 1.2421, 0.4230}},
          {0.2045, {0.8134, 1.1515, 1.4816, 0.0423, 0.8905}}}},
        {"4/5", 0.8,
         {{0.8288, {1.1834, 1.8895}},
          {0.6857, {1.0688, 1.4613, 0.2332}},
          {0.4947, {0.0017, 1.7386, 1.2595, 0.4436}},
          {0.2726, {0.9091, 1.1514, 1.4674, 0.0212, 0.8672}}}},
        {"5/6", 5.0 / 6.0,
         {{0.8542, {1.1829, 1.8819}},
          {0.7251, {1.0735, 1.4526, 0.2210}},
          {0.5474, {1.9872, 1.7446, 1.2725, 0.4586}},
          {0.3336, {0.9507, 1.1495, 1.4564, 0.0055, 0.8501}}}},
        {"7/8", 0.875,
         {{0.8874, {1.1812, 1.8717}},
          {0.7795, {1.0770, 1.4401, 0.2044}},
          {0.6234, {1.9741, 1.7542, 1.2907, 0.4795}},
          {0.4275, {0.9853, 1.1446, 1.4404, 1.9837, 0.8264}}}},
        {"9/10", 0.9,
         {{0.9083, {1.1795, 1.8650}},
          {0.8154, {1.0777, 1.4316, 0.1934}},
          {0.6759, {1.96887, 1.7613, 1.3030, 0.4935}},
          {0.4952, {0.9992, 1.1402, 1.4291, 1.9688, 0.8103}}}},
    };

    for (const RotGroup& group : rotation_table) {
        for (int cell = 0; cell < 4; ++cell) {
            const int pulses = 3 + 2 * cell;
            const std::string name = std::string("ROT-") + group.tag + "-" +
                                     std::to_string(pulses);
            records.push_back(rot_row(name, cell + 1, group.theta_pi,
                                      group.cells[cell].alpha,
                                      group.cells[cell].phases, std::nullopt,
                                      std::nullopt, "rotation-table"));
        }
    }

    return records;
}

} // namespace detail
} // namespace catalog
} // namespace cpgate
