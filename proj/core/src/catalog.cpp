#include "cpgate/catalog.hpp"

#include "catalog_detail.hpp"
#include "cpgate/fidelity.hpp"
#include "cpgate/series.hpp"
#include "cpgate/solver.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cpgate {
namespace catalog {

namespace {

std::string format(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string join_pi(const std::vector<Pulse>& pulses, bool areas) {
    std::string out;
    for (std::size_t k = 0; k < pulses.size(); ++k) {
        if (k) out += ' ';
        out += format("%.15g", (areas ? pulses[k].area : pulses[k].phase) / pi);
    }
    return out;
}

} // namespace

const std::vector<NamedSequence>& all() {
    static const std::vector<NamedSequence> records = detail::build_all_records();
    return records;
}

const NamedSequence* find(std::string_view name) {
    for (const NamedSequence& rec : all()) {
        if (rec.name == name) return &rec;
        for (const std::string& alias : rec.aliases)
            if (alias == name) return &rec;
    }
    return nullptr;
}

const NamedSequence& get(std::string_view name) {
    const NamedSequence* rec = find(name);
    if (!rec)
        throw std::invalid_argument("unknown sequence name: " +
                                    std::string(name));
    return *rec;
}

std::vector<const NamedSequence*> list(const ListFilter& filter) {
    std::vector<const NamedSequence*> out;
    for (const NamedSequence& rec : all()) {
        if (filter.family && rec.sequence.family != *filter.family) continue;
        if (filter.order && rec.claimed_order != *filter.order) continue;
        if (filter.theta_pi &&
            std::fabs(rec.theta_pi() - *filter.theta_pi) > 1e-9)
            continue;
        out.push_back(&rec);
    }
    return out;
}

EntryReport verify_entry(const NamedSequence& entry,
                         const VerifyOptions& options) {
    EntryReport report;
    report.name = entry.name;
    const int n = entry.claimed_order;
    const Su2Matrix target = target_rotation(entry.sequence.target_theta);

    // gate condition at eps = 0, tabulated precision
    {
        CheckResult check{"gate", true, true, ""};
        const double tol =
            options.gate_tol
                ? *options.gate_tol
                : 1.5 * 5e-5 * pi *
                      static_cast<double>(entry.sequence.pulses.size());
        const double err =
            max_entry_distance(compose(entry.sequence, 0.0), target);
        check.passed = err <= tol;
        check.detail = "eps=0 error " + format("%.2e", err) + " (tol " +
                       format("%.2e", tol) + ")";
        report.checks.push_back(check);
    }

    // re-polish; order and range checks run on the refined parameters
    bool polished_ok = false;
    CompositeSequence refined = entry.sequence;
    double polish_residual = 0.0;
    double polish_shift = 0.0;
    bool basin_escape = false;
    try {
        PolishResult result = polish(entry.sequence, n);
        refined = result.solution.sequence;
        polish_residual = result.solution.residual_norm;
        polish_shift = result.max_param_shift;
        basin_escape = result.basin_escape;
        polished_ok = !basin_escape;
    } catch (const PolishDivergence&) {
        polished_ok = false;
    }
    const CompositeSequence& working = polished_ok ? refined : entry.sequence;

    // compensation order via the log-log slope of the infidelity
    {
        CheckResult check{"order", true, true, ""};
        const SlopeEstimate slope =
            order_slope_estimate(working, working.target_theta);
        if (slope.machine_limited) {
            check.passed = false;
            check.detail = "slope machine-limited";
        } else {
            check.passed = std::fabs(slope.slope - (n + 1)) <= 0.15;
            check.detail = "slope " + format("%.3f", slope.slope) +
                           " for claimed order " + std::to_string(n);
        }
        if (!polished_ok) check.detail += " (unpolished)";
        if (options.strict) {
            const OrderReport coeffs = compensation_order(
                working, working.target_theta, options.coeff_tol, n + 3);
            if (coeffs.order != n) {
                check.passed = false;
                check.detail += "; coefficient order " +
                                std::to_string(coeffs.order);
            }
            const double polished_err =
                max_entry_distance(compose(working, 0.0), target);
            if (!polished_ok || polished_err > 1e-10) {
                check.passed = false;
                check.detail += "; polished gate error " +
                                format("%.2e", polished_err);
            }
            check.detail += "; polish residual " +
                            format("%.2e", polish_residual) + ", max shift " +
                            format("%.2e", polish_shift / pi) + " pi";
        }
        report.checks.push_back(check);
    }

    // total pulse area against the published claim
    {
        CheckResult check{"area", true, true, ""};
        if (entry.claimed_total_area_pi) {
            const double area = total_area_pi(entry.sequence);
            check.passed =
                std::fabs(area - *entry.claimed_total_area_pi) <= 0.01;
            check.detail = format("%.4f", area) + " pi vs claimed " +
                           format("%.2f", *entry.claimed_total_area_pi) + " pi";
        } else {
            check.applicable = false;
            check.detail = "no claim";
        }
        report.checks.push_back(check);
    }

    // high-fidelity range against the published claim
    {
        CheckResult check{"range", true, true, ""};
        if (entry.claimed_range_pi) {
            const double tol = entry.range_claim_is_order_class ? 5e-3 : 1e-3;
            try {
                const HighFidelityRange range =
                    high_fidelity_range(working, working.target_theta, 1e-4);
                const double lo = range.area_lo_pi();
                const double hi = range.area_hi_pi();
                check.passed =
                    std::fabs(lo - entry.claimed_range_pi->first) <= tol &&
                    std::fabs(hi - entry.claimed_range_pi->second) <= tol;
                check.detail = "[" + format("%.4f", lo) + ", " +
                               format("%.4f", hi) + "] pi vs claimed [" +
                               format("%.3f", entry.claimed_range_pi->first) +
                               ", " +
                               format("%.3f", entry.claimed_range_pi->second) +
                               "] pi";
                if (entry.range_claim_is_order_class)
                    check.detail += " (order-class claim, tol 5e-3)";
            } catch (const std::domain_error& err) {
                check.passed = false;
                check.detail = err.what();
            }
        } else {
            check.applicable = false;
            check.detail = "no claim";
        }
        report.checks.push_back(check);
    }

    for (const CheckResult& check : report.checks)
        if (check.applicable && !check.passed) report.passed = false;
    return report;
}

VerifyReport verify_all(const VerifyOptions& options) {
    VerifyReport report;
    for (const NamedSequence& rec : all()) {
        report.entries.push_back(verify_entry(rec, options));
        if (!report.entries.back().passed) report.all_passed = false;
    }
    return report;
}

std::string VerifyReport::to_string() const {
    std::ostringstream out;
    for (const EntryReport& entry : entries) {
        out << (entry.passed ? "PASS " : "FAIL ") << entry.name;
        for (const CheckResult& check : entry.checks) {
            out << " | " << check.check << ' ';
            if (!check.applicable)
                out << "n/a";
            else
                out << (check.passed ? "ok" : "FAIL");
            out << " (" << check.detail << ')';
        }
        out << '\n';
    }
    out << (all_passed ? "ALL PASS" : "FAILURES PRESENT") << " ("
        << entries.size() << " sequences)\n";
    return out.str();
}

std::string export_records() {
    std::string out;
    for (const NamedSequence& rec : all()) {
        out += "name: " + rec.name + "\n";
        out += "family: ";
        out += family_name(rec.sequence.family);
        out += "\n";
        out += "theta_pi: " + format("%.15g", rec.theta_pi()) + "\n";
        out += "areas_pi: " + join_pi(rec.sequence.pulses, true) + "\n";
        out += "phases_pi: " + join_pi(rec.sequence.pulses, false) + "\n";
        out += "claimed_order: " + std::to_string(rec.claimed_order) + "\n";
        if (rec.claimed_range_pi)
            out += "claimed_range_pi: " +
                   format("%.6g", rec.claimed_range_pi->first) + " " +
                   format("%.6g", rec.claimed_range_pi->second) + "\n";
        if (rec.claimed_total_area_pi)
            out += "claimed_total_area_pi: " +
                   format("%.4g", *rec.claimed_total_area_pi) + "\n";
        out += "source: " + rec.source + "\n\n";
    }
    return out;
}

std::string export_csv() {
    std::string out =
        "name,family,theta_pi,claimed_order,claimed_range_lo_pi,"
        "claimed_range_hi_pi,claimed_total_area_pi,total_area_pi,"
        "areas_pi,phases_pi,source\n";
    for (const NamedSequence& rec : all()) {
        out += rec.name;
        out += ',';
        out += family_name(rec.sequence.family);
        out += ',' + format("%.15g", rec.theta_pi());
        out += ',' + std::to_string(rec.claimed_order);
        out += ',';
        if (rec.claimed_range_pi) out += format("%.6g", rec.claimed_range_pi->first);
        out += ',';
        if (rec.claimed_range_pi) out += format("%.6g", rec.claimed_range_pi->second);
        out += ',';
        if (rec.claimed_total_area_pi)
            out += format("%.4g", *rec.claimed_total_area_pi);
        out += ',' + format("%.15g", total_area_pi(rec.sequence));
        std::string areas = join_pi(rec.sequence.pulses, true);
        std::string phases = join_pi(rec.sequence.pulses, false);
        for (std::string* s : {&areas, &phases})
            for (char& c : *s)
                if (c == ' ') c = ';';
        out += ',' + areas + ',' + phases;
        out += ",\"" + rec.source + "\"\n";
    }
    return out;
}

} // namespace catalog
} // namespace cpgate
