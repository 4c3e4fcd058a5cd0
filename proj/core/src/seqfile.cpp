#include "cpgate/seqfile.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cpgate {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw std::invalid_argument("sequence file, line " + std::to_string(line) +
                                ": " + message);
}

double parse_number(const std::string& text, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) fail(line, "trailing junk after number");
        return v;
    } catch (const std::invalid_argument&) {
        fail(line, "expected a number, got '" + text + "'");
    } catch (const std::out_of_range&) {
        fail(line, "number out of range: '" + text + "'");
    }
}

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

} // namespace

SequenceFile parse_sequence_file(std::istream& in) {
    SequenceFile file;
    std::vector<Pulse> pulses;
    std::optional<double> theta_pi;
    Family family = Family::Custom;
    bool have_name = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) fail(line_no, "expected 'key: value'");
        const std::string key = trim(line.substr(0, colon));
        const std::string value = trim(line.substr(colon + 1));

        if (key == "name") {
            file.name = value;
            have_name = true;
        } else if (key == "family") {
            try {
                family = family_from_name(value);
            } catch (const std::invalid_argument& err) {
                fail(line_no, err.what());
            }
        } else if (key == "theta_pi") {
            theta_pi = parse_number(value, line_no);
        } else if (key == "pulse") {
            double area_pi = 0.0, phase_pi = 0.0;
            bool have_area = false, have_phase = false;
            std::istringstream fields(value);
            std::string field;
            while (fields >> field) {
                const auto eq = field.find('=');
                if (eq == std::string::npos)
                    fail(line_no, "pulse fields look like area_pi=<v>");
                const std::string fkey = field.substr(0, eq);
                const double fval = parse_number(field.substr(eq + 1), line_no);
                if (fkey == "area_pi") {
                    area_pi = fval;
                    have_area = true;
                } else if (fkey == "phase_pi") {
                    phase_pi = fval;
                    have_phase = true;
                } else {
                    fail(line_no, "unknown pulse field '" + fkey + "'");
                }
            }
            if (!have_area || !have_phase)
                fail(line_no, "pulse needs area_pi and phase_pi");
            if (!(area_pi > 0.0)) fail(line_no, "pulse area must be positive");
            pulses.push_back(make_pulse(area_pi * pi, phase_pi * pi));
        } else if (key == "claimed_order") {
            const double v = parse_number(value, line_no);
            if (v < 0 || v != static_cast<int>(v))
                fail(line_no, "claimed_order must be a non-negative integer");
            file.claimed_order = static_cast<int>(v);
        } else if (key == "claimed_range_pi") {
            std::istringstream fields(value);
            std::string lo, hi;
            if (!(fields >> lo >> hi))
                fail(line_no, "claimed_range_pi needs two values");
            file.claimed_range_pi = {parse_number(lo, line_no),
                                     parse_number(hi, line_no)};
        } else if (key == "claimed_total_area_pi") {
            file.claimed_total_area_pi = parse_number(value, line_no);
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }

    if (!have_name) throw std::invalid_argument("sequence file: missing name");
    if (!theta_pi) throw std::invalid_argument("sequence file: missing theta_pi");
    if (pulses.empty())
        throw std::invalid_argument("sequence file: no pulses");
    try {
        file.sequence = make_sequence(std::move(pulses), *theta_pi * pi, family);
    } catch (const std::exception& err) {
        throw std::invalid_argument(std::string("sequence file: ") + err.what());
    }
    return file;
}

SequenceFile load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open sequence file: " + path);
    return parse_sequence_file(in);
}

std::string write_sequence_file(const SequenceFile& file) {
    std::string out;
    out += "name: " + file.name + "\n";
    out += "family: ";
    out += family_name(file.sequence.family);
    out += "\n";
    out += "theta_pi: " + fmt15(file.sequence.target_theta / pi) + "\n";
    for (const Pulse& p : file.sequence.pulses)
        out += "pulse: area_pi=" + fmt15(p.area / pi) +
               " phase_pi=" + fmt15(p.phase / pi) + "\n";
    if (file.claimed_order)
        out += "claimed_order: " + std::to_string(*file.claimed_order) + "\n";
    if (file.claimed_range_pi)
        out += "claimed_range_pi: " + fmt15(file.claimed_range_pi->first) +
               " " + fmt15(file.claimed_range_pi->second) + "\n";
    if (file.claimed_total_area_pi)
        out += "claimed_total_area_pi: " + fmt15(*file.claimed_total_area_pi) +
               "\n";
    return out;
}

void save_sequence_file(const SequenceFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out)
        throw std::invalid_argument("cannot write sequence file: " + path);
    out << write_sequence_file(file);
}

} // namespace cpgate
