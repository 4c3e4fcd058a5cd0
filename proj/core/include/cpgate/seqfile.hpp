#pragma once
// seqfile.hpp — line-oriented sequence file format shared by the CLI and the
// catalog exporter.
//
//   # comment
//   name: my-gate
//   family: symmetric-x            (optional, default custom)
//   theta_pi: 1
//   pulse: area_pi=1 phase_pi=0.16666666666666666
//   pulse: area_pi=1 phase_pi=0.83333333333333337
//   pulse: area_pi=1 phase_pi=0.16666666666666666
//   claimed_order: 1               (optional)
//   claimed_range_pi: 0.992 1.008  (optional)
//   claimed_total_area_pi: 3       (optional)
//
// Values are in units of pi and round-trip at 15 significant digits.

#include "cpgate/su2.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace cpgate {

struct SequenceFile {
    std::string name;
    CompositeSequence sequence;
    std::optional<int> claimed_order;
    std::optional<std::pair<double, double>> claimed_range_pi;
    std::optional<double> claimed_total_area_pi;
};

/// Parse; throws std::invalid_argument with a line reference on bad input.
SequenceFile parse_sequence_file(std::istream& in);
SequenceFile load_sequence_file(const std::string& path);

std::string write_sequence_file(const SequenceFile& file);
void save_sequence_file(const SequenceFile& file, const std::string& path);

} // namespace cpgate
