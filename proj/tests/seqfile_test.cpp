#include "cpgate/seqfile.hpp"

#include "cpgate/catalog.hpp"
#include "cpgate/solver.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace cpgate;

TEST_CASE("round trip preserves values to 15 significant digits") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        SequenceFile file;
        file.name = "roundtrip";
        file.sequence = cpgate::testing::random_sequence(rng, 7);
        file.claimed_order = 2;
        file.claimed_range_pi = {0.95, 1.05};
        file.claimed_total_area_pi = total_area_pi(file.sequence);

        std::istringstream in(write_sequence_file(file));
        SequenceFile parsed = parse_sequence_file(in);
        REQUIRE(parsed.sequence.pulses.size() == file.sequence.pulses.size());
        // %.15g plus the pi-unit conversion costs a few ulp
        for (std::size_t k = 0; k < file.sequence.pulses.size(); ++k) {
            const Pulse& a = file.sequence.pulses[k];
            const Pulse& b = parsed.sequence.pulses[k];
            CHECK(std::fabs(a.area - b.area) <= 8e-15 * a.area);
            CHECK(std::fabs(a.phase - b.phase) <=
                  8e-15 * std::max(1.0, a.phase));
        }
        CHECK(parsed.claimed_order == file.claimed_order);
        CHECK(parsed.claimed_range_pi->first == doctest::Approx(0.95));
        CHECK(parsed.claimed_total_area_pi ==
              doctest::Approx(*file.claimed_total_area_pi).epsilon(1e-14));
        CHECK(parsed.name == "roundtrip");
    }
}

TEST_CASE("catalog entries survive the file format") {
    for (const char* name : {"X3", "H5s", "BB1"}) {
        SequenceFile file;
        file.name = name;
        file.sequence = catalog::get(name).sequence;
        std::istringstream in(write_sequence_file(file));
        SequenceFile parsed = parse_sequence_file(in);
        CHECK(sequence_distance(parsed.sequence, file.sequence) < 1e-13);
        CHECK(parsed.sequence.family == file.sequence.family);
        CHECK(std::fabs(parsed.sequence.target_theta -
                        file.sequence.target_theta) < 1e-14);
    }
}

TEST_CASE("parser reports malformed input with a line reference") {
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_sequence_file(in);
    };
    CHECK_THROWS_WITH_AS(parse("theta_pi: 1\npulse: area_pi=1 phase_pi=0\n"),
                         doctest::Contains("missing name"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse("name: x\npulse: area_pi=1 phase_pi=0\n"),
                         doctest::Contains("missing theta_pi"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse("name: x\ntheta_pi: 1\n"),
                         doctest::Contains("no pulses"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse("name: x\nbogus_key: 3\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse("name: x\ntheta_pi: abc\n"), doctest::Contains("number"),
        std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse("name: x\ntheta_pi: 1\npulse: area_pi=-1 phase_pi=0\n"),
        doctest::Contains("positive"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse("name: x\ntheta_pi: 1\npulse: area_pi=1\n"),
        doctest::Contains("phase_pi"), std::invalid_argument);
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream in(
        "# composite X gate\n"
        "name: X3-file\n"
        "family: symmetric-x\n"
        "\n"
        "theta_pi: 1\n"
        "pulse: area_pi=1 phase_pi=0.16666666666666666\n"
        "pulse: area_pi=1 phase_pi=0.83333333333333337\n"
        "pulse: area_pi=1 phase_pi=0.16666666666666666\n"
        "claimed_order: 1\n");
    SequenceFile file = parse_sequence_file(in);
    CHECK(file.name == "X3-file");
    CHECK(file.sequence.family == Family::SymmetricX);
    CHECK(file.claimed_order == 1);
    CHECK(sequence_distance(file.sequence, catalog::get("X3").sequence) <
          1e-14);
}
