#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "sl/core.hpp"
#include "sl/io.hpp"
#include "sl/oracle.hpp"
#include "test_util.hpp"

using namespace sl;
using sl::test::random_order;

TEST_CASE("switch-list text format roundtrip") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const var_order pi = random_order(n, rng);
        const switch_list s = compile(random_function(n, rng()), pi);
        std::stringstream buf;
        write_switch_list(buf, s);
        CHECK(read_switch_list(buf) == s);
    }
}

TEST_CASE("switch-list format is stable") {
    const switch_list s(var_order({3, 4, 1, 2}), 1, {1, 12});
    std::stringstream buf;
    write_switch_list(buf, s);
    CHECK(buf.str() == "n=4\norder=3,4,1,2\nf0=1\nswitches=1,12\n");

    std::stringstream empty_switches("n=2\norder=1,2\nf0=1\nswitches=\n");
    const switch_list constant = read_switch_list(empty_switches);
    CHECK(constant.switches().empty());
    CHECK(constant.first_value() == 1);
}

TEST_CASE("switch-list parse errors carry line numbers") {
    auto parse = [](const std::string& text) {
        std::stringstream in(text);
        return read_switch_list(in);
    };
    CHECK_THROWS_WITH_AS(parse("m=2\n"), doctest::Contains("line 1"), parse_error);
    CHECK_THROWS_WITH_AS(parse("n=abc\n"), doctest::Contains("line 1"), parse_error);
    CHECK_THROWS_WITH_AS(parse("n=2\norder=1\nf0=0\nswitches=\n"),
                         doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse("n=2\norder=1,1\nf0=0\nswitches=\n"),
                         doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse("n=2\norder=1,2\nf0=3\nswitches=\n"),
                         doctest::Contains("line 3"), parse_error);
    CHECK_THROWS_WITH_AS(parse("n=2\norder=1,2\nf0=0\nswitches=3,1\n"),
                         doctest::Contains("line 4"), parse_error);
    CHECK_THROWS_WITH_AS(parse("n=2\norder=1,2\nf0=0\n"), doctest::Contains("line 4"),
                         parse_error);
}

TEST_CASE("truth-table text format roundtrip") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const truth_table t = random_function(n, rng());
        std::stringstream buf;
        write_truth_table(buf, t);
        CHECK(read_truth_table(buf) == t);
    }

    std::stringstream fixed("n=2\n0110\n");
    const truth_table t = read_truth_table(fixed);
    CHECK(t.bits() == std::vector<uint8_t>{0, 1, 1, 0});
}

TEST_CASE("truth-table parse errors") {
    auto parse = [](const std::string& text) {
        std::stringstream in(text);
        return read_truth_table(in);
    };
    CHECK_THROWS_WITH_AS(parse("n=2\n011\n"), doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse("n=2\n01x0\n"), doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse("n=30\n0\n"), doctest::Contains("line 1"), parse_error);
}

TEST_CASE("order specs") {
    CHECK(parse_order("identity", 4) == var_order::identity(4));
    CHECK(parse_order("3,4,1,2", 4) == var_order({3, 4, 1, 2}));
    CHECK(format_order(var_order({3, 4, 1, 2})) == "3,4,1,2");
    CHECK_THROWS_AS(parse_order("1,2,3", 4), validation_error);
    CHECK_THROWS_AS(parse_order("1,2,2,3", 4), validation_error);
    CHECK_THROWS_AS(parse_order("potato", 4), validation_error);
}
