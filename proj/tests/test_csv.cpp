#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

#include "doctest.h"
#include "rebalance/csv.hpp"
#include "test_util.hpp"

using namespace rebalance;

TEST_CASE("serialization round-trips the fixture bit-exactly") {
    const auto f1 = testutil::make_f1();
    const std::string text = to_csv_string(f1);
    CHECK(text.substr(0, 9) == "f0,label\n");
    CHECK(text.back() == '\n');
    const auto back = parse_csv(text);
    CHECK(back == f1);
}

TEST_CASE("awkward doubles survive the round trip") {
    const std::vector<double> values{
        0.1,     1.0 / 3.0, -0.0,    1e300,  1e-300, 5e-324,  // denormal floor
        123456789.123456789, 2.2250738585072014e-308, -1.5e-8,
    };
    Dataset d(3, {values[0], values[1], values[2], values[3], values[4], values[5],
                  values[6], values[7], values[8]},
              {"a", "b", "c"});
    const auto back = parse_csv(to_csv_string(d));
    REQUIRE(back.n_rows() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const double expect = values[i * 3 + j];
            const double got = back.row(i)[j];
            CHECK(std::bit_cast<std::uint64_t>(got) == std::bit_cast<std::uint64_t>(expect));
        }
    // the sign of negative zero is part of the round trip
    CHECK(std::signbit(back.row(0)[2]));
}

TEST_CASE("format_double uses shortest round-trip spellings") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.0) == "-0");
    CHECK(format_double(0.4) == "0.4");

    std::mt19937_64 gen(31);
    for (int i = 0; i < 1000; ++i) {
        const double v = std::bit_cast<double>(gen());
        if (!std::isfinite(v)) continue;
        const std::string text = format_double(v);
        double back = 0.0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), back);
        REQUIRE(ec == std::errc{});
        REQUIRE(end == text.data() + text.size());
        CHECK(std::bit_cast<std::uint64_t>(back) == std::bit_cast<std::uint64_t>(v));
    }
}

TEST_CASE("parse_csv points at the offending cell") {
    try {
        parse_csv("f0,f1,label\n1.0,2.0,A\n3.0,xx,B\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.row() == 3);
        CHECK(e.column() == 2);
        CHECK(std::string(e.what()).find("xx") != std::string::npos);
    }
}

TEST_CASE("parse_csv rejects malformed headers") {
    CHECK_THROWS_AS(parse_csv("x,label\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("f0,f2,label\n"), ParseError);   // gap in feature names
    CHECK_THROWS_AS(parse_csv("f0,f1\n"), ParseError);         // no label column
    CHECK_THROWS_AS(parse_csv("f1,f0,label\n"), ParseError);   // wrong order
    try {
        parse_csv("f0,f2,label\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.row() == 1);
        CHECK(e.column() == 2);
    }
}

TEST_CASE("parse_csv rejects structural problems as shape errors") {
    CHECK_THROWS_AS(parse_csv(""), ShapeError);
    CHECK_THROWS_AS(parse_csv("label\n"), ShapeError);              // no features
    CHECK_THROWS_AS(parse_csv("f0,label\n0.5,A\n0.5\n"), ShapeError);  // ragged row
    CHECK_THROWS_AS(parse_csv("f0,label\n0.5,A,extra\n"), ShapeError);
}

TEST_CASE("parse_csv rejects non-finite and missing cells") {
    CHECK_THROWS_AS(parse_csv("f0,label\nnan,A\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("f0,label\ninf,A\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("f0,label\n,A\n"), ParseError);    // empty feature
    CHECK_THROWS_AS(parse_csv("f0,label\n0.5,\n"), ParseError);  // empty label
    CHECK_THROWS_AS(parse_csv("f0,label\n1.5x,A\n"), ParseError);  // trailing junk
}

TEST_CASE("a header-only file is an empty dataset") {
    const auto d = parse_csv("f0,f1,label\n");
    CHECK(d.n_rows() == 0);
    CHECK(d.n_features() == 2);
}

TEST_CASE("carriage returns and a missing final newline are tolerated") {
    const auto crlf = parse_csv("f0,label\r\n0.5,A\r\n2.5,B\r\n");
    REQUIRE(crlf.n_rows() == 2);
    CHECK(crlf.row(0)[0] == 0.5);
    CHECK(crlf.label(1) == "B");

    const auto bare_end = parse_csv("f0,label\n0.5,A");
    CHECK(bare_end.n_rows() == 1);
}

TEST_CASE("labels carry arbitrary comma-free text") {
    const auto d = parse_csv("f0,label\n1.0,class one\n2.0,=weird=\n");
    CHECK(d.label(0) == "class one");
    CHECK(d.label(1) == "=weird=");
    const auto back = parse_csv(to_csv_string(d));
    CHECK(back == d);
}

TEST_CASE("file io round-trips and reports real failures") {
    const auto f1 = testutil::make_f1();
    const std::string path = "test_csv_roundtrip.tmp.csv";
    write_csv(f1, path);
    const auto back = read_csv(path);
    CHECK(back == f1);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_csv("does_not_exist_anywhere.csv"), IoError);
    CHECK_THROWS_AS(write_csv(f1, "no_such_dir/out.csv"), IoError);
}
