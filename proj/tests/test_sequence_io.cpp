#include "doctest.h"

#include <cstring>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "gaprecover/errors.hpp"
#include "gaprecover/sequence_io.hpp"

using namespace gaprecover;

namespace {

std::size_t error_row(const std::string& text) {
    std::istringstream in(text);
    try {
        read_sequence_csv(in);
    } catch (const CsvError& e) {
        return e.row();
    }
    return 0;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("csv reader fills skipped indices with zeros") {
    std::istringstream in("t,re,im\n-2,1.5,0\n1,0,-2\n");
    const auto x = read_sequence_csv(in);
    CHECK(x.start() == -2);
    CHECK(x.last() == 1);
    CHECK(x[-2] == Complex{1.5, 0.0});
    CHECK(x[0] == Complex{});
    CHECK(x[1] == Complex{0.0, -2.0});
}

TEST_CASE("csv reader accepts header only and CRLF") {
    std::istringstream empty("t,re,im\n");
    CHECK(read_sequence_csv(empty).empty());
    std::istringstream crlf("t,re,im\r\n0,1,2\r\n");
    CHECK(read_sequence_csv(crlf)[0] == Complex{1.0, 2.0});
}

TEST_CASE("malformed csv is rejected with its row number") {
    CHECK(error_row("x,y,z\n0,1,0\n") == 1);
    CHECK(error_row("") == 1);
    CHECK(error_row("t,re,im\n0,1,0\n0,2,0\n") == 3);
    CHECK(error_row("t,re,im\n0,1,0\n1,abc,0\n") == 3);
    CHECK(error_row("t,re,im\n0,1\n") == 2);
    CHECK(error_row("t,re,im\n0,1,0,4\n") == 2);
    CHECK(error_row("t,re,im\n0,nan,0\n") == 2);
    CHECK(error_row("t,re,im\n1.5,1,0\n") == 2);
}

TEST_CASE("csv write/read is bit-exact for finite doubles") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> bits;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> v;
        for (int i = 0; i < 64; ++i) {
            double re, im;
            do {
                const auto b1 = bits(rng), b2 = bits(rng);
                std::memcpy(&re, &b1, sizeof re);
                std::memcpy(&im, &b2, sizeof im);
            } while (!std::isfinite(re) || !std::isfinite(im));
            v.emplace_back(re, im);
        }
        v.emplace_back(std::numeric_limits<double>::denorm_min(), -0.0);
        v.emplace_back(std::numeric_limits<double>::max(), std::numbers::pi);
        const FiniteSequence x(-trial, v);
        std::stringstream io;
        write_sequence_csv(io, x);
        const auto back = read_sequence_csv(io);
        REQUIRE(back.size() == x.size());
        CHECK(back.start() == x.start());
        for (std::size_t i = 0; i < v.size(); ++i) {
            CHECK(same_bits(back.values()[i].real(), v[i].real()));
            CHECK(same_bits(back.values()[i].imag(), v[i].imag()));
        }
    }
}

TEST_CASE("angles as radians or multiples of pi") {
    constexpr double pi = std::numbers::pi;
    CHECK(parse_angle("pi") == pi);
    CHECK(parse_angle("0.1pi") == doctest::Approx(0.1 * pi));
    CHECK(parse_angle("-0.5pi") == doctest::Approx(-0.5 * pi));
    CHECK(parse_angle("0.25*pi") == doctest::Approx(0.25 * pi));
    CHECK(parse_angle("-pi") == -pi);
    CHECK(parse_angle("1.25") == 1.25);
    CHECK_THROWS_AS(parse_angle(""), InvalidArgument);
    CHECK_THROWS_AS(parse_angle("abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_angle("xpi"), InvalidArgument);
}
