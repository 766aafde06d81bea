#include <complex>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hmix/eisenstein.hpp"
#include "hmix/error.hpp"

using namespace hmix;

namespace {

EisensteinInt random_element(std::mt19937& rng, int range = 50)
{
    std::uniform_int_distribution<int> d(-range, range);
    return {BigInt(d(rng)), BigInt(d(rng))};
}

const std::complex<double> kOmega{0.5, std::sqrt(3.0) / 2};

} // namespace

TEST_CASE("units follow omega squared = omega - 1")
{
    const auto w = unit_pow(1);
    CHECK(w * w == w - EisensteinInt(1));
    CHECK(unit_pow(2) == EisensteinInt(-1, 1));
    CHECK(unit_pow(3) == EisensteinInt(-1));
    CHECK(unit_pow(6) == EisensteinInt(1));
    CHECK(unit_pow(-1) == unit_pow(5));
    for (int t = 0; t < 6; ++t) {
        CHECK(unit_pow(t).norm() == 1);
        CHECK(unit_pow(t) * unit_pow(-t) == EisensteinInt(1));
        CHECK(unit_pow(t).conj() == unit_pow(-t));
        const auto z = to_complex(unit_pow(t));
        CHECK(std::abs(z - std::pow(kOmega, t)) < 1e-12);
        CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    }
}

TEST_CASE("conjugate of omega is 1 - omega")
{
    CHECK(unit_pow(1).conj() == EisensteinInt(1, -1));
    CHECK(EisensteinInt(2, 3).conj() == EisensteinInt(5, -3));
}

TEST_CASE("unit exponent arithmetic")
{
    CHECK(UnitExponent(7).value() == 1);
    CHECK(UnitExponent(-1).value() == 5);
    CHECK((UnitExponent(4) + UnitExponent(5)).value() == 3);
    CHECK(UnitExponent(2).conj().value() == 4);
    CHECK(UnitExponent(3).is_real());
    CHECK_FALSE(UnitExponent(1).is_real());
    const int nu[6] = {2, 1, -1, -2, -1, 1};
    for (int t = 0; t < 6; ++t) {
        CHECK(UnitExponent(t).nu() == nu[t]);
        // ν(t) = 2 Re ω^t
        CHECK(std::abs(2 * std::pow(kOmega, t).real() - nu[t]) < 1e-12);
    }
}

TEST_CASE("norm matches complex modulus")
{
    CHECK(EisensteinInt(1, 1).norm() == 3);
    CHECK(EisensteinInt(2, -1).norm() == 3);
    CHECK(EisensteinInt(0).norm() == 0);
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto x = random_element(rng);
        CHECK(x.norm() >= 0);
        CHECK(std::abs(std::norm(to_complex(x)) - static_cast<double>(x.norm())) < 1e-6);
        CHECK(x * x.conj() == EisensteinInt(x.norm()));
    }
}

TEST_CASE("ring laws hold on random elements")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == EisensteinInt(0));
        CHECK(x * EisensteinInt(1) == x);
        CHECK(conj(x * y) == conj(x) * conj(y));
        CHECK(conj(x + y) == conj(x) + conj(y));
        CHECK(conj(conj(x)) == x);
        CHECK((x * y).norm() == x.norm() * y.norm());
        const auto c = to_complex(x * y);
        CHECK(std::abs(c - to_complex(x) * to_complex(y)) < 1e-6);
    }
}

TEST_CASE("big values stay exact")
{
    EisensteinInt x(BigInt(1) << 80, BigInt(3));
    auto y = x * x * x;
    CHECK(y * EisensteinInt(1) == y);
    CHECK(x.norm() == (BigInt(1) << 160) + 3 * (BigInt(1) << 80) + 9);
}

TEST_CASE("formatting and parsing")
{
    CHECK(to_string(EisensteinInt(0)) == "0");
    CHECK(to_string(EisensteinInt(-4)) == "-4");
    CHECK(to_string(EisensteinInt(0, 1)) == "0+1w");
    CHECK(to_string(EisensteinInt(2, -3)) == "2-3w");
    CHECK(parse_eisenstein("2-3w") == EisensteinInt(2, -3));
    CHECK(parse_eisenstein("-7") == EisensteinInt(-7));
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_element(rng, 1000);
        CHECK(parse_eisenstein(to_string(x)) == x);
    }
    CHECK_THROWS_AS(parse_eisenstein(""), ParseError);
    CHECK_THROWS_AS(parse_eisenstein("1+w"), ParseError);
    CHECK_THROWS_AS(parse_eisenstein("abc"), ParseError);
    CHECK_THROWS_AS(parse_eisenstein("3+4"), ParseError);
}

TEST_CASE("complex embedding")
{
    CHECK(to_complex(EisensteinInt(1)) == std::complex<double>(1, 0));
    CHECK(std::abs(to_complex(EisensteinInt(0, 1)) - std::complex<double>(0.5, 0.8660254037844386)) < 1e-15);
    CHECK(std::abs(to_complex(EisensteinInt(2, -1)) - std::complex<double>(1.5, -0.8660254037844386)) < 1e-15);
    CHECK(to_string(EisensteinInt(-1, 1)) == "-1+1w");
    CHECK(EisensteinInt(3, 4) + EisensteinInt(5, -6) == EisensteinInt(8, -2));
    CHECK(EisensteinInt(1, 1) * EisensteinInt(2, -1) == EisensteinInt(3));
    CHECK(unit_pow(7) == EisensteinInt(0, 1));
}
