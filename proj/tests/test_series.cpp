#include <catch2/catch_amalgamated.hpp>

#include "bpa/exact.hpp"
#include "bpa/series.hpp"

using namespace bpa;

static ExactSeries two_minus_exp(std::size_t order) {
    return ExactSeries::constant(2, order).sub(ExactSeries::exp(order));
}

TEST_CASE("series_exp coefficients are 1/j!") {
    auto e0 = ExactSeries::exp(0);
    CHECK(e0.order() == 0);
    CHECK(e0[0] == 1);

    auto e2 = ExactSeries::exp(2);
    CHECK(e2[0] == 1);
    CHECK(e2[1] == 1);
    CHECK(e2[2] == mpq_class(1, 2));

    auto e4 = ExactSeries::exp(4);
    CHECK(e4[3] == mpq_class(1, 6));
    CHECK(e4[4] == mpq_class(1, 24));
}

TEST_CASE("series inversion") {
    auto one = ExactSeries::constant(1, 6);
    CHECK(one.invert() == one);

    auto base = two_minus_exp(8);
    CHECK(base[0] == 1);
    CHECK(base[1] == -1);
    auto inv = base.invert();
    CHECK(inv[0] == 1); // reciprocal of the constant term 2-1
    CHECK(base.mul(inv) == ExactSeries::constant(1, 8));

    // l! times the coefficients give the bar-free counts
    const unsigned long want[] = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
    for (std::size_t l = 0; l <= 8; ++l)
        CHECK(egf_coefficient(inv, l) == want[l]);

    CHECK_THROWS_AS(ExactSeries(3).invert(), std::invalid_argument);
}

TEST_CASE("series multiplication and powers") {
    auto a = two_minus_exp(7).invert();
    CHECK(a.mul(ExactSeries::constant(1, 7)) == a);
    CHECK(a.pow(0) == ExactSeries::constant(1, 7));
    CHECK(a.pow(1) == a);

    const unsigned long want[] = {1, 2, 8, 44, 308, 2612, 25988, 296564};
    auto sq = a.pow(2);
    for (std::size_t l = 0; l <= 7; ++l)
        CHECK(egf_coefficient(sq, l) == want[l]);

    // mismatched orders truncate to the smaller operand
    CHECK(two_minus_exp(5).mul(two_minus_exp(3)).order() == 3);
    CHECK(two_minus_exp(5).add(two_minus_exp(3)).order() == 3);
}

TEST_CASE("egf_r rows match the reference values") {
    const unsigned long row2[] = {1, 3, 15, 99, 807, 7803, 87135, 1102419, 15575127};
    auto r2 = egf_r(2, 8);
    for (std::size_t l = 0; l <= 8; ++l)
        CHECK(egf_coefficient(r2, l) == row2[l]);

    const unsigned long row0[] = {1, 1, 3, 13};
    auto r0 = egf_r(0, 3);
    for (std::size_t l = 0; l <= 3; ++l)
        CHECK(egf_coefficient(r0, l) == row0[l]);

    const unsigned long row5[] = {1, 6, 48, 468, 5340, 69516};
    auto r5 = egf_r(5, 5);
    for (std::size_t l = 0; l <= 5; ++l)
        CHECK(egf_coefficient(r5, l) == row5[l]);
}

TEST_CASE("egf_s rows match the block-sum values") {
    auto s0 = egf_s(0, 2);
    CHECK(egf_coefficient(s0, 0) == 0);
    CHECK(egf_coefficient(s0, 1) == 1);
    CHECK(egf_coefficient(s0, 2) == 3);

    auto s1 = egf_s(1, 3);
    CHECK(egf_coefficient(s1, 0) == 0);
    CHECK(egf_coefficient(s1, 1) == 0);
    CHECK(egf_coefficient(s1, 2) == 2);
    CHECK(egf_coefficient(s1, 3) == 18);

    for (unsigned m = 0; m <= 5; ++m) CHECK(egf_s(m, 4)[0] == 0);
}

TEST_CASE("egf coefficients equal the exact-core values") {
    for (unsigned m = 0; m <= 4; ++m) {
        auto r = egf_r(m, 12);
        auto s = egf_s(m, 12);
        for (std::size_t l = 0; l <= 12; ++l) {
            CHECK(egf_coefficient(r, l) == r_via_recurrence(m, l));
            CHECK(egf_coefficient(s, l) == s_via_blocks(m, l));
        }
    }
}

TEST_CASE("egf algebra: powers of the base series") {
    auto base = egf_r(0, 10);
    auto shifted = base.sub(ExactSeries::constant(1, 10));
    ExactSeries r_acc = base;
    ExactSeries s_acc = shifted;
    for (unsigned m = 0; m <= 4; ++m) {
        CHECK(egf_r(m, 10) == r_acc);
        CHECK(egf_s(m, 10) == s_acc);
        r_acc = r_acc.mul(base);
        s_acc = s_acc.mul(shifted);
    }
}

TEST_CASE("binomial convolution splits off the first section") {
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned l = 0; l <= 10; ++l) {
            BigNat sum = 0;
            for (unsigned k = 0; k <= l; ++k)
                sum += binomial(l, k) * ordered_bell(k) * r_via_recurrence(m - 1, l - k);
            CHECK(sum == r_via_recurrence(m, l));
        }
    }
}

TEST_CASE("derivative identity relates consecutive rows") {
    CHECK(check_derivative_identity(1, 10));
    CHECK(check_derivative_identity(4, 10));
    CHECK(check_derivative_identity(1, 0));
    for (unsigned m = 1; m <= 5; ++m) CHECK(check_derivative_identity(m, 12));
}

TEST_CASE("egf_coefficient rejects non-integral values") {
    auto half = ExactSeries::constant(mpq_class(1, 2), 2);
    CHECK_THROWS_AS(egf_coefficient(half, 0), internal_error);
}

TEST_CASE("derivative shifts coefficients down") {
    auto e = ExactSeries::exp(6);
    auto d = e.derivative();
    CHECK(d.order() == 5);
    for (std::size_t j = 0; j <= 5; ++j) CHECK(d[j] == e[j]);
    CHECK_THROWS_AS(ExactSeries(0).derivative(), std::invalid_argument);
}
