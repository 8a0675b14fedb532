#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "opdyn/bias.hpp"
#include "opdyn/rng.hpp"

using namespace opdyn;
using Catch::Approx;

namespace {
// scalar oracle for the reference confirmation family, kept independent
// of the library evaluation path
double tanh_quad(double chi, double gamma, double a, double b) {
    const double d = std::tanh(a) - std::tanh(b);
    return chi - gamma * d * d;
}
}  // namespace

TEST_CASE("tanh-quadratic reference values") {
    const BiasFamily fam = TanhQuadratic(0.6, 0.011);
    CHECK(eval_conf(fam, 0.2, 0.8) == Approx(0.597604498001482).margin(1e-12));
    CHECK(eval_conf(fam, 0.2, 0.8) == tanh_quad(0.6, 0.011, 0.2, 0.8));
    CHECK(eval_conf(fam, 0.0, 0.0) == 0.6);
    // Opinion-typed overload agrees
    CHECK(eval_conf(fam, Opinion(0.2), Opinion(0.8)) == eval_conf(fam, 0.2, 0.8));
}

TEST_CASE("confirmation families reject parameters that go negative") {
    CHECK_THROWS_AS(TanhQuadratic(0.1, 0.05), std::invalid_argument);   // 0.05*(2 tanh 1)^2 > 0.1
    CHECK_NOTHROW(TanhQuadratic(0.6, 0.011));
    CHECK_THROWS_AS(TanhQuadratic(0.0, 0.0), std::invalid_argument);    // chi must be > 0
    CHECK_THROWS_AS(TanhQuadratic(0.6, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(CubicAbs(0.1, 0.06), std::invalid_argument);        // chi < 2 gamma
    CHECK_NOTHROW(CubicAbs(0.6, 0.1));
    CHECK_THROWS_AS(LinearSymmetric(0.4, 0.5), std::invalid_argument);  // beta < gamma
    CHECK_THROWS_AS(LinearSymmetric(0.4, -0.1), std::invalid_argument);
    CHECK_NOTHROW(LinearSymmetric(0.6, 0.5));
    CHECK_THROWS_AS(HKIndicator(0.1, 0.5, 1.0), std::invalid_argument);  // eps_lo >= 0
    CHECK_THROWS_AS(HKIndicator(-0.5, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(HKIndicator(-0.5, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(NegTanhQuadratic(-0.1, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(TanhQuadratic(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("linear-symmetric weighs equidistant opinions equally") {
    const BiasFamily fam = LinearSymmetric(0.6, 0.5);
    const double cj = eval_conf(fam, 0.1, 0.5);
    const double cd = eval_conf(fam, 0.1, -0.3);
    CHECK(cj == Approx(0.4).margin(1e-12));
    CHECK(cj == cd);
}

TEST_CASE("sign-flip symmetry about the neutral opinion is exact") {
    const BiasFamily tq = TanhQuadratic(0.6, 0.011);
    const BiasFamily cu = CubicAbs(0.6, 0.1);
    for (double a : {0.05, 0.3, 0.55, 0.8, 1.0}) {
        CHECK(eval_conf(tq, 0.0, a) == eval_conf(tq, 0.0, -a));
        CHECK(eval_conf(cu, 0.0, a) == eval_conf(cu, 0.0, -a));
    }
}

TEST_CASE("decomposed families depend only on |f(a) - f(b)|") {
    const Decomposed dec{[](double x) { return std::tanh(x); },
                         [](double d) { return 0.6 - 0.011 * d * d; }};
    const BiasFamily fam = dec;
    SplitMix64 rng(99);
    for (int t = 0; t < 50; ++t) {
        const double a = -1.0 + 2.0 * rng.u01();
        const double b = -1.0 + 2.0 * rng.u01();
        CHECK(eval(fam, a, b) == eval(fam, b, a));
    }
    // odd f: (0, a) and (0, -a) give equal values
    for (double a : {0.1, 0.45, 0.9}) {
        CHECK(eval(fam, 0.0, a) == eval(fam, 0.0, -a));
    }
}

TEST_CASE("closed-form families match their (f, g) decomposition bitwise") {
    const BiasFamily fams[] = {TanhQuadratic(0.6, 0.011), CubicAbs(0.6, 0.1),
                               LinearSymmetric(0.6, 0.5), NegTanhQuadratic(0.1, 0.05)};
    SplitMix64 rng(123);
    for (const auto& fam : fams) {
        const auto dec = decomposition(fam);
        REQUIRE(dec.has_value());
        const BiasFamily as_dec = *dec;
        for (int t = 0; t < 50; ++t) {
            const double a = -1.0 + 2.0 * rng.u01();
            const double b = -1.0 + 2.0 * rng.u01();
            CHECK(eval(fam, a, b) == eval(as_dec, a, b));
        }
    }
    CHECK_FALSE(decomposition(BiasFamily(HKIndicator(-0.5, 0.5, 1.0))).has_value());
}

TEST_CASE("hk indicator takes exactly two values and is asymmetric") {
    const HKIndicator hk(-0.2, 0.5, 1.5);
    bool saw_zero = false, saw_a = false, asymmetric = false;
    for (double a = -1.0; a <= 1.0; a += 0.1) {
        for (double b = -1.0; b <= 1.0; b += 0.1) {
            const double v = hk(a, b);
            CHECK((v == 0.0 || v == 1.5));
            saw_zero = saw_zero || v == 0.0;
            saw_a = saw_a || v == 1.5;
            asymmetric = asymmetric || hk(a, b) != hk(b, a);
        }
    }
    CHECK(saw_zero);
    CHECK(saw_a);
    CHECK(asymmetric);
    // band is half-open: lower edge in, upper edge out
    CHECK(hk(0.3, 0.5) == 1.5);   // d = -0.2 = eps_lo
    CHECK(hk(0.5, 0.0) == 0.0);   // d = 0.5 = eps_hi
}

TEST_CASE("negativity family: farther opinions weigh more") {
    const BiasFamily fam = NegTanhQuadratic(0.1, 0.05);
    CHECK(eval_neg(fam, 0.0, 0.5) == eval_neg(fam, 0.0, -0.5));
    CHECK(eval_neg(fam, 0.2, 0.8) > eval_neg(fam, 0.2, 0.4));
    const BiasFamily flat = NegTanhQuadratic(0.1, 0.0);
    CHECK(eval_neg(flat, -0.7, 0.9) == 0.1);
    CHECK(eval_neg(flat, 0.3, -0.1) == 0.1);
}

TEST_CASE("composite weight mixes the two families") {
    const CompositeBias half(0.5, LinearSymmetric(0.4, 0.0), NegTanhQuadratic(0.2, 0.0));
    CHECK(composite_weight(half, 0.1, 0.0, 0.9) == Approx(0.3).margin(1e-15));

    const CompositeBias all_conf(1.0, TanhQuadratic(0.6, 0.011), NegTanhQuadratic(0.1, 0.05));
    const CompositeBias all_neg(0.0, TanhQuadratic(0.6, 0.011), NegTanhQuadratic(0.1, 0.05));
    SplitMix64 rng(7);
    for (int t = 0; t < 30; ++t) {
        const double xi = -1.0 + 2.0 * rng.u01();
        const double xb = -1.0 + 2.0 * rng.u01();
        const double xj = -1.0 + 2.0 * rng.u01();
        CHECK(composite_weight(all_conf, xi, xb, xj) == eval_conf(all_conf.conf, xi, xj));
        CHECK(composite_weight(all_neg, xi, xb, xj) == eval_neg(all_neg.neg, xb, xj));
    }
    CHECK_THROWS_AS(CompositeBias(1.5, LinearSymmetric(0.4, 0.0), NegTanhQuadratic(0.1, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("biased-assimilation step values") {
    CHECK(eval_dandekar_step(1, 1, 2, 0.5, 0.9) == Approx(0.58).margin(1e-12));
    CHECK(eval_dandekar_step(1, 1, 2, 0.5, 0.1) == Approx(0.42).margin(1e-12));
    CHECK(eval_dandekar_step(1, 1, 2, 0.5, 0.5) == Approx(0.5).margin(1e-12));
}

TEST_CASE("biased assimilation at the neutral opinion: coefficient on x_j is constant") {
    const double base = eval_dandekar_step(1, 1, 2, 0.5, 0.0);
    const double c1 = (eval_dandekar_step(1, 1, 2, 0.5, 0.1) - base) / 0.1;
    const double c2 = (eval_dandekar_step(1, 1, 2, 0.5, 0.9) - base) / 0.9;
    CHECK(c1 == Approx(0.2).margin(1e-12));
    CHECK(c2 == Approx(0.2).margin(1e-12));
    CHECK(c1 == Approx(c2).margin(1e-12));
}

TEST_CASE("biased-assimilation argument validation") {
    CHECK_THROWS_AS(eval_dandekar_step(0.0, 1, 2, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(eval_dandekar_step(1, -1, 2, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(eval_dandekar_step(1, 1, 2, 1.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(eval_dandekar_step(1, 1, 2, 0.5, -0.1), std::invalid_argument);
}

TEST_CASE("unconfigured family evaluation is a logic error") {
    BiasFamily fam;  // monostate
    CHECK_THROWS_AS(eval(fam, 0.0, 0.0), std::logic_error);
}
