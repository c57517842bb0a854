#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wlp/error.hpp"
#include "wlp/group.hpp"
#include "wlp/weights.hpp"

using namespace wlp;

TEST_CASE("weight evaluation") {
    CHECK(Weight::polynomial(2)(3) == 9.0);
    CHECK(Weight::polynomial(2)(-3) == 9.0);
    CHECK(Weight::polynomial(2)(1) == 1.0);
    CHECK(Weight::exppoly(2)(3) == 80.0);
    CHECK(Weight::subexp(0.5)(4) == doctest::Approx(std::exp(2.0)));
    for (const auto& w : {Weight::constant(), Weight::polynomial(0.5), Weight::polynomial(3), Weight::subexp(0.3),
                          Weight::exppoly(1.5)})
        CHECK(w(0) == 1.0);
    CHECK(eval(Weight::polynomial(1), -7) == 7.0);
}

TEST_CASE("weight parameter and domain errors") {
    CHECK_THROWS_AS(Weight::polynomial(-1), ParameterError);
    CHECK_THROWS_AS(Weight::subexp(1.0), ParameterError);
    CHECK_THROWS_AS(Weight::subexp(0.0), ParameterError);
    CHECK_THROWS_AS(Weight::exppoly(1.0), ParameterError);
    const auto t = Weight::tabulated(-2, {2.0, 1.5, 1.0, 1.5, 2.0});
    CHECK(t(-2) == 2.0);
    CHECK_THROWS_AS(t(3), DomainError);
    CHECK_THROWS_AS(Weight::tabulated(-1, {2.0, 1.2, 2.0}), ParameterError);  // w(0) != 1
    CHECK_THROWS_AS(Weight::tabulated(0, {1.0, -1.0}), ParameterError);
    auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
    CHECK_THROWS_AS(Weight::tabulated(G, {1.0, 2.0}), ParameterError);
    CHECK_THROWS_AS(Weight::tabulated(G, {1.0, 2.0, 2.0})(1), DomainError);
}

TEST_CASE("submultiplicativity of the built-in families") {
    // max(1, |n|) fails at (1, 1): w(2) = 2 > w(1)^2 = 1
    const auto p1 = check_submultiplicative(Weight::polynomial(1), 10);
    CHECK_FALSE(p1.submultiplicative);
    CHECK(p1.max_excess == 1.0);
    CHECK(p1.exact);
    CHECK(p1.max_ratio == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(Weight::polynomial(1)(5) <= Weight::polynomial(1)(2) * Weight::polynomial(1)(3));

    const auto c = check_submultiplicative(Weight::constant(), 25);
    CHECK(c.max_excess == 0.0);
    CHECK(c.submultiplicative);
    CHECK(c.exact);
    CHECK(c.max_ratio == 1.0);

    for (double a : {0.5, 1.0, 2.0, 2.5, 4.0}) {
        const auto r = check_submultiplicative(Weight::polynomial(a), 60);
        CHECK_FALSE(r.submultiplicative);
        CHECK(r.max_ratio == doctest::Approx(std::pow(2.0, a)).epsilon(1e-12));
    }
    CHECK(check_submultiplicative(Weight::polynomial(0), 60).submultiplicative);
    for (double g : {0.1, 0.5, 0.9}) {
        const auto r = check_submultiplicative(Weight::subexp(g), 60);
        CHECK(r.submultiplicative);
        CHECK(r.max_ratio <= 1.0 + 1e-12);
    }
    // 5 a^2 against 4 a^2 at (1, 1)
    for (double a : {1.5, 2.0, 3.0}) {
        const auto r = check_submultiplicative(Weight::exppoly(a), 30);
        CHECK_FALSE(r.submultiplicative);
        CHECK(r.max_excess == doctest::Approx(a * a));
        CHECK(r.max_ratio == doctest::Approx(1.25).epsilon(1e-12));
    }
}

TEST_CASE("submultiplicativity violation on a group") {
    auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
    const auto r = check_submultiplicative(Weight::tabulated(G, {1.0, 0.5, 0.5}));
    CHECK_FALSE(r.submultiplicative);
    // w(1 * 2) = w(0) = 1 against w(1) w(2) = 0.25
    CHECK(r.max_excess == doctest::Approx(0.75));
    CHECK(check_submultiplicative(Weight::constant(G)).max_excess == 0.0);
}

TEST_CASE("submultiplicativity violation on Z") {
    // w(n) = 1 except w(+-2) = 3: w(2) > w(1)^2
    const auto r = check_submultiplicative(Weight::tabulated(-2, {3.0, 1.0, 1.0, 1.0, 3.0}), 1);
    CHECK_FALSE(r.submultiplicative);
    CHECK(r.max_excess == doctest::Approx(2.0));
}

TEST_CASE("algebra constant") {
    CHECK_THROWS_AS(algebra_constant(Weight::polynomial(2), 1.0, 10), ParameterError);

    // unweighted l^2 is not an algebra: C >= 2N + 1 at n = 0
    for (std::int64_t N : {10, 20, 40}) {
        const auto c = algebra_constant(Weight::polynomial(0), 2.0, N);
        CHECK(c.constant >= 2.0 * N + 1.0);
        CHECK(std::isinf(c.tail_bound));
    }

    const auto c100 = algebra_constant(Weight::polynomial(2), 2.0, 100);
    const auto c200 = algebra_constant(Weight::polynomial(2), 2.0, 200);
    CHECK(std::isfinite(c100.constant));
    CHECK(c100.constant <= c200.constant);
    CHECK(c200.constant <= c100.constant + c100.tail_bound);
    CHECK(c100.q == doctest::Approx(2.0));
    CHECK(c100.norm_bound() == doctest::Approx(std::sqrt(c100.constant)));

    // monotone in the window
    double prev = 0.0;
    for (std::int64_t N : {5, 10, 20, 40, 80}) {
        const double v = algebra_constant(Weight::polynomial(1), 3.0, N).constant;
        CHECK(v >= prev);
        prev = v;
    }

    // constant weight on a finite group: (u*u)(n) = |G|
    auto G = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
    const auto cg = algebra_constant(Weight::constant(G), 2.0);
    CHECK(cg.constant == doctest::Approx(6.0));
    CHECK(cg.tail_bound == 0.0);
}

TEST_CASE("inverse power series") {
    // sum over n != 0 of n^{-4} = pi^4 / 45
    const auto s = inverse_power_series(Weight::polynomial(2), 2.0, 1);
    CHECK(s.value == doctest::Approx(std::pow(std::numbers::pi, 4) / 45.0).epsilon(1e-13));
    CHECK(s.error_bound < 1e-14);
    CHECK_THROWS_AS(inverse_power_series(Weight::polynomial(0.5), 2.0, 1), ParameterError);
    CHECK_THROWS_AS(inverse_power_series(Weight::constant(), 2.0, 1), ParameterError);

    // brute force for the other families
    double sub = 0.0;
    for (int n = 1; n < 20000; ++n) sub += 2.0 * std::exp(-2.0 * std::sqrt(double(n)));
    const auto vs = inverse_power_series(Weight::subexp(0.5), 2.0, 1);
    CHECK(std::abs(vs.value - sub) <= vs.error_bound + 1e-12);
    const auto ve = inverse_power_series(Weight::exppoly(2.0), 1.0, 1);
    double ep_direct = 0.0;
    for (int n = 1; n < 200; ++n) ep_direct += 2.0 / (std::pow(2.0, n) * (1.0 + n * n));
    CHECK(ve.value == doctest::Approx(ep_direct).epsilon(1e-12));
}

TEST_CASE("standard isomorphism ratio bounds") {
    auto one = [](std::int64_t) { return std::complex<double>(1.0); };
    auto id = [](std::int64_t n) { return n; };
    auto neg = [](std::int64_t n) { return -n; };
    for (const auto& w : {Weight::constant(), Weight::polynomial(2), Weight::subexp(0.5), Weight::exppoly(3)}) {
        const auto [lo, hi] = standard_iso_ratio_bounds(one, id, w, w, 20);
        CHECK(lo == 1.0);
        CHECK(hi == 1.0);
    }
    const auto p2 = Weight::polynomial(2);
    const auto [lo2, hi2] = standard_iso_ratio_bounds(one, neg, p2, p2, 20);
    CHECK(lo2 == 1.0);
    CHECK(hi2 == 1.0);

    const auto p1 = Weight::polynomial(1);
    const auto [lo3, hi3] = standard_iso_ratio_bounds(
        [](std::int64_t n) { return std::complex<double>(std::pow(2.0, double(n))); }, id, p1, p1, 10);
    CHECK(lo3 == doctest::Approx(std::pow(2.0, -10)));
    CHECK(hi3 == doctest::Approx(std::pow(2.0, 10)));

    CHECK_THROWS_AS(standard_iso_ratio_bounds([](std::int64_t n) { return std::complex<double>(n == 3 ? 0.0 : 1.0); },
                                              id, p1, p1, 10),
                    InvalidCharacterError);

    auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(4));
    const auto w = Weight::tabulated(G, {1.0, 2.0, 3.0, 2.0});
    const std::vector<std::complex<double>> gamma = {1.0, std::complex<double>(0, 1), -1.0, std::complex<double>(0, -1)};
    const std::vector<Element> phi = {0, 3, 2, 1};
    const auto [lo4, hi4] = standard_iso_ratio_bounds(gamma, phi, w, w);
    CHECK(lo4 == 1.0);
    CHECK(hi4 == 1.0);
}
