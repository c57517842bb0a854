#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "wlp/compops.hpp"
#include "wlp/error.hpp"

using namespace wlp;
using oracle::cplx;

TEST_CASE("operator matrix patterns") {
    const cplx lam = std::polar(1.0, 0.5);
    const auto mono = build_matrix(CircleMap::monomial(lam, 2), -3, 3);
    CHECK(mono.is_phased_permutation());
    CHECK(std::abs(mono(6, 3) - std::pow(lam, 3.0)) < 1e-15);
    CHECK(std::abs(mono(-4, -2) - std::pow(lam, -2.0)) < 1e-15);

    const auto refl = build_matrix(CircleMap::monomial(1.0, -1), -2, 2);
    CHECK(refl.is_phased_permutation());
    CHECK(refl(-2, 2) == cplx(1.0));

    const auto b = build_matrix(CircleMap::blaschke(0.4), -4, 4, 1e-12);
    CHECK_FALSE(b.is_phased_permutation());
    CHECK(b.column_support(0) == 1);
    CHECK(b.column_support(1) >= 2);
    // column -n is the reflected conjugate of column n
    const auto c3 = b.column(3), cm3 = b.column(-3);
    CHECK(max_abs_distance(cm3, reflect_conj(c3)) < 1e-15);
    CHECK(build_matrix(CircleMap::blaschke(0.0), -3, 3).is_phased_permutation());
}

TEST_CASE("column ratios") {
    const auto b = CircleMap::blaschke(0.5);
    for (std::int64_t n : {-7, 1, 12}) CHECK(column_ratio(b, Weight::constant(), 1.0, n) >= 1.0 - 1e-12);
    CHECK(column_ratio(CircleMap::monomial(std::polar(1.0, 0.2), 1), Weight::polynomial(2), 1, 9) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(column_ratio(CircleMap::monomial(1.0, -1), Weight::subexp(0.5), 2, -6) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // Parseval: b_r^n is inner, so the unweighted l2 column norm is 1
    CHECK(column_ratio(b, Weight::constant(), 2.0, 20) == doctest::Approx(1.0).epsilon(1e-10));
    // n = 1: r + (1 - r^2) / (1 - r)
    const double r = 0.5;
    CHECK(column_ratio(b, Weight::constant(), 1.0, 1) == doctest::Approx(r + (1 + r)).epsilon(1e-12));

    const auto cn = column_norm(b, Weight::polynomial(2), 1.0, 5);
    CHECK(cn.tail_estimate < 1e-12);
    CHECK(cn.ratio == doctest::Approx(cn.norm / 25.0));
    CHECK_THROWS_AS(column_norm(CircleMap::blaschke(0.5), Weight::exppoly(4.0), 1.0, 400), RangeError);
}

TEST_CASE("blow-up, subexponential weight") {
    BlowupParams p;
    p.weight_case = 1;
    p.gamma = 0.5;
    p.r = 0.5;
    p.p = 1.0;
    p.n_list = {9, 16, 25, 36, 49};
    const auto rows = blowup_experiment(p, 2);
    // 50-digit reference values
    constexpr std::array<double, 5> ref{13.5174330832504, 28.8860871461231, 61.3883413602979, 130.51720709015,
                                        276.709710470462};
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(rows[i].ratio == doctest::Approx(ref[i]).epsilon(1e-10));
        CHECK(rows[i].k_n == static_cast<std::int64_t>(3 * p.n_list[i]));
        CHECK(rows[i].scaled_coeff > 0.1);
        CHECK(rows[i].single_coeff_ratio <= rows[i].ratio);
    }
    for (std::size_t i = 1; i < 5; ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);
}

TEST_CASE("blow-up, exponential weight") {
    BlowupParams p;
    p.weight_case = 2;
    p.a = 2.0;
    p.r = 0.3;
    p.n_list = {5, 10, 15, 20, 25};
    const auto rows = blowup_experiment(p);
    constexpr std::array<double, 5> ref{330.503060659067, 14001.6557474991, 599778.245248373, 25822097.3264424,
                                        1114322569.07251};
    for (std::size_t i = 0; i < 5; ++i) CHECK(rows[i].ratio == doctest::Approx(ref[i]).epsilon(1e-10));

    p.r = 0.5;
    CHECK_THROWS_AS(blowup_weight(p), AdmissibilityError);
    p.r = 0.0;
    p.n_list = {3, 8};
    for (const auto& row : blowup_experiment(p)) CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("singular values") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd A(40, 30);
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) A(i, j) = cplx(g(rng), g(rng));
    const double ref = oracle::top_singular_value(A);
    CHECK(largest_singular_value_with(A, {}).norm == doctest::Approx(ref).epsilon(1e-12));
    NormOptions pi;
    pi.method = NormMethod::PowerIteration;
    pi.rel_tol = 1e-12;
    CHECK(largest_singular_value(A, pi).norm == doctest::Approx(ref).epsilon(1e-8));
    pi.max_iterations = 2;
    CHECK_THROWS_AS(largest_singular_value(A, pi), AccuracyError);
}

TEST_CASE("weighted operator norms") {
    CHECK(op_norm_l2(CircleMap::blaschke(0.0), Weight::polynomial(2), 50) == 1.0);
    CHECK(op_norm_l2(CircleMap::monomial(std::polar(1.0, 1.0), -1), Weight::polynomial(2), 30) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // unweighted: ||C_{b_r}|| = sqrt((1+r)/(1-r)) in the limit
    const double r = 0.3;
    CHECK(op_norm_l2(CircleMap::blaschke(r), Weight::constant(), 60) ==
          doctest::Approx(std::sqrt((1 + r) / (1 - r))).epsilon(1e-3));

    for (double rr : {0.05, -0.1}) {
        const std::int64_t N = 24;
        const auto Aref = oracle::blaschke_weighted_matrix(rr, N, 120, 2.0).cast<cplx>();
        const double ref = oracle::top_singular_value(Aref);
        CHECK(op_norm_l2(CircleMap::blaschke(rr), Weight::polynomial(2), N) == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("K bound") {
    CHECK(k_bound(0.0, Weight::polynomial(2), 1.0) == 1.0);
    CHECK(k_bound(0.1, Weight::polynomial(2), 1.0) == doctest::Approx(1.345261453).epsilon(1e-9));
    CHECK(k_bound(-0.1, Weight::polynomial(2), 1.0) == k_bound(0.1, Weight::polynomial(2), 1.0));
    CHECK_THROWS_AS(k_bound(1.0, Weight::polynomial(2), 1.0), ParameterError);
    CHECK_THROWS_AS(k_bound(0.1, Weight::polynomial(0.5), 1.0), ParameterError);
}

TEST_CASE("distortion") {
    const std::array<double, 4> rs{0.02, 0.05, 0.1, 0.2};
    // full SVD of the same truncation at N = 256
    constexpr std::array<double, 4> ref{1.1276789157182965, 1.3506843052632833, 1.8270737843630767,
                                        3.379317229249687};
    const auto reps = distortion_experiment(Weight::polynomial(2), rs, 256, 1.0, 4);
    REQUIRE(reps.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(reps[i].distortion == doctest::Approx(ref[i]).epsilon(1e-8));
        CHECK(reps[i].norm_fwd == doctest::Approx(reps[i].norm_inv).epsilon(1e-10));
        CHECK(reps[i].column1_support >= 2);
    }
    CHECK(reps[0].within_k_bound);
    CHECK(reps[0].distortion <= 1.25);
    CHECK_THROWS_AS(distortion_experiment(Weight::polynomial(1.5), rs, 16, 1.0), ParameterError);
    const std::array<double, 1> bad{1.0};
    CHECK_THROWS_AS(distortion_experiment(Weight::polynomial(2), bad, 16, 1.0), ParameterError);
}

TEST_CASE("chain rule and extension step") {
    std::mt19937_64 rng(5);
    const auto f = oracle::random_seq(rng, -8, 17);
    for (double r : {0.2, -0.55}) {
        const auto rep = chain_rule_check(f, CircleMap::blaschke(r));
        CHECK(rep.residual_l1 < 1e-8 * std::max(1.0, rep.lhs_l1));
    }
    CHECK(chain_rule_check(f, CircleMap::monomial(std::polar(1.0, 0.3), -1)).residual_l1 < 1e-12);

    const auto g = oracle::random_seq(rng, -5, 11);
    const auto ext = extension_step_check(g, CircleMap::blaschke(0.3), 2, 1.0);
    CHECK(std::isfinite(ext.image_norm));
    CHECK(ext.ratio == doctest::Approx(ext.image_norm / ext.input_norm));
    const auto id = extension_step_check(g, CircleMap::identity(), 2, 1.0);
    // (g o id)/id is a shift by one
    CHECK(max_abs_distance(id.image, translate(g, -1)) < 1e-14);
    CHECK_THROWS_AS(extension_step_check(g, CircleMap::identity(), 0, 1.0), ParameterError);
}

TEST_CASE("standard automorphisms") {
    const auto f = TruncSeq(-1, {1.0, 2.0, 3.0});
    const cplx lam(0, 1);
    const auto t = standard_automorphism(f, lam, false);
    CHECK(std::abs(t[-1] - cplx(0, -1)) < 1e-15);
    CHECK(std::abs(t[1] - cplx(0, 3)) < 1e-15);
    const auto s = standard_automorphism(f, 1.0, true);
    CHECK(s[-1] == cplx(3.0));
    CHECK(norm_p_w(t, 1.0, Weight::polynomial(2)) == doctest::Approx(norm_p_w(f, 1.0, Weight::polynomial(2))));
    CHECK_THROWS_AS(standard_automorphism(f, cplx(2, 0), false), ParameterError);
}
