#include "wlp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>

#include "wlp/circlemaps.hpp"
#include "wlp/compops.hpp"
#include "wlp/dft.hpp"
#include "wlp/error.hpp"
#include "wlp/groupalg.hpp"
#include "wlp/seqalg.hpp"
#include "wlp/weights.hpp"

namespace wlp {

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Check {
    std::string suite, name;
    std::function<Outcome()> body;
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
    }
    cplx disk() {
        return std::polar(std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
    }
    TruncSeq seq(std::int64_t lo, std::int64_t len) {
        std::vector<cplx> v(static_cast<std::size_t>(len));
        for (auto& x : v) x = disk();
        return TruncSeq(lo, std::move(v));
    }
    TruncSeq integer_seq(std::int64_t lo, std::int64_t len) {
        std::vector<cplx> v(static_cast<std::size_t>(len));
        for (auto& x : v) x = cplx(static_cast<double>(integer(-9, 9)), static_cast<double>(integer(-9, 9)));
        return TruncSeq(lo, std::move(v));
    }

private:
    std::mt19937_64 gen_;
};

std::vector<Weight> builtin_weights() {
    return {Weight::constant(),   Weight::polynomial(1), Weight::polynomial(2),
            Weight::subexp(0.5), Weight::exppoly(2)};
}

// All group automorphisms by brute force (small orders only).
std::vector<std::vector<Element>> brute_automorphisms(const FiniteGroup& G) {
    std::vector<Element> p(G.order());
    std::iota(p.begin(), p.end(), Element{0});
    std::vector<std::vector<Element>> out;
    do {
        bool ok = true;
        for (Element x = 0; x < G.order() && ok; ++x)
            for (Element y = 0; y < G.order() && ok; ++y) ok = p[G.mul(x, y)] == G.mul(p[x], p[y]);
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Characters with values in {1, -1} (all characters of S3).
std::vector<std::vector<cplx>> sign_characters(const FiniteGroup& G) {
    std::vector<std::vector<cplx>> out;
    for (std::uint32_t mask = 0; mask < (1u << G.order()); ++mask) {
        std::vector<cplx> g(G.order());
        for (Element x = 0; x < G.order(); ++x) g[x] = (mask >> x) & 1u ? -1.0 : 1.0;
        bool ok = true;
        for (Element x = 0; x < G.order() && ok; ++x)
            for (Element y = 0; y < G.order() && ok; ++y) ok = g[G.mul(x, y)] == g[x] * g[y];
        if (ok) out.push_back(g);
    }
    return out;
}

std::size_t modinv(std::size_t a, std::size_t n) {
    for (std::size_t b = 1; b < n; ++b)
        if (a * b % n == 1) return b;
    return 0;
}

void weights_checks(std::vector<Check>& out, std::uint64_t) {
    out.push_back({"weights", "identity_value_is_one", [] {
                       bool ok = true;
                       for (const auto& w : builtin_weights()) ok = ok && w(0) == 1.0;
                       return Outcome{ok, "w(0) = 1 for all built-in families"};
                   }});
    out.push_back({"weights", "polynomial_submultiplicative_constant", [] {
                       // w(2) = 2^a > w(1)^2: the best constant is 2^a, attained at m = n
                       bool ok = true;
                       double worst = 0.0;
                       for (double a : {0.0, 0.5, 1.0, 2.0, 3.0}) {
                           const auto r = check_submultiplicative(Weight::polynomial(a), 40);
                           const double c = std::pow(2.0, a);
                           worst = std::max(worst, std::abs(r.max_ratio - c) / c);
                           ok = ok && r.submultiplicative == (a == 0.0) && std::abs(r.max_ratio - c) <= 1e-12 * c;
                       }
                       return Outcome{ok, fmt("max_ratio = 2^a within %.3g over a in {0,0.5,1,2,3}, window 40", worst)};
                   }});
    out.push_back({"weights", "subexp_submultiplicative", [] {
                       bool ok = true;
                       double worst = 0.0;
                       for (double g : {0.25, 0.5, 0.75}) {
                           const auto r = check_submultiplicative(Weight::subexp(g), 40);
                           ok = ok && r.submultiplicative && r.max_ratio <= 1.0 + 1e-12;
                           worst = std::max(worst, r.max_ratio);
                       }
                       return Outcome{ok, fmt("max_ratio %.17g over gamma in {0.25,0.5,0.75}, window 40", worst)};
                   }});
    out.push_back({"weights", "exppoly_submultiplicative_constant", [] {
                       // (1 + (m+n)^2) <= (5/4)(1 + m^2)(1 + n^2), equality at m = n = 1
                       bool ok = true;
                       double worst = 0.0;
                       for (double a : {2.0, 3.0}) {
                           const auto r = check_submultiplicative(Weight::exppoly(a), 20);
                           worst = std::max(worst, std::abs(r.max_ratio - 1.25));
                           ok = ok && !r.submultiplicative && std::abs(r.max_ratio - 1.25) <= 1e-12;
                       }
                       return Outcome{ok, fmt("max_ratio = 5/4 within %.3g over a in {2,3}, window 20", worst)};
                   }});
    out.push_back({"weights", "tabulated_violation_detected", [] {
                       auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
                       const auto r = check_submultiplicative(Weight::tabulated(G, {1.0, 0.5, 0.5}));
                       return Outcome{!r.submultiplicative && r.max_excess > 0.0, fmt("max_excess %.6g", r.max_excess)};
                   }});
    out.push_back({"weights", "algebra_constant_monotone", [] {
                       const auto w = Weight::polynomial(2);
                       const auto c1 = algebra_constant(w, 2.0, 25), c2 = algebra_constant(w, 2.0, 50),
                                  c3 = algebra_constant(w, 2.0, 100);
                       const bool ok = c1.constant <= c2.constant && c2.constant <= c3.constant &&
                                       std::isfinite(c3.tail_bound) && c3.constant + c3.tail_bound < 1.1 * c3.constant;
                       return Outcome{ok, fmt("C = %.9g, %.9g, %.9g; tail %.3g", c1.constant, c2.constant, c3.constant,
                                              c3.tail_bound)};
                   }});
    out.push_back({"weights", "ratio_bounds_identity", [] {
                       bool ok = true;
                       for (const auto& w : builtin_weights()) {
                           const auto [lo, hi] = standard_iso_ratio_bounds([](std::int64_t) { return cplx(1.0); },
                                                                           [](std::int64_t n) { return n; }, w, w, 30);
                           ok = ok && lo == 1.0 && hi == 1.0;
                       }
                       return Outcome{ok, "(1, 1) for every built-in weight"};
                   }});
}

void seqalg_checks(std::vector<Check>& out, std::uint64_t seed) {
    out.push_back({"seqalg", "direct_vs_fft_convolution", [seed] {
                       Rng rng(seed);
                       double worst = 0.0;
                       for (int t = 0; t < 20; ++t) {
                           const auto f = rng.seq(rng.integer(-300, 300), rng.integer(1, 512));
                           const auto g = rng.seq(rng.integer(-300, 300), rng.integer(1, 512));
                           worst = std::max(worst, max_abs_distance(convolve_direct(f, g), convolve_fft(f, g)));
                       }
                       return Outcome{worst < 1e-9, fmt("max error %.3g over 20 pairs", worst)};
                   }});
    out.push_back({"seqalg", "convolution_theorem", [seed] {
                       Rng rng(seed + 1);
                       double worst = 0.0;
                       for (int t = 0; t < 20; ++t) {
                           const auto f = rng.seq(rng.integer(-50, 50), rng.integer(1, 100));
                           const auto g = rng.seq(rng.integer(-50, 50), rng.integer(1, 100));
                           const auto M = dft::next_pow2(f.size() + g.size());
                           const auto a = gelfand_sample(f, M), b = gelfand_sample(g, M);
                           const auto c = gelfand_sample(convolve(f, g), M);
                           for (std::size_t j = 0; j < M; ++j) worst = std::max(worst, std::abs(a[j] * b[j] - c[j]));
                       }
                       return Outcome{worst < 1e-9, fmt("max error %.3g", worst)};
                   }});
    out.push_back({"seqalg", "leibniz_rule_exact", [seed] {
                       Rng rng(seed + 2);
                       bool ok = true;
                       for (int t = 0; t < 20; ++t) {
                           const auto f = rng.integer_seq(rng.integer(-20, 20), rng.integer(1, 30));
                           const auto g = rng.integer_seq(rng.integer(-20, 20), rng.integer(1, 30));
                           const auto lhs = formal_derivative(convolve_direct(f, g));
                           const auto rhs = convolve_direct(formal_derivative(f), g) + convolve_direct(f, formal_derivative(g));
                           ok = ok && lhs == rhs;
                       }
                       return Outcome{ok, "20 integer-coefficient pairs"};
                   }});
    out.push_back({"seqalg", "translation_bound", [seed] {
                       Rng rng(seed + 3);
                       double worst = 0.0;
                       for (const auto& w : builtin_weights()) {
                           const double C = check_submultiplicative(w, 40).max_ratio;
                           for (double p : {1.0, 2.0}) {
                               for (int t = 0; t < 10; ++t) {
                                   const auto f = rng.seq(rng.integer(-15, 15), rng.integer(1, 15));
                                   const auto x = rng.integer(-10, 10);
                                   worst = std::max(worst, norm_p_w(translate(f, x), p, w) / (C * w(x) * norm_p_w(f, p, w)));
                               }
                           }
                       }
                       return Outcome{worst <= 1.0 + 1e-12, fmt("max ||l_x f|| / (C w(x) ||f||) = %.12g", worst)};
                   }});
    out.push_back({"seqalg", "young_bound", [seed] {
                       Rng rng(seed + 4);
                       double worst = 0.0;
                       for (double a : {1.0, 2.0}) {
                           const auto w = Weight::polynomial(a);
                           for (double p : {1.0, 2.0}) {
                               double bound = check_submultiplicative(w, 200).max_ratio;
                               if (p > 1.0) {
                                   const auto c = algebra_constant(w, p, 200);
                                   bound = std::pow(c.constant + c.tail_bound, 1.0 / c.q);
                               }
                               for (int t = 0; t < 10; ++t) {
                                   const auto f = rng.seq(rng.integer(-40, 20), rng.integer(1, 40));
                                   const auto g = rng.seq(rng.integer(-40, 20), rng.integer(1, 40));
                                   const double r = norm_p_w(convolve(f, g), p, w) / (norm_p_w(f, p, w) * norm_p_w(g, p, w));
                                   worst = std::max(worst, r / bound);
                               }
                           }
                       }
                       return Outcome{worst <= 1.0 + 1e-12, fmt("max ||f*g|| / (bound ||f|| ||g||) = %.6g", worst)};
                   }});
    out.push_back({"seqalg", "antiderivative_identity", [seed] {
                       Rng rng(seed + 5);
                       double worst = 0.0;
                       for (int t = 0; t < 10; ++t) {
                           const auto g = rng.seq(rng.integer(-20, 0), rng.integer(1, 30));
                           const auto fp = formal_derivative(antiderivative(g));
                           for (int j = 0; j < 64; ++j) {
                               const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * j / 64.0);
                               worst = std::max(worst, std::abs(gelfand_eval(fp, z) - (gelfand_eval(g, z) - g[0]) / z));
                           }
                       }
                       return Outcome{worst < 1e-12, fmt("max error %.3g at 64 roots of unity", worst)};
                   }});
}

void circlemaps_checks(std::vector<Check>& out, std::uint64_t seed) {
    out.push_back({"circlemaps", "unimodularity", [] {
                       double worst = 0.0;
                       std::vector<CircleMap> maps = {CircleMap::blaschke(0.3), CircleMap::blaschke(-0.7),
                                                      CircleMap::blaschke(0.95), CircleMap::monomial(cplx(0, 1), -1),
                                                      CircleMap::monomial(std::polar(1.0, 0.3), 3)};
                       for (const auto& phi : maps)
                           for (int j = 0; j < 1024; ++j)
                               worst = std::max(worst, std::abs(std::abs(eval_map(phi, std::polar(1.0, 2.0 * std::numbers::pi * j / 1024.0))) - 1.0));
                       return Outcome{worst < 1e-12, fmt("max ||phi(z)| - 1| = %.3g", worst)};
                   }});
    out.push_back({"circlemaps", "blaschke_coefficients_vs_sampling", [] {
                       double worst = 0.0;
                       constexpr std::size_t M = 4096;
                       for (double r : {0.3, 0.5, 0.7}) {
                           const auto phi = CircleMap::blaschke(r);
                           std::vector<cplx> s(M);
                           for (std::size_t j = 0; j < M; ++j) s[j] = phi(std::polar(1.0, 2.0 * std::numbers::pi * j / M));
                           const auto c = dft::forward(s);
                           const auto closed = coeffs_window(phi, -16, 64);
                           for (std::int64_t k = -16; k <= 64; ++k)
                               worst = std::max(worst, std::abs(c[static_cast<std::size_t>((k + M) % M)] / double(M) - closed[k]));
                       }
                       return Outcome{worst < 1e-10, fmt("max error %.3g, M = 4096", worst)};
                   }});
    out.push_back({"circlemaps", "pipeline_agreement", [] {
                       double worst = 0.0;
                       for (double r : {0.3, 0.6})
                           for (std::int64_t n : {-50, -17, -3, 1, 2, 5, 20, 50}) {
                               const auto phi = CircleMap::blaschke(r);
                               worst = std::max(worst, l1_distance(power_coeffs(phi, n, 1e-12), compose_transform(delta(n), phi)));
                           }
                       return Outcome{worst < 1e-8, fmt("max l1 distance %.3g", worst)};
                   }});
    out.push_back({"circlemaps", "inverse_map_round_trip", [seed] {
                       Rng rng(seed + 6);
                       double worst = 0.0;
                       for (double r : {0.2, 0.5}) {
                           const auto f = rng.seq(-10, 21);
                           const auto phi = CircleMap::blaschke(r);
                           const auto back = compose_transform(compose_transform(f, phi), phi.inverse());
                           worst = std::max(worst, l1_distance(back, f));
                       }
                       return Outcome{worst < 1e-7, fmt("max l1 error %.3g", worst)};
                   }});
    out.push_back({"circlemaps", "chain_rule", [seed] {
                       Rng rng(seed + 7);
                       double worst = 0.0;
                       for (int t = 0; t < 5; ++t) {
                           const auto f = rng.seq(-20, 41);
                           worst = std::max(worst, chain_rule_check(f, CircleMap::blaschke(0.3)).residual_l1);
                       }
                       return Outcome{worst < 1e-6, fmt("max l1 residual %.3g", worst)};
                   }});
    out.push_back({"circlemaps", "reciprocal_derivative_closed_form", [] {
                       double worst = 0.0;
                       for (double r : {0.3, -0.5}) {
                           const double s = 1.0 / (1.0 - r * r);
                           const TruncSeq expect(0, {s, -2.0 * r * s, r * r * s});
                           worst = std::max(worst, l1_distance(reciprocal_derivative_coeffs(CircleMap::blaschke(r), 1e-12), expect));
                       }
                       return Outcome{worst < 1e-10, fmt("max l1 error %.3g", worst)};
                   }});
}

void compops_checks(std::vector<Check>& out, std::uint64_t seed, unsigned jobs) {
    out.push_back({"compops", "standard_automorphisms_isometric", [seed] {
                       Rng rng(seed + 8);
                       double norm_err = 0.0, hom = 0.0;
                       for (double a : {1.0, 2.0}) {
                           const auto w = Weight::polynomial(a);
                           for (int t = 0; t < 20; ++t) {
                               const auto f = rng.seq(rng.integer(-30, 10), rng.integer(1, 30));
                               const auto g = rng.seq(rng.integer(-30, 10), rng.integer(1, 30));
                               const cplx lambda = std::polar(1.0, rng.uniform(0.0, 6.283));
                               const bool reflect = t % 2 == 1;
                               for (double p : {1.0, 2.0, 3.0}) {
                                   const double nf = norm_p_w(f, p, w);
                                   norm_err = std::max(norm_err, std::abs(norm_p_w(standard_automorphism(f, lambda, reflect), p, w) - nf) / nf);
                               }
                               const auto lhs = standard_automorphism(convolve(f, g), lambda, reflect);
                               const auto rhs = convolve(standard_automorphism(f, lambda, reflect), standard_automorphism(g, lambda, reflect));
                               hom = std::max(hom, max_abs_distance(lhs, rhs));
                           }
                       }
                       return Outcome{norm_err < 1e-12 && hom < 1e-10,
                                      fmt("relative norm error %.3g, homomorphism defect %.3g", norm_err, hom)};
                   }});
    out.push_back({"compops", "unweighted_columns_bounded", [] {
                       double lo = 1e300, hi = 0.0;
                       const auto phi = CircleMap::blaschke(0.5);
                       for (std::int64_t n = -50; n <= 50; ++n) {
                           const double r = column_ratio(phi, Weight::constant(), 2.0, n);
                           lo = std::min(lo, r);
                           hi = std::max(hi, r);
                       }
                       return Outcome{lo >= 0.99 && hi <= 1.01, fmt("ratios in [%.12g, %.12g] for |n| <= 50", lo, hi)};
                   }});
    out.push_back({"compops", "weighted_columns_diverge", [] {
                       const auto phi = CircleMap::blaschke(0.3);
                       bool ok = true;
                       double prev_s = 0.0, prev_e = 0.0;
                       for (std::int64_t n : {5, 10, 20, 40}) {
                           const double s = column_ratio(phi, Weight::subexp(0.5), 2.0, n);
                           const double e = column_ratio(phi, Weight::exppoly(2.0), 2.0, n);
                           ok = ok && s > prev_s && e > prev_e;
                           prev_s = s;
                           prev_e = e;
                       }
                       return Outcome{ok, fmt("ratios at n = 40: subexp %.6g, exppoly %.6g", prev_s, prev_e)};
                   }});
    out.push_back({"compops", "blowup_case1", [jobs] {
                       BlowupParams b;
                       b.weight_case = 1;
                       b.gamma = 0.5;
                       b.r = 0.5;
                       b.p = 1.0;
                       b.n_list = {9, 16, 25, 36, 49};
                       const auto rows = blowup_experiment(b, jobs);
                       bool inc = true;
                       for (std::size_t i = 1; i < rows.size(); ++i) inc = inc && rows[i].ratio > rows[i - 1].ratio;
                       // least squares of log(ratio) against sqrt(n)
                       double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
                       const double m = static_cast<double>(rows.size());
                       for (const auto& r : rows) {
                           const double x = std::sqrt(double(r.n)), y = std::log(r.ratio);
                           sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
                       }
                       const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
                       const double r2 = std::pow(m * sxy - sx * sy, 2) / ((m * sxx - sx * sx) * (m * syy - sy * sy));
                       return Outcome{inc && slope > 0 && r2 > 0.9, fmt("slope %.6g, R^2 %.9g", slope, r2)};
                   }});
    out.push_back({"compops", "blowup_case2", [jobs] {
                       BlowupParams b;
                       b.weight_case = 2;
                       b.a = 2.0;
                       b.r = 0.3;
                       b.p = 1.0;
                       b.n_list = {5, 10, 15, 20, 25};
                       const auto rows = blowup_experiment(b, jobs);
                       bool inc = true;
                       for (std::size_t i = 1; i < rows.size(); ++i) inc = inc && rows[i].ratio > rows[i - 1].ratio;
                       bool rejected = false;
                       b.r = 0.6;
                       try {
                           blowup_experiment(b, 1);
                       } catch (const AdmissibilityError&) {
                           rejected = true;
                       }
                       return Outcome{inc && rejected, fmt("ratio(25) = %.9g; r = 0.6 rejected: %d", rows.back().ratio, int(rejected))};
                   }});
    out.push_back({"compops", "k_bound_values", [] {
                       const double k0 = k_bound(0.0, Weight::polynomial(2), 1.0);
                       const double k1 = k_bound(0.1, Weight::polynomial(2), 1.0);
                       return Outcome{k0 == 1.0 && std::abs(k1 - 1.3453) < 1e-3, fmt("K(0) = %.17g, K(0.1) = %.9g", k0, k1)};
                   }});
    out.push_back({"compops", "monomial_operator_norm", [] {
                       double worst = 0.0;
                       for (std::int64_t m : {1, -1})
                           worst = std::max(worst, std::abs(op_norm_l2(CircleMap::monomial(std::polar(1.0, 0.7), m), Weight::polynomial(2), 40) - 1.0));
                       return Outcome{worst < 1e-10, fmt("max |norm - 1| = %.3g", worst)};
                   }});
    out.push_back({"compops", "distortion_experiment", [jobs] {
                       const std::vector<double> rs = {0.02, 0.05, 0.1, 0.2};
                       const auto w = Weight::polynomial(2);
                       const auto a = distortion_experiment(w, rs, 256, 1.0, jobs);
                       const auto b = distortion_experiment(w, rs, 512, 1.0, jobs);
                       bool inc = true, lower = true, witness = true;
                       double drift = 0.0;
                       for (std::size_t i = 0; i < a.size(); ++i) {
                           if (i > 0) inc = inc && a[i].distortion > a[i - 1].distortion;
                           lower = lower && a[i].distortion >= 1.0 - 1e-9;
                           witness = witness && a[i].column1_support >= 2;
                           drift = std::max(drift, std::abs(b[i].norm_fwd - a[i].norm_fwd) / a[i].norm_fwd);
                           drift = std::max(drift, std::abs(b[i].norm_inv - a[i].norm_inv) / a[i].norm_inv);
                       }
                       const bool ok = inc && lower && witness && a[0].distortion <= 1.25 && drift < 0.01;
                       return Outcome{ok, fmt("distortion %.9g %.9g %.9g %.9g; N 256 vs 512 drift %.3g", a[0].distortion,
                                              a[1].distortion, a[2].distortion, a[3].distortion, drift)};
                   }});
    out.push_back({"compops", "extension_step", [seed] {
                       const auto e = extension_step_check(delta(1), CircleMap::blaschke(0.3), 2, 2.0);
                       const bool unit = l1_distance(e.image, delta(0)) < 1e-12 && std::abs(e.ratio - 1.0) < 1e-12;
                       Rng rng(seed + 9);
                       const auto g = rng.seq(-10, 21);
                       const auto r = extension_step_check(g, CircleMap::blaschke(0.3), 2, 2.0);
                       return Outcome{unit && std::isfinite(r.ratio), fmt("delta(1) ratio %.12g; random g ratio %.9g", e.ratio, r.ratio)};
                   }});
}

void groupalg_checks(std::vector<Check>& out, std::uint64_t seed, unsigned jobs) {
    out.push_back({"groupalg", "t_gamma_phi_homomorphism", [] {
                       double worst = 0.0;
                       std::size_t count = 0;
                       for (std::size_t n = 1; n <= 12; ++n) {
                           auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
                           for (const auto& phi : cyclic_automorphisms(n))
                               for (std::size_t k = 0; k < n; ++k) {
                                   const StandardIso iso(G, G, phi, cyclic_character(n, k));
                                   worst = std::max(worst, is_algebra_homomorphism(t_gamma_phi_matrix(iso), *G, *G, 0.0).max_defect);
                                   ++count;
                               }
                       }
                       auto S = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
                       for (const auto& phi : brute_automorphisms(*S))
                           for (const auto& gamma : sign_characters(*S)) {
                               const StandardIso iso(S, S, phi, gamma);
                               worst = std::max(worst, is_algebra_homomorphism(t_gamma_phi_matrix(iso), *S, *S, 0.0).max_defect);
                               ++count;
                           }
                       return Outcome{worst < 1e-12, fmt("max defect %.3g over %zu isomorphisms", worst, count)};
                   }});
    out.push_back({"groupalg", "bipositive_iff_positive_character", [] {
                       bool agree = true;
                       for (std::size_t n : {4, 6, 8}) {
                           auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
                           const auto w = Weight::constant(G);
                           for (const auto& phi : cyclic_automorphisms(n))
                               for (std::size_t k = 0; k < n; ++k) {
                                   const StandardIso iso(G, G, phi, cyclic_character(n, k));
                                   const bool positive = k == 0;
                                   agree = agree && classify_iso(t_gamma_phi_matrix(iso), 2.0, w, w).bipositive == positive;
                               }
                       }
                       return Outcome{agree, "Z_4, Z_6, Z_8: bipositive exactly for gamma = 1"};
                   }});
    out.push_back({"groupalg", "isometric_weight_ratio", [] {
                       auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(6));
                       const auto w2 = Weight::tabulated(G, {1.0, 2.0, 3.0, 3.5, 3.0, 2.0});
                       double worst = 0.0;
                       bool iso_all = true;
                       for (const auto& phi : cyclic_automorphisms(6)) {
                           std::vector<double> v1(6);
                           for (Element x = 0; x < 6; ++x) v1[x] = w2.at(phi[x]);
                           const auto w1 = Weight::tabulated(G, v1);
                           for (std::size_t k = 0; k < 6; ++k) {
                               const StandardIso iso(G, G, phi, cyclic_character(6, k));
                               for (double p : {1.0, 2.0, 3.0})
                                   iso_all = iso_all && classify_iso(t_gamma_phi_matrix(iso), p, w1, w2).isometric;
                               for (Element x = 0; x < 6; ++x)
                                   worst = std::max(worst, std::abs(std::abs(iso.gamma()[x]) - w1.at(x) / w2.at(phi[x])));
                           }
                       }
                       return Outcome{iso_all && worst < 1e-12, fmt("max ||gamma| - w1/w2(phi)| = %.3g", worst)};
                   }});
    out.push_back({"groupalg", "fourier_realization_of_affine_maps", [] {
                       double worst = 0.0;
                       for (std::size_t n : {5, 6, 8}) {
                           auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
                           for (std::size_t a = 1; a < n; ++a) {
                               if (std::gcd(a, n) != 1) continue;
                               const std::size_t ainv = n == 1 ? 0 : modinv(a, n);
                               for (std::size_t k = 0; k < n; ++k) {
                                   std::vector<std::size_t> sigma(n);
                                   for (std::size_t j = 0; j < n; ++j) sigma[j] = (a * j + k) % n;
                                   std::vector<Element> phi(n);
                                   for (std::size_t x = 0; x < n; ++x) phi[x] = ainv * x % n;
                                   const StandardIso iso(G, G, phi, cyclic_character(n, k * ainv % n));
                                   worst = std::max(worst, (fourier_permutation_operator(sigma) - t_gamma_phi_matrix(iso)).cwiseAbs().maxCoeff());
                               }
                           }
                       }
                       return Outcome{worst < 1e-12, fmt("max entry difference %.3g", worst)};
                   }});
    out.push_back({"groupalg", "automorphism_census", [jobs] {
                       const auto c5 = enumerate_automorphisms_l2(5, jobs);
                       const auto c2 = enumerate_automorphisms_l2(2, jobs);
                       const auto c1 = enumerate_automorphisms_l2(1, jobs);
                       const bool ok = c5.total == 120 && c5.standard_count == 20 && c5.nonstandard_example &&
                                       c5.max_isometry_defect < 1e-10 && c5.max_homomorphism_defect < 1e-10 &&
                                       c2.total == 2 && c2.standard_count == 2 && !c2.nonstandard_example &&
                                       c1.total == 1 && c1.standard_count == 1;
                       return Outcome{ok, fmt("Z_5: %zu total, %zu standard, isometry defect %.3g", c5.total, c5.standard_count,
                                              c5.max_isometry_defect)};
                   }});
    out.push_back({"groupalg", "kalton_wood_scan", [jobs] {
                       bool ok = true;
                       std::string detail;
                       for (std::size_t n : {3, 4, 5, 6}) {
                           const auto r = kalton_wood_scan(n, jobs);
                           ok = ok && r.all_below_threshold_standard && std::abs(r.max_standard_norm - 1.0) < 1e-12;
                           detail += r.min_nonstandard_norm ? fmt("n=%zu min %.6g; ", n, *r.min_nonstandard_norm) : fmt("n=%zu none; ", n);
                       }
                       detail.resize(detail.size() - 2);
                       return Outcome{ok, detail};
                   }});
    out.push_back({"groupalg", "shift_homomorphism_rigidity", [] {
                       bool ok = true;
                       std::vector<FiniteGroup> groups = {FiniteGroup(1, {0}), FiniteGroup::cyclic(2), FiniteGroup::cyclic(5),
                                                          FiniteGroup::symmetric3()};
                       for (const auto& G : groups) {
                           const auto r = shift_homomorphism_check(G, Weight::constant(), 1.0);
                           ok = ok && r.unique_solution && r.multipliers_ok && r.max_translation_ratio <= 1.0;
                       }
                       return Outcome{ok, "trivial group, Z_2, Z_5, S3"};
                   }});
    out.push_back({"groupalg", "scaling_breaks_multiplicativity", [] {
                       const auto G = FiniteGroup::cyclic(2);
                       const auto r = is_algebra_homomorphism(2.0 * Eigen::MatrixXcd::Identity(2, 2), G, G, 1e-12);
                       return Outcome{!r.ok && std::abs(r.max_defect - 2.0) < 1e-15, fmt("defect %.17g", r.max_defect)};
                   }});
    (void)seed;
}

} // namespace

std::vector<std::string> verify_suites() { return {"weights", "seqalg", "circlemaps", "compops", "groupalg"}; }

std::vector<CheckResult> run_verify(const std::string& suite, std::uint64_t seed, unsigned jobs) {
    const auto names = verify_suites();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw ParameterError("unknown suite '" + suite + "'");
    std::vector<Check> checks;
    weights_checks(checks, seed);
    seqalg_checks(checks, seed);
    circlemaps_checks(checks, seed);
    compops_checks(checks, seed, jobs);
    groupalg_checks(checks, seed, jobs);

    std::vector<CheckResult> out;
    for (const auto& c : checks) {
        if (suite != "all" && c.suite != suite) continue;
        CheckResult r{c.suite, c.name, false, {}};
        try {
            const Outcome o = c.body();
            r.passed = o.passed;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.detail = std::string("error: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace wlp
