// Acceptance criteria 1-12: one PASS/FAIL line each, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wlp/circlemaps.hpp"
#include "wlp/compops.hpp"
#include "wlp/error.hpp"
#include "wlp/groupalg.hpp"
#include "wlp/seqalg.hpp"

using namespace wlp;
using oracle::cplx;

namespace {

struct Result {
    bool passed = false;
    std::string detail;
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Result convolution_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::int64_t> len(1, 256), off(-300, 300);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto f = oracle::random_seq(rng, off(rng), len(rng));
        const auto g = oracle::random_seq(rng, off(rng), len(rng));
        worst = std::max(worst, max_abs_distance(convolve_direct(f, g), convolve_fft(f, g)));
    }
    const double dt = seconds_since(t0);
    return {worst < 1e-9 && dt < 5.0, fmt("max error %.3g, %.2f s", worst, dt)};
}

Result blaschke_closed_form() {
    double worst = 0.0;
    for (double r : {0.3, 0.5, 0.7}) {
        const auto phi = CircleMap::blaschke(r);
        const auto c = coeffs_window(phi, -4, 200);
        for (std::int64_t k = -4; k <= 200; ++k) {
            const auto ref = oracle::circle_coefficient([&](cplx z) { return phi(z); }, k, 4096);
            worst = std::max(worst, std::abs(ref - c[k]));
        }
    }
    return {worst < 1e-10, fmt("max error %.3g over k in [-4, 200]", worst)};
}

Result standard_automorphisms() {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    double norm_err = 0.0, hom_err = 0.0;
    for (double p : {1.0, 2.0, 3.0})
        for (double a : {1.0, 2.0}) {
            const auto w = Weight::polynomial(a);
            for (int t = 0; t < 20; ++t) {
                const cplx lam = std::polar(1.0, angle(rng));
                const bool reflect = t % 2 == 1;
                const auto f = oracle::random_seq(rng, -15, 31);
                const auto g = oracle::random_seq(rng, -10, 21);
                const double nf = norm_p_w(f, p, w);
                const auto Tf = standard_automorphism(f, lam, reflect);
                norm_err = std::max(norm_err, std::abs(norm_p_w(Tf, p, w) - nf) / nf);
                const auto lhs = standard_automorphism(convolve(f, g), lam, reflect);
                const auto rhs = convolve(Tf, standard_automorphism(g, lam, reflect));
                hom_err = std::max(hom_err, max_abs_distance(lhs, rhs));
            }
        }
    return {norm_err < 1e-12 && hom_err < 1e-10,
            fmt("max relative norm change %.3g, max homomorphism defect %.3g", norm_err, hom_err)};
}

std::vector<std::vector<Element>> brute_automorphisms(const FiniteGroup& G) {
    std::vector<Element> perm(G.order());
    std::iota(perm.begin(), perm.end(), Element{0});
    std::vector<std::vector<Element>> out;
    do {
        bool ok = true;
        for (Element x = 0; x < G.order() && ok; ++x)
            for (Element y = 0; y < G.order() && ok; ++y) ok = perm[G.mul(x, y)] == G.mul(perm[x], perm[y]);
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::vector<cplx>> sign_characters(const FiniteGroup& G) {
    std::vector<std::vector<cplx>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << G.order()); ++mask) {
        std::vector<cplx> g(G.order());
        for (std::size_t x = 0; x < G.order(); ++x) g[x] = (mask >> x) & 1 ? -1.0 : 1.0;
        bool ok = true;
        for (Element x = 0; x < G.order() && ok; ++x)
            for (Element y = 0; y < G.order() && ok; ++y) ok = g[G.mul(x, y)] == g[x] * g[y];
        if (ok) out.push_back(g);
    }
    return out;
}

Result t_gamma_phi_homomorphism() {
    std::string detail;
    bool all = true, nonreal_z8 = false;
    auto run = [&](const GroupPtr& G, const std::vector<std::vector<Element>>& phis,
                   const std::vector<std::vector<cplx>>& gammas) {
        std::size_t count = 0;
        double worst = 0.0;
        for (const auto& phi : phis)
            for (const auto& gamma : gammas) {
                const StandardIso iso(G, G, phi, gamma);
                worst = std::max(worst, is_algebra_homomorphism(t_gamma_phi_matrix(iso), *G, *G, 1e-12).max_defect);
                ++count;
                if (G->order() == 8)
                    for (const auto& v : gamma) nonreal_z8 = nonreal_z8 || std::abs(v.imag()) > 0.5;
            }
        all = all && count >= 3 && worst < 1e-12;
        detail += fmt("%s: %zu pairs, defect %.3g; ", G->name().c_str(), count, worst);
    };
    for (std::size_t n : {6u, 8u}) {
        const auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
        std::vector<std::vector<cplx>> gammas;
        for (std::size_t k = 0; k < n; ++k) gammas.push_back(cyclic_character(n, k));
        run(G, cyclic_automorphisms(n), gammas);
    }
    const auto S3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
    run(S3, brute_automorphisms(*S3), sign_characters(*S3));
    detail += nonreal_z8 ? "non-real character on Z_8 included" : "no non-real character on Z_8";
    return {all && nonreal_z8, detail};
}

Result blowup_case1() {
    BlowupParams p;
    p.weight_case = 1;
    p.gamma = 0.5;
    p.r = 0.5;
    p.p = 1.0;
    p.n_list = {9, 16, 25, 36, 49};
    const auto rows = blowup_experiment(p, 4);
    bool increasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i) increasing = increasing && rows[i].ratio > rows[i - 1].ratio;
    // least squares of log(ratio) against n^gamma
    const std::size_t m = rows.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
        xs.push_back(std::pow(double(row.n), p.gamma));
        ys.push_back(std::log(row.ratio));
    }
    for (std::size_t i = 0; i < m; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / m;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < m; ++i) {
        ss_res += std::pow(ys[i] - (icpt + slope * xs[i]), 2);
        ss_tot += std::pow(ys[i] - sy / m, 2);
    }
    const double r2 = 1.0 - ss_res / ss_tot;
    return {increasing && slope > 0 && r2 > 0.9,
            fmt("ratios %.6g .. %.6g, slope %.5f, R^2 %.7f", rows.front().ratio, rows.back().ratio, slope, r2)};
}

Result blowup_case2() {
    BlowupParams p;
    p.weight_case = 2;
    p.a = 2.0;
    p.r = 0.3;
    p.n_list = {5, 10, 15, 20, 25};
    const auto rows = blowup_experiment(p, 4);
    bool growing = true;
    double min_step = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const double q = rows[i + 1].ratio / rows[i].ratio;
        min_step = std::min(min_step, q);
        growing = growing && q > 1.0;
    }
    bool rejected = false;
    p.r = 0.6;
    try {
        blowup_weight(p);
    } catch (const AdmissibilityError&) {
        rejected = true;
    }
    return {growing && rejected,
            fmt("min ratio(n+5)/ratio(n) %.4g, r = 0.6 %s", min_step, rejected ? "rejected" : "accepted")};
}

Result unweighted_contrast() {
    const auto phi = CircleMap::blaschke(0.5);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::int64_t n = -50; n <= 50; ++n) {
        const double v = column_ratio(phi, Weight::constant(), 2.0, n);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo >= 0.99 && hi <= 1.01, fmt("column ratios in [%.15f, %.15f]", lo, hi)};
}

Result distortion() {
    const std::array<double, 4> rs{0.02, 0.05, 0.1, 0.2};
    const auto w = Weight::polynomial(2);
    const auto a = distortion_experiment(w, rs, 256, 1.0, 4);
    const auto b = distortion_experiment(w, rs, 512, 1.0, 4);
    bool increasing = true, witness = true;
    double drift = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i > 0) increasing = increasing && a[i].distortion > a[i - 1].distortion;
        witness = witness && a[i].column1_support >= 2;
        drift = std::max(drift, std::abs(b[i].norm_fwd - a[i].norm_fwd) / a[i].norm_fwd);
        drift = std::max(drift, std::abs(b[i].norm_inv - a[i].norm_inv) / a[i].norm_inv);
    }
    const bool small = a[0].distortion <= 1.25;
    return {increasing && small && drift < 0.01 && witness,
            fmt("distortion %.6f %.6f %.6f %.6f; N 256 vs 512 drift %.3g; column-1 supports %zu %zu %zu %zu",
                a[0].distortion, a[1].distortion, a[2].distortion, a[3].distortion, drift, a[0].column1_support,
                a[1].column1_support, a[2].column1_support, a[3].column1_support)};
}

Result k_formula() {
    const double k0 = k_bound(0.0, Weight::polynomial(2), 1.0);
    const double k1 = k_bound(0.1, Weight::polynomial(2), 1.0);
    return {k0 == 1.0 && std::abs(k1 - 1.3453) < 1e-3, fmt("K(0) = %.17g, K(0.1) = %.10f", k0, k1)};
}

Result chain_rule() {
    std::mt19937_64 rng(1010);
    std::uniform_int_distribution<std::int64_t> lo(-20, 20);
    const auto phi = CircleMap::blaschke(0.3);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const auto a = lo(rng), b = lo(rng);
        const auto f = oracle::random_seq(rng, std::min(a, b), std::abs(a - b) + 1);
        worst = std::max(worst, chain_rule_check(f, phi).residual_l1);
    }
    return {worst < 1e-6, fmt("max l1 residual %.3g", worst)};
}

Result group_scan() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto c = enumerate_automorphisms_l2(5, 4);
    bool kw = true;
    std::string mins;
    for (std::size_t n : {3u, 4u, 5u, 6u}) {
        const auto k = kalton_wood_scan(n, 4);
        kw = kw && k.all_below_threshold_standard;
        mins += k.min_nonstandard_norm ? fmt(" %.4f", *k.min_nonstandard_norm) : std::string(" none");
    }
    const double dt = seconds_since(t0);
    const bool ok = c.total == 120 && c.standard_count == 20 && c.max_isometry_defect < 1e-10 &&
                    c.max_homomorphism_defect < 1e-10 && c.nonstandard_example.has_value() && kw && dt < 30.0;
    return {ok, fmt("Z_5: %zu total, %zu standard, isometry defect %.3g, example %s; min non-standard l1 norms n=3..6:%s; "
                    "%.2f s",
                    c.total, c.standard_count, c.max_isometry_defect, c.nonstandard_example ? "emitted" : "missing",
                    mins.c_str(), dt)};
}

Result shift_rigidity() {
    bool ok = true;
    std::string detail;
    for (const auto& G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(5), FiniteGroup::symmetric3()}) {
        const auto rep = shift_homomorphism_check(G, Weight::constant(), 1.0);
        ok = ok && rep.unique_solution;
        detail += fmt("%s%s %s", detail.empty() ? "" : "; ", G.name().c_str(), rep.unique_solution ? "unique" : "not unique");
    }
    return {ok, detail};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"convolution oracle equivalence", convolution_equivalence},
        {"Blaschke coefficients vs circle sampling", blaschke_closed_form},
        {"standard automorphism isometry and multiplicativity", standard_automorphisms},
        {"T_{gamma,phi} homomorphism", t_gamma_phi_homomorphism},
        {"blow-up, subexponential weight", blowup_case1},
        {"blow-up, exponential weight", blowup_case2},
        {"unweighted contrast", unweighted_contrast},
        {"distortion of C_{b_r}", distortion},
        {"K(r) formula", k_formula},
        {"chain rule", chain_rule},
        {"group scan", group_scan},
        {"shift rigidity", shift_rigidity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failed += r.passed ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", r.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
