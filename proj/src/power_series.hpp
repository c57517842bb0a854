#pragma once

// Truncated power-series helpers shared by circlemaps and compops.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace wlp::detail {

// Series of b_r on [0, K]; trailing underflowed entries are dropped.
inline std::vector<double> blaschke_series(double r, std::int64_t K) {
    std::vector<double> b;
    b.reserve(static_cast<std::size_t>(K + 1));
    b.push_back(-r);
    double pw = 1.0 - r * r;
    for (std::int64_t k = 1; k <= K; ++k) {
        if (pw == 0.0) break;
        b.push_back(pw);
        pw *= r;
    }
    return b;
}

// First `len` coefficients of a*b.
inline std::vector<double> series_mul(const std::vector<double>& a, const std::vector<double>& b, std::size_t len) {
    std::vector<double> out(len, 0.0);
    const std::size_t la = std::min(a.size(), len);
    for (std::size_t i = 0; i < la; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        const std::size_t lb = std::min(b.size(), len - i);
        double* dst = out.data() + i;
        for (std::size_t j = 0; j < lb; ++j) dst[j] += ai * b[j];
    }
    return out;
}

// b_r^n on [0, K], n >= 1, by binary powering of truncated series.
inline std::vector<double> blaschke_power_series(double r, std::int64_t n, std::int64_t K) {
    const std::size_t len = static_cast<std::size_t>(K + 1);
    std::vector<double> base = blaschke_series(r, K);
    std::vector<double> acc;
    bool have = false;
    for (std::int64_t e = n; e > 0; e >>= 1) {
        if (e & 1) {
            acc = have ? series_mul(acc, base, len) : base;
            have = true;
        }
        if (e > 1) base = series_mul(base, base, len);
    }
    acc.resize(len, 0.0);
    return acc;
}

// Geometric bound on sum_{k > K} |c_k| from the decay of the last entries,
// or a negative value when the tail is not yet in its monotone regime.
inline double geometric_tail(const std::vector<double>& c, std::int64_t min_index) {
    const std::size_t K = c.size() - 1;
    constexpr std::size_t kProbe = 8;
    if (K < kProbe + 1 || static_cast<std::int64_t>(K) < min_index) return -1.0;
    const double last = std::abs(c[K]);
    if (last == 0.0) return 0.0;
    double prev_ratio = std::numeric_limits<double>::infinity();
    double rho = 0.0;
    for (std::size_t k = K - kProbe + 1; k <= K; ++k) {
        const double den = std::abs(c[k - 1]);
        if (den == 0.0) return -1.0;
        rho = std::abs(c[k]) / den;
        if (!(rho < 1.0) || rho > prev_ratio * (1.0 + 1e-9)) return -1.0;
        prev_ratio = rho;
    }
    return last * rho / (1.0 - rho);
}

} // namespace wlp::detail
