#include "wlp/seqalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wlp/dft.hpp"
#include "wlp/error.hpp"

namespace wlp {

namespace {

constexpr std::size_t kMaxLength = std::size_t{1} << 28;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw SizeError("sequence index range overflows");
    return out;
}

// Direct sums below this many products; the DFT route above.
constexpr std::size_t kDirectThreshold = std::size_t{1} << 14;

} // namespace

TruncSeq::TruncSeq(std::int64_t lo, std::vector<cplx> values) {
    std::size_t first = 0, last = values.size();
    while (first < last && values[first] == cplx{}) ++first;
    while (last > first && values[last - 1] == cplx{}) --last;
    if (first == last) return;
    if (last - first > kMaxLength) throw SizeError("sequence support exceeds the size cap");
    lo_ = checked_add(lo, static_cast<std::int64_t>(first));
    checked_add(lo_, static_cast<std::int64_t>(last - first));
    values_.assign(values.begin() + static_cast<std::ptrdiff_t>(first),
                   values.begin() + static_cast<std::ptrdiff_t>(last));
}

cplx TruncSeq::operator[](std::int64_t n) const noexcept {
    if (values_.empty() || n < lo_ || n > hi()) return {};
    return values_[static_cast<std::size_t>(n - lo_)];
}

double TruncSeq::l1_norm() const noexcept {
    double s = 0.0;
    for (const auto& v : values_) s += std::abs(v);
    return s;
}

double TruncSeq::linf_norm() const noexcept {
    double s = 0.0;
    for (const auto& v : values_) s = std::max(s, std::abs(v));
    return s;
}

namespace {
template <class Op>
TruncSeq combine(const TruncSeq& f, const TruncSeq& g, Op op) {
    if (f.is_zero() && g.is_zero()) return {};
    const std::int64_t lo = f.is_zero() ? g.lo() : g.is_zero() ? f.lo() : std::min(f.lo(), g.lo());
    const std::int64_t hi = f.is_zero() ? g.hi() : g.is_zero() ? f.hi() : std::max(f.hi(), g.hi());
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) out[static_cast<std::size_t>(n - lo)] = op(f[n], g[n]);
    return TruncSeq(lo, std::move(out));
}
} // namespace

TruncSeq TruncSeq::operator+(const TruncSeq& other) const {
    return combine(*this, other, [](cplx a, cplx b) { return a + b; });
}

TruncSeq TruncSeq::operator-(const TruncSeq& other) const {
    return combine(*this, other, [](cplx a, cplx b) { return a - b; });
}

TruncSeq TruncSeq::operator*(cplx scalar) const {
    std::vector<cplx> out(values_);
    for (auto& v : out) v *= scalar;
    return TruncSeq(lo_, std::move(out));
}

TruncSeq delta(std::int64_t n) { return TruncSeq(n, {cplx{1.0, 0.0}}); }

namespace {
void check_product_size(const TruncSeq& f, const TruncSeq& g) {
    checked_add(f.lo(), g.lo());
    checked_add(f.hi(), g.hi());
    if (f.size() + g.size() - 1 > kMaxLength) throw SizeError("convolution exceeds the size cap");
}
} // namespace

TruncSeq convolve_direct(const TruncSeq& f, const TruncSeq& g) {
    if (f.is_zero() || g.is_zero()) return {};
    check_product_size(f, g);
    const auto a = f.values(), b = g.values();
    std::vector<cplx> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == cplx{}) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return TruncSeq(f.lo() + g.lo(), std::move(out));
}

TruncSeq convolve_fft(const TruncSeq& f, const TruncSeq& g) {
    if (f.is_zero() || g.is_zero()) return {};
    check_product_size(f, g);
    const std::size_t len = f.size() + g.size() - 1;
    const std::size_t M = dft::next_pow2(len);
    std::vector<cplx> a(M), b(M);
    std::copy(f.values().begin(), f.values().end(), a.begin());
    std::copy(g.values().begin(), g.values().end(), b.begin());
    auto A = dft::forward(a);
    const auto B = dft::forward(b);
    for (std::size_t k = 0; k < M; ++k) A[k] *= B[k];
    auto c = dft::backward(A);
    c.resize(len);
    const double scale = 1.0 / static_cast<double>(M);
    for (auto& v : c) v *= scale;
    return TruncSeq(f.lo() + g.lo(), std::move(c));
}

TruncSeq convolve(const TruncSeq& f, const TruncSeq& g) {
    if (f.size() * g.size() <= kDirectThreshold || std::min(f.size(), g.size()) <= 8)
        return convolve_direct(f, g);
    return convolve_fft(f, g);
}

TruncSeq convolve_window(const TruncSeq& f, const TruncSeq& g, std::int64_t lo, std::int64_t hi) {
    if (f.is_zero() || g.is_zero() || hi < lo) return {};
    check_product_size(f, g);
    lo = std::max(lo, f.lo() + g.lo());
    hi = std::min(hi, f.hi() + g.hi());
    if (hi < lo) return {};
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    const auto a = f.values(), b = g.values();
    for (std::int64_t n = lo; n <= hi; ++n) {
        const std::int64_t k_lo = std::max(f.lo(), n - g.hi());
        const std::int64_t k_hi = std::min(f.hi(), n - g.lo());
        cplx s{};
        for (std::int64_t k = k_lo; k <= k_hi; ++k)
            s += a[static_cast<std::size_t>(k - f.lo())] * b[static_cast<std::size_t>(n - k - g.lo())];
        out[static_cast<std::size_t>(n - lo)] = s;
    }
    return TruncSeq(lo, std::move(out));
}

double norm_p_w(const TruncSeq& f, double p, const Weight& w) {
    if (!(p >= 1.0)) throw ParameterError("norm needs p >= 1");
    if (f.is_zero()) return 0.0;
    // |f_n| w(n) through logs, so weights beyond double range still work when
    // the coefficient is small enough.
    std::vector<double> logs;
    logs.reserve(f.size());
    double top = -std::numeric_limits<double>::infinity();
    for (std::int64_t n = f.lo(); n <= f.hi(); ++n) {
        const double a = std::abs(f[n]);
        if (a == 0.0) {
            logs.push_back(-std::numeric_limits<double>::infinity());
            continue;
        }
        const double l = std::log(a) + w.log_value(n);
        logs.push_back(l);
        top = std::max(top, l);
    }
    if (std::isinf(p)) return std::exp(top);
    double s = 0.0;
    for (double l : logs) s += std::exp(p * (l - top));
    const double out = std::exp(top + std::log(s) / p);
    if (!std::isfinite(out)) throw RangeError("weighted norm overflows");
    return out;
}

TruncSeq translate(const TruncSeq& f, std::int64_t x) {
    if (f.is_zero()) return {};
    return TruncSeq(checked_add(f.lo(), x), std::vector<cplx>(f.values().begin(), f.values().end()));
}

TruncSeq formal_derivative(const TruncSeq& f) {
    if (f.is_zero()) return {};
    std::vector<cplx> out(f.size());
    for (std::int64_t m = f.lo(); m <= f.hi(); ++m)
        out[static_cast<std::size_t>(m - f.lo())] = static_cast<double>(m) * f[m];
    return TruncSeq(checked_add(f.lo(), -1), std::move(out));
}

TruncSeq antiderivative(const TruncSeq& g) {
    if (g.is_zero()) return {};
    std::vector<cplx> out(g.size());
    for (std::int64_t n = g.lo(); n <= g.hi(); ++n)
        out[static_cast<std::size_t>(n - g.lo())] = n == 0 ? cplx{} : g[n] / static_cast<double>(n);
    return TruncSeq(g.lo(), std::move(out));
}

TruncSeq reflect_conj(const TruncSeq& f) {
    if (f.is_zero()) return {};
    std::vector<cplx> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[k] = std::conj(f.values()[f.size() - 1 - k]);
    return TruncSeq(-f.hi(), std::move(out));
}

TruncSeq restrict_to(const TruncSeq& f, std::int64_t lo, std::int64_t hi) {
    if (f.is_zero()) return {};
    lo = std::max(lo, f.lo());
    hi = std::min(hi, f.hi());
    if (hi < lo) return {};
    const auto first = f.values().begin() + (lo - f.lo());
    return TruncSeq(lo, std::vector<cplx>(first, first + (hi - lo + 1)));
}

TruncSeq trim(const TruncSeq& f, double eps) {
    if (f.is_zero()) return {};
    std::int64_t lo = f.lo(), hi = f.hi();
    while (lo <= hi && std::abs(f[lo]) <= eps) ++lo;
    while (hi >= lo && std::abs(f[hi]) <= eps) --hi;
    return restrict_to(f, lo, hi);
}

namespace {
template <class Acc>
void for_union(const TruncSeq& f, const TruncSeq& g, Acc acc) {
    if (f.is_zero() && g.is_zero()) return;
    const std::int64_t lo = f.is_zero() ? g.lo() : g.is_zero() ? f.lo() : std::min(f.lo(), g.lo());
    const std::int64_t hi = f.is_zero() ? g.hi() : g.is_zero() ? f.hi() : std::max(f.hi(), g.hi());
    for (std::int64_t n = lo; n <= hi; ++n) acc(std::abs(f[n] - g[n]));
}
} // namespace

double l1_distance(const TruncSeq& f, const TruncSeq& g) {
    double s = 0.0;
    for_union(f, g, [&](double d) { s += d; });
    return s;
}

double max_abs_distance(const TruncSeq& f, const TruncSeq& g) {
    double s = 0.0;
    for_union(f, g, [&](double d) { s = std::max(s, d); });
    return s;
}

std::vector<cplx> gelfand_sample(const TruncSeq& f, std::size_t M) {
    if (M == 0) throw ParameterError("sample count must be positive");
    std::vector<cplx> wrapped(M);
    const auto m = static_cast<std::int64_t>(M);
    for (std::int64_t n = f.lo(); !f.is_zero() && n <= f.hi(); ++n)
        wrapped[static_cast<std::size_t>(((n % m) + m) % m)] += f[n];
    return dft::backward(wrapped);
}

cplx gelfand_eval(const TruncSeq& f, cplx z) {
    if (f.is_zero()) return {};
    cplx s{};
    const auto v = f.values();
    for (std::size_t k = v.size(); k-- > 0;) s = s * z + v[k];
    return s * std::pow(z, static_cast<int>(f.lo()));
}

} // namespace wlp
