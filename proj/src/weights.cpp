#include "wlp/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "wlp/error.hpp"

namespace wlp {

namespace {

constexpr double kRelTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::int64_t iabs(std::int64_t n) { return n < 0 ? -n : n; }

bool is_integer(double x) { return std::floor(x) == x; }

// Exact value of an integer-parameter weight, or -1 if it does not fit.
__int128 exact_value(const Weight& w, std::int64_t n) {
    constexpr __int128 kCap = __int128{1} << 62;
    const auto m = static_cast<__int128>(iabs(n));
    switch (w.family()) {
    case WeightFamily::Constant:
        return 1;
    case WeightFamily::Polynomial: {
        if (m <= 1) return 1;
        __int128 v = 1;
        for (int i = 0; i < static_cast<int>(w.parameter()); ++i) {
            v *= m;
            if (v > kCap) return -1;
        }
        return v;
    }
    case WeightFamily::ExpPoly: {
        __int128 v = 1 + m * m;
        const auto a = static_cast<__int128>(w.parameter());
        for (__int128 i = 0; i < m; ++i) {
            v *= a;
            if (v > kCap) return -1;
        }
        return v;
    }
    default:
        return -1;
    }
}

bool has_exact_path(const Weight& w) {
    switch (w.family()) {
    case WeightFamily::Constant:
        return true;
    case WeightFamily::Polynomial:
    case WeightFamily::ExpPoly:
        return is_integer(w.parameter()) && w.parameter() <= 64;
    default:
        return false;
    }
}

} // namespace

std::string to_string(WeightFamily family) {
    switch (family) {
    case WeightFamily::Constant: return "constant";
    case WeightFamily::Polynomial: return "polynomial";
    case WeightFamily::SubExp: return "subexp";
    case WeightFamily::ExpPoly: return "exppoly";
    case WeightFamily::Tabulated: return "tabulated";
    }
    return "unknown";
}

WeightFamily weight_family_from_string(const std::string& name) {
    for (auto f : {WeightFamily::Constant, WeightFamily::Polynomial, WeightFamily::SubExp,
                   WeightFamily::ExpPoly, WeightFamily::Tabulated})
        if (to_string(f) == name) return f;
    throw ParameterError("unknown weight family '" + name + "'");
}

Weight::Weight(WeightFamily family, double param, GroupPtr group)
    : family_(family), param_(param), group_(std::move(group)) {}

Weight Weight::constant(GroupPtr group) { return Weight(WeightFamily::Constant, 0.0, std::move(group)); }

Weight Weight::polynomial(double a) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw ParameterError("polynomial weight needs a >= 0");
    return Weight(WeightFamily::Polynomial, a, nullptr);
}

Weight Weight::subexp(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("subexponential weight needs 0 < gamma < 1");
    return Weight(WeightFamily::SubExp, gamma, nullptr);
}

Weight Weight::exppoly(double a) {
    if (!(a > 1.0) || !std::isfinite(a)) throw ParameterError("exponential-polynomial weight needs a > 1");
    return Weight(WeightFamily::ExpPoly, a, nullptr);
}

Weight Weight::tabulated(GroupPtr group, std::vector<double> values) {
    if (!group) throw ParameterError("tabulated group weight needs a group");
    if (values.size() != group->order()) throw ParameterError("tabulated weight needs one value per element");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError("weight values must be positive and finite");
    if (std::abs(values[group->identity()] - 1.0) > kRelTol)
        throw ParameterError("weight must equal 1 at the identity");
    Weight w(WeightFamily::Tabulated, 0.0, std::move(group));
    w.table_ = std::move(values);
    return w;
}

Weight Weight::tabulated(std::int64_t lo, std::vector<double> values) {
    const auto hi = lo + static_cast<std::int64_t>(values.size()) - 1;
    if (values.empty() || lo > 0 || hi < 0) throw ParameterError("tabulated weight window must contain 0");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError("weight values must be positive and finite");
    if (std::abs(values[static_cast<std::size_t>(-lo)] - 1.0) > kRelTol)
        throw ParameterError("weight must equal 1 at the identity");
    Weight w(WeightFamily::Tabulated, 0.0, nullptr);
    w.table_ = std::move(values);
    w.table_lo_ = lo;
    return w;
}

double Weight::operator()(std::int64_t n) const {
    if (group_) throw DomainError("weight is defined on a finite group, not on Z");
    const double m = static_cast<double>(iabs(n));
    switch (family_) {
    case WeightFamily::Constant:
        return 1.0;
    case WeightFamily::Polynomial:
        return m <= 1.0 ? 1.0 : std::pow(m, param_);
    case WeightFamily::SubExp:
        return std::exp(std::pow(m, param_));
    case WeightFamily::ExpPoly:
        return std::pow(param_, m) * (1.0 + m * m);
    case WeightFamily::Tabulated: {
        const auto k = n - table_lo_;
        if (k < 0 || k >= static_cast<std::int64_t>(table_.size()))
            throw DomainError("index " + std::to_string(n) + " outside tabulated weight window");
        return table_[static_cast<std::size_t>(k)];
    }
    }
    return 1.0;
}

double Weight::at(Element x) const {
    if (!group_) throw DomainError("weight is defined on Z, not on a finite group");
    if (x >= group_->order()) throw DomainError("element outside the group");
    return family_ == WeightFamily::Constant ? 1.0 : table_[x];
}

double Weight::log_value(std::int64_t n) const {
    const double m = static_cast<double>(iabs(n));
    switch (family_) {
    case WeightFamily::Polynomial:
        if (group_) break;
        return m <= 1.0 ? 0.0 : param_ * std::log(m);
    case WeightFamily::SubExp:
        return std::pow(m, param_);
    case WeightFamily::ExpPoly:
        return m * std::log(param_) + std::log1p(m * m);
    default:
        break;
    }
    return std::log((*this)(n));
}

bool Weight::is_radial() const noexcept { return !group_ && family_ != WeightFamily::Tabulated; }

double eval(const Weight& w, std::int64_t n) { return w(n); }

SubmultiplicativityReport check_submultiplicative(const Weight& w, std::int64_t window) {
    if (window < 0) throw ParameterError("window must be nonnegative");
    if (!w.on_integers()) throw DomainError("use the group overload for group weights");

    SubmultiplicativityReport rep;
    rep.max_excess = -kInf;
    bool all_exact = has_exact_path(w);
    bool within_tol = true;
    double max_log_ratio = -kInf;

    auto in_domain = [&](std::int64_t n) {
        if (w.family() != WeightFamily::Tabulated) return true;
        const auto k = n - w.table_lo();
        return k >= 0 && k < static_cast<std::int64_t>(w.table().size());
    };

    for (std::int64_t m = -window; m <= window; ++m) {
        if (!in_domain(m)) continue;
        for (std::int64_t n = -window; n <= window; ++n) {
            if (!in_domain(n) || !in_domain(m + n)) continue;
            double excess = 0.0;
            bool ok = true;
            const __int128 em = all_exact ? exact_value(w, m) : -1;
            const __int128 en = all_exact ? exact_value(w, n) : -1;
            const __int128 es = all_exact ? exact_value(w, m + n) : -1;
            if (em > 0 && en > 0 && es > 0) {
                const __int128 diff = es - em * en;
                excess = static_cast<double>(diff);
                ok = diff <= 0;
            } else {
                all_exact = false;
                const double wm = w(m), wn = w(n), ws = w(m + n);
                if (std::isfinite(wm) && std::isfinite(wn) && std::isfinite(ws) && std::isfinite(wm * wn)) {
                    excess = ws - wm * wn;
                    ok = excess <= kRelTol * wm * wn;
                } else {
                    const double log_gap = w.log_value(m + n) - w.log_value(m) - w.log_value(n);
                    excess = log_gap > 0 ? kInf : 0.0;
                    ok = log_gap <= std::log1p(kRelTol);
                }
            }
            within_tol = within_tol && ok;
            max_log_ratio = std::max(max_log_ratio, w.log_value(m + n) - w.log_value(m) - w.log_value(n));
            if (excess > rep.max_excess) {
                rep.max_excess = excess;
                rep.x = m;
                rep.y = n;
            }
        }
    }
    rep.submultiplicative = within_tol;
    rep.exact = all_exact;
    rep.max_ratio = std::exp(max_log_ratio);
    return rep;
}

SubmultiplicativityReport check_submultiplicative(const Weight& w) {
    if (w.on_integers()) throw DomainError("group overload needs a group weight");
    const FiniteGroup& G = *w.group();
    SubmultiplicativityReport rep;
    rep.max_excess = -kInf;
    rep.exact = w.family() == WeightFamily::Constant;
    bool ok = true;
    for (Element x = 0; x < G.order(); ++x) {
        for (Element y = 0; y < G.order(); ++y) {
            const double prod = w.at(x) * w.at(y);
            const double excess = w.at(G.mul(x, y)) - prod;
            ok = ok && excess <= kRelTol * prod;
            rep.max_ratio = std::max(rep.max_ratio, w.at(G.mul(x, y)) / prod);
            if (excess > rep.max_excess) {
                rep.max_excess = excess;
                rep.x = static_cast<std::int64_t>(x);
                rep.y = static_cast<std::int64_t>(y);
            }
        }
    }
    rep.submultiplicative = ok;
    return rep;
}

double AlgebraConstant::norm_bound() const { return std::pow(constant, 1.0 / q); }

AlgebraConstant algebra_constant(const Weight& w, double p, std::int64_t window) {
    if (!(p > 1.0)) throw ParameterError("algebra constant needs p > 1");
    if (window < 0) throw ParameterError("window must be nonnegative");
    if (!w.on_integers()) throw DomainError("use the group overload for group weights");

    AlgebraConstant out;
    out.q = std::isinf(p) ? 1.0 : p / (p - 1.0);
    const std::size_t len = static_cast<std::size_t>(2 * window + 1);
    std::vector<double> u(len);
    for (std::int64_t n = -window; n <= window; ++n)
        u[static_cast<std::size_t>(n + window)] = std::exp(-out.q * w.log_value(n));

    out.constant = -kInf;
    for (std::int64_t n = -window; n <= window; ++n) {
        double s = 0.0;
        const auto k_lo = std::max(-window, n - window), k_hi = std::min(window, n + window);
        for (auto k = k_lo; k <= k_hi; ++k)
            s += u[static_cast<std::size_t>(k + window)] * u[static_cast<std::size_t>(n - k + window)];
        const double ratio = s / u[static_cast<std::size_t>(n + window)];
        if (ratio > out.constant) {
            out.constant = ratio;
            out.argmax = n;
        }
    }

    out.certified_window = window / 2;
    if (!w.is_radial() || w.family() == WeightFamily::Constant) {
        out.tail_bound = kInf;
    } else {
        try {
            out.tail_bound = 2.0 * inverse_power_series(w, out.q, out.certified_window + 1).upper();
        } catch (const ParameterError&) {
            out.tail_bound = kInf;
        }
    }
    return out;
}

AlgebraConstant algebra_constant(const Weight& w, double p) {
    if (!(p > 1.0)) throw ParameterError("algebra constant needs p > 1");
    if (w.on_integers()) throw DomainError("group overload needs a group weight");
    const FiniteGroup& G = *w.group();
    AlgebraConstant out;
    out.q = std::isinf(p) ? 1.0 : p / (p - 1.0);
    std::vector<double> u(G.order());
    for (Element x = 0; x < G.order(); ++x) u[x] = std::pow(w.at(x), -out.q);
    out.constant = -kInf;
    for (Element x = 0; x < G.order(); ++x) {
        double s = 0.0;
        for (Element y = 0; y < G.order(); ++y) s += u[y] * u[G.mul(G.inv(y), x)];
        const double ratio = s / u[x];
        if (ratio > out.constant) {
            out.constant = ratio;
            out.argmax = static_cast<std::int64_t>(x);
        }
    }
    out.tail_bound = 0.0;
    out.certified_window = static_cast<std::int64_t>(G.order());
    return out;
}

SeriesValue inverse_power_series(const Weight& w, double s, std::int64_t from) {
    if (!w.on_integers()) throw DomainError("series needs a weight on Z");
    if (!(s > 0.0)) throw ParameterError("series exponent must be positive");
    if (from < 0) from = 0;

    SeriesValue out;
    const double zero_term = from == 0 ? 1.0 : 0.0;  // w(0) = 1
    const std::int64_t start = std::max<std::int64_t>(from, 1);

    switch (w.family()) {
    case WeightFamily::Constant:
    case WeightFamily::Tabulated:
        throw ParameterError("series of w^{-s} diverges or is undefined for a " + to_string(w.family()) + " weight");
    case WeightFamily::Polynomial: {
        const double t = w.parameter() * s;
        if (!(t > 1.0)) throw ParameterError("series of w^{-s} diverges (a*s <= 1)");
        constexpr std::int64_t kTerms = 200000;
        const std::int64_t last = start + kTerms;
        double partial = 0.0;
        for (std::int64_t n = last; n >= start; --n)
            partial += n == 1 ? 1.0 : std::pow(static_cast<double>(n), -t);
        // tail over n > last, both sides
        const double L = static_cast<double>(last);
        const double lo = std::pow(L + 1.0, 1.0 - t) / (t - 1.0);
        const double hi = std::pow(L, 1.0 - t) / (t - 1.0);
        const double mid = std::pow(L + 0.5, 1.0 - t) / (t - 1.0);
        out.value = zero_term + 2.0 * (partial + mid);
        out.error_bound = 2.0 * (hi - lo);
        return out;
    }
    case WeightFamily::SubExp: {
        const double g = w.parameter();
        double partial = 0.0;
        std::int64_t n = start;
        for (; n < start + 10000000; ++n) {
            const double term = std::exp(-s * std::pow(static_cast<double>(n), g));
            partial += term;
            if (term < 1e-20 * partial || term == 0.0) break;
        }
        // sum_{m > n} e^{-s m^g} <= int_n^inf e^{-s t^g} dt
        const double x = s * std::pow(static_cast<double>(n), g);
        const double tail = boost::math::tgamma(1.0 / g, x) / (g * std::pow(s, 1.0 / g));
        out.value = zero_term + 2.0 * partial;
        out.error_bound = 2.0 * tail;
        return out;
    }
    case WeightFamily::ExpPoly: {
        const double ratio = std::pow(w.parameter(), -s);
        double partial = 0.0, term = 0.0;
        for (std::int64_t n = start;; ++n) {
            term = std::exp(-s * w.log_value(n));
            partial += term;
            if (term < 1e-20 * partial || term == 0.0) break;
        }
        out.value = zero_term + 2.0 * partial;
        out.error_bound = 2.0 * term * ratio / (1.0 - ratio);
        return out;
    }
    }
    return out;
}

std::pair<double, double> standard_iso_ratio_bounds(const IntCharacter& gamma, const IntMap& phi,
                                                    const Weight& w1, const Weight& w2,
                                                    std::int64_t window) {
    if (window < 0) throw ParameterError("window must be nonnegative");
    double lo = kInf, hi = -kInf;
    for (std::int64_t n = -window; n <= window; ++n) {
        const double g = std::abs(gamma(n));
        if (g == 0.0) throw InvalidCharacterError("character vanishes at " + std::to_string(n));
        const double ratio = g * w2(phi(n)) / w1(n);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

std::pair<double, double> standard_iso_ratio_bounds(std::span<const std::complex<double>> gamma,
                                                    std::span<const Element> phi,
                                                    const Weight& w1, const Weight& w2) {
    if (w1.on_integers() || w2.on_integers()) throw DomainError("group overload needs group weights");
    const std::size_t n = w1.group()->order();
    if (gamma.size() != n || phi.size() != n) throw SizeError("gamma and phi must cover the domain group");
    double lo = kInf, hi = -kInf;
    for (Element x = 0; x < n; ++x) {
        const double g = std::abs(gamma[x]);
        if (g == 0.0) throw InvalidCharacterError("character vanishes at element " + std::to_string(x));
        const double ratio = g * w2.at(phi[x]) / w1.at(x);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

} // namespace wlp
