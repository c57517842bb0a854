#include "wlp/circlemaps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "power_series.hpp"
#include "wlp/dft.hpp"
#include "wlp/error.hpp"

namespace wlp {

using detail::blaschke_power_series;
using detail::geometric_tail;

namespace {

TruncSeq from_real(std::int64_t lo, const std::vector<double>& v) {
    std::vector<cplx> c(v.begin(), v.end());
    return TruncSeq(lo, std::move(c));
}

} // namespace

CircleMap CircleMap::monomial(cplx lambda, std::int64_t m) {
    if (!(std::abs(std::abs(lambda) - 1.0) <= 1e-12)) throw ParameterError("monomial coefficient must be unimodular");
    CircleMap phi;
    phi.kind_ = MapKind::Monomial;
    phi.lambda_ = lambda;
    phi.m_ = m;
    return phi;
}

CircleMap CircleMap::blaschke(double r) {
    if (!(std::abs(r) < 1.0)) throw ParameterError("Blaschke parameter must satisfy |r| < 1");
    CircleMap phi;
    phi.kind_ = MapKind::Blaschke;
    phi.r_ = r;
    phi.m_ = 1;
    return phi;
}

cplx CircleMap::operator()(cplx z) const {
    if (kind_ == MapKind::Blaschke) return (z - r_) / (1.0 - r_ * z);
    return lambda_ * std::pow(z, static_cast<int>(m_));
}

cplx CircleMap::derivative(cplx z) const {
    if (kind_ == MapKind::Blaschke) {
        const cplx d = 1.0 - r_ * z;
        return (1.0 - r_ * r_) / (d * d);
    }
    if (m_ == 0) return {};
    return lambda_ * static_cast<double>(m_) * std::pow(z, static_cast<int>(m_ - 1));
}

CircleMap CircleMap::inverse() const {
    if (kind_ == MapKind::Blaschke) return blaschke(-r_);
    if (m_ == 1) return monomial(std::conj(lambda_), 1);
    if (m_ == -1) return *this;
    throw ParameterError("monomial of degree " + std::to_string(m_) + " has no compositional inverse");
}

double CircleMap::stretch() const noexcept {
    if (kind_ == MapKind::Monomial) return 1.0;
    return (1.0 + std::abs(r_)) / (1.0 - std::abs(r_));
}

std::string CircleMap::describe() const {
    std::ostringstream os;
    os.precision(17);
    if (kind_ == MapKind::Blaschke)
        os << "blaschke(r=" << r_ << ")";
    else
        os << "monomial(lambda=" << lambda_.real() << (lambda_.imag() < 0 ? "" : "+") << lambda_.imag()
           << "i, m=" << m_ << ")";
    return os.str();
}

cplx eval_map(const CircleMap& phi, cplx z) {
    if (!(std::abs(std::abs(z) - 1.0) <= 1e-8)) throw DomainError("circle map evaluated off the unit circle");
    return phi(z);
}

TruncSeq coeffs_window(const CircleMap& phi, std::int64_t lo, std::int64_t hi) {
    if (phi.kind() == MapKind::Monomial) return restrict_to(TruncSeq(phi.degree(), {phi.lambda()}), lo, hi);
    if (hi < 0 || hi < lo) return {};
    lo = std::max<std::int64_t>(lo, 0);
    if (hi - lo > kMaxPowerWindow) throw SizeError("coefficient window exceeds the size cap");
    const double r = phi.r();
    std::vector<cplx> out;
    for (std::int64_t k = lo; k <= hi; ++k)
        out.emplace_back(k == 0 ? -r : (1.0 - r * r) * std::pow(r, static_cast<double>(k - 1)));
    return TruncSeq(lo, std::move(out));
}

TruncSeq coeffs(const CircleMap& phi, double tol) {
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
    if (phi.kind() == MapKind::Monomial) return TruncSeq(phi.degree(), {phi.lambda()});
    const double a = std::abs(phi.r());
    if (a == 0.0) return delta(1);
    // tail after index K: (1 - r^2) sum_{k > K} |r|^{k-1} = (1 + |r|) |r|^K
    std::int64_t K = 1;
    while ((1.0 + a) * std::pow(a, static_cast<double>(K)) >= tol) {
        if (++K > kMaxPowerWindow) throw SizeError("tolerance too small for the coefficient window");
    }
    return coeffs_window(phi, 0, K);
}

TruncSeq derivative_coeffs(const CircleMap& phi, double tol) {
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
    if (phi.kind() == MapKind::Monomial) {
        if (phi.degree() == 0) return {};
        return TruncSeq(phi.degree() - 1, {phi.lambda() * static_cast<double>(phi.degree())});
    }
    const double a = std::abs(phi.r());
    if (a == 0.0) return delta(0);
    // sum_{k > K} k |c_k| with |c_k| = (1 - r^2) a^{k-1}
    auto tail = [&](std::int64_t K) {
        const double pk = std::pow(a, static_cast<double>(K));
        return (1.0 - a * a) * ((static_cast<double>(K) + 1.0) * pk / (1.0 - a) + a * pk / ((1.0 - a) * (1.0 - a)));
    };
    std::int64_t K = 1;
    while (tail(K) >= tol) {
        if (++K > kMaxPowerWindow) throw SizeError("tolerance too small for the coefficient window");
    }
    return formal_derivative(coeffs_window(phi, 0, K));
}

TruncSeq power_coeffs_window(const CircleMap& phi, std::int64_t n, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) return {};
    if (n == 0) return restrict_to(delta(0), lo, hi);
    if (phi.kind() == MapKind::Monomial) {
        const std::int64_t idx = phi.degree() * n;
        return restrict_to(TruncSeq(idx, {std::pow(phi.lambda(), static_cast<double>(n))}), lo, hi);
    }
    if (phi.r() == 0.0) return restrict_to(delta(n), lo, hi);
    if (n < 0) return reflect_conj(power_coeffs_window(phi, -n, -hi, -lo));
    if (hi < 0) return {};
    lo = std::max<std::int64_t>(lo, 0);
    if (hi > kMaxPowerWindow) throw SizeError("power window exceeds the size cap");
    const auto series = blaschke_power_series(phi.r(), n, hi);
    return restrict_to(from_real(0, series), lo, hi);
}

TruncSeq power_coeffs(const CircleMap& phi, std::int64_t n, double tol) {
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
    if (n == 0) return delta(0);
    if (phi.kind() == MapKind::Monomial) {
        std::int64_t idx = 0;
        if (__builtin_mul_overflow(phi.degree(), n, &idx)) throw SizeError("power index overflows");
        return TruncSeq(idx, {std::pow(phi.lambda(), static_cast<double>(n))});
    }
    if (phi.r() == 0.0) return delta(n);
    if (n < 0) return reflect_conj(power_coeffs(phi, -n, tol));

    const double alpha = phi.stretch();
    const auto turning = static_cast<std::int64_t>(std::ceil(alpha * static_cast<double>(n))) + 8;
    std::int64_t K = turning + 64;
    for (;;) {
        if (K > kMaxPowerWindow) throw SizeError("power_coeffs window exceeds the size cap; tolerance too small");
        const auto c = blaschke_power_series(phi.r(), n, K);
        const double tail = geometric_tail(c, turning);
        if (tail >= 0.0 && tail < tol) {
            // drop trailing entries while the discarded mass stays below tol
            double dropped = tail;
            std::int64_t last = K;
            while (last > 0 && dropped + std::abs(c[static_cast<std::size_t>(last)]) < tol) {
                dropped += std::abs(c[static_cast<std::size_t>(last)]);
                --last;
            }
            return restrict_to(from_real(0, c), 0, last);
        }
        K *= 2;
    }
}

namespace {

TruncSeq sample_composition(const TruncSeq& f, const CircleMap& phi, std::size_t M) {
    std::vector<cplx> F(M);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(M);
    for (std::size_t j = 0; j < M; ++j) {
        const cplx z = std::polar(1.0, step * static_cast<double>(j));
        F[j] = gelfand_eval(f, phi(z));
    }
    const auto c = dft::forward(F);
    const auto half = static_cast<std::int64_t>(M / 2);
    const auto m = static_cast<std::int64_t>(M);
    std::vector<cplx> out(M);
    const double scale = 1.0 / static_cast<double>(M);
    for (std::int64_t k = -half; k < half; ++k)
        out[static_cast<std::size_t>(k + half)] = c[static_cast<std::size_t>((k + m) % m)] * scale;
    TruncSeq s(-half, std::move(out));
    return trim(s, 1e-15 * s.linf_norm());
}

TruncSeq compose_monomial(const TruncSeq& f, const CircleMap& phi) {
    if (f.is_zero()) return {};
    const std::int64_t m = phi.degree();
    if (m == 0) {
        cplx s{};
        for (std::int64_t n = f.lo(); n <= f.hi(); ++n) s += f[n] * std::pow(phi.lambda(), static_cast<double>(n));
        return TruncSeq(0, {s});
    }
    std::int64_t a = 0, b = 0;
    if (__builtin_mul_overflow(m, f.lo(), &a) || __builtin_mul_overflow(m, f.hi(), &b))
        throw SizeError("composition index range overflows");
    const std::int64_t lo = std::min(a, b), hi = std::max(a, b);
    if (hi - lo > (std::int64_t{1} << 28)) throw SizeError("composition exceeds the size cap");
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = f.lo(); n <= f.hi(); ++n)
        out[static_cast<std::size_t>(m * n - lo)] += f[n] * std::pow(phi.lambda(), static_cast<double>(n));
    return TruncSeq(lo, std::move(out));
}

} // namespace

TruncSeq compose_transform(const TruncSeq& f, const CircleMap& phi, std::size_t M, const ComposeOptions& options) {
    if (phi.kind() == MapKind::Monomial) return compose_monomial(f, phi);
    if (!dft::is_pow2(M) || M < 4 * std::max<std::size_t>(1, f.size()))
        throw ParameterError("sampling size must be a power of two >= 4 * support length");
    if (f.is_zero()) return {};
    if (phi.r() == 0.0) return f;

    TruncSeq prev = sample_composition(f, phi, M);
    double change = 0.0;
    while (2 * M <= options.max_size) {
        M *= 2;
        TruncSeq cur = sample_composition(f, phi, M);
        change = l1_distance(prev, cur);
        if (change < options.cauchy_tol) return cur;
        prev = std::move(cur);
    }
    std::ostringstream os;
    os << "compose_transform did not converge: l1 change " << change << " at M=" << M << " for "
       << phi.describe() << ", support [" << f.lo() << ", " << f.hi() << "]";
    throw AccuracyError(os.str());
}

TruncSeq compose_transform(const TruncSeq& f, const CircleMap& phi, const ComposeOptions& options) {
    const std::size_t M = std::max<std::size_t>(64, dft::next_pow2(4 * std::max<std::size_t>(1, f.size())));
    return compose_transform(f, phi, M, options);
}

TruncSeq reciprocal_derivative_coeffs(const CircleMap& phi, double tol) {
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
    if (phi.kind() == MapKind::Monomial) {
        if (phi.degree() == 0) throw SingularityError("constant map has vanishing derivative");
        // 1/phi'(z) = z^{1-m} / (lambda m)
        return TruncSeq(1 - phi.degree(), {1.0 / (phi.lambda() * static_cast<double>(phi.degree()))});
    }
    if (phi.r() == 0.0) return delta(0);

    auto sample = [&](std::size_t M) {
        std::vector<cplx> F(M);
        const double step = 2.0 * std::numbers::pi / static_cast<double>(M);
        for (std::size_t j = 0; j < M; ++j) {
            const cplx d = phi.derivative(std::polar(1.0, step * static_cast<double>(j)));
            if (std::abs(d) < 1e-6) throw SingularityError("|phi'| < 1e-6 on the circle");
            F[j] = 1.0 / d;
        }
        const auto c = dft::forward(F);
        const auto half = static_cast<std::int64_t>(M / 2), m = static_cast<std::int64_t>(M);
        std::vector<cplx> out(M);
        for (std::int64_t k = -half; k < half; ++k)
            out[static_cast<std::size_t>(k + half)] = c[static_cast<std::size_t>((k + m) % m)] / static_cast<double>(M);
        TruncSeq s(-half, std::move(out));
        return trim(s, 1e-15 * s.linf_norm());
    };

    constexpr std::size_t kCap = std::size_t{1} << 20;
    std::size_t M = 64;
    TruncSeq prev = sample(M);
    while (2 * M <= kCap) {
        M *= 2;
        TruncSeq cur = sample(M);
        if (l1_distance(prev, cur) < tol) return cur;
        prev = std::move(cur);
    }
    throw AccuracyError("reciprocal derivative sampling did not converge");
}

} // namespace wlp
