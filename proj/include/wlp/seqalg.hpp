#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "wlp/weights.hpp"

namespace wlp {

using cplx = std::complex<double>;

/// Finitely supported two-sided sequence f = (f_n), n in Z.
///
/// Entry k of `values()` holds f_{lo + k}. Construction trims leading and
/// trailing exact zeros; the zero sequence has empty support.
class TruncSeq {
public:
    TruncSeq() = default;
    TruncSeq(std::int64_t lo, std::vector<cplx> values);

    static TruncSeq zero() { return {}; }

    bool is_zero() const noexcept { return values_.empty(); }
    std::size_t size() const noexcept { return values_.size(); }
    /// Support window; meaningless for the zero sequence.
    std::int64_t lo() const noexcept { return lo_; }
    std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(values_.size()) - 1; }
    std::span<const cplx> values() const noexcept { return values_; }

    /// f_n, zero outside the support.
    cplx operator[](std::int64_t n) const noexcept;

    double l1_norm() const noexcept;
    double linf_norm() const noexcept;

    TruncSeq operator+(const TruncSeq& other) const;
    TruncSeq operator-(const TruncSeq& other) const;
    TruncSeq operator*(cplx scalar) const;

    friend bool operator==(const TruncSeq&, const TruncSeq&) = default;

private:
    std::int64_t lo_ = 0;
    std::vector<cplx> values_;
};

/// Coefficient 1 at index n.
TruncSeq delta(std::int64_t n);

/// Exact convolution. Uses the direct sum for small inputs and the
/// DFT route otherwise; both agree within 1e-9 on unit-disk coefficients.
TruncSeq convolve(const TruncSeq& f, const TruncSeq& g);
TruncSeq convolve_direct(const TruncSeq& f, const TruncSeq& g);
/// DFT-based convolution, zero-padded to a power of two >= output length.
TruncSeq convolve_fft(const TruncSeq& f, const TruncSeq& g);
/// Entries n in [lo, hi] of f*g, by the direct sum.
TruncSeq convolve_window(const TruncSeq& f, const TruncSeq& g, std::int64_t lo, std::int64_t hi);

/// (sum_n |f_n|^p w(n)^p)^{1/p}; p >= 1.
double norm_p_w(const TruncSeq& f, double p, const Weight& w);

/// (l_x f)_n = f_{n-x}.
TruncSeq translate(const TruncSeq& f, std::int64_t x);

/// (f')_n = (n+1) f_{n+1}.
TruncSeq formal_derivative(const TruncSeq& f);

/// f_0 = 0, f_n = g_n / n; g_0 is discarded.
TruncSeq antiderivative(const TruncSeq& g);

/// n -> -n with complex conjugation: the coefficients of conj(f^) on T.
TruncSeq reflect_conj(const TruncSeq& f);

/// Restriction to [lo, hi].
TruncSeq restrict_to(const TruncSeq& f, std::int64_t lo, std::int64_t hi);

/// Drops leading and trailing entries with |f_n| <= eps.
TruncSeq trim(const TruncSeq& f, double eps);

/// l1 norm of f - g.
double l1_distance(const TruncSeq& f, const TruncSeq& g);
double max_abs_distance(const TruncSeq& f, const TruncSeq& g);

/// f^(z_j) at z_j = exp(2 pi i j / M), j = 0..M-1.
std::vector<cplx> gelfand_sample(const TruncSeq& f, std::size_t M);

/// f^(z) at a single point z != 0 (Horner, with z^lo scaling).
cplx gelfand_eval(const TruncSeq& f, cplx z);

} // namespace wlp
