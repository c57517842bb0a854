#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "wlp/seqalg.hpp"

namespace wlp {

enum class MapKind { Monomial, Blaschke };

/// A self-map of the unit circle: either a monomial z -> lambda z^m with
/// |lambda| = 1, or an elementary Blaschke factor b_r(z) = (z - r)/(1 - r z)
/// with real |r| < 1.
class CircleMap {
public:
    static CircleMap monomial(cplx lambda, std::int64_t m);
    static CircleMap blaschke(double r);
    static CircleMap identity() { return monomial(1.0, 1); }

    MapKind kind() const noexcept { return kind_; }
    cplx lambda() const noexcept { return lambda_; }
    std::int64_t degree() const noexcept { return m_; }
    double r() const noexcept { return r_; }

    /// Closed-form value; no domain check.
    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;

    /// Compositional inverse. Defined for Blaschke factors (b_{-r}) and
    /// monomials of degree +-1.
    CircleMap inverse() const;

    /// (1 + |r|) / (1 - |r|) for Blaschke factors, 1 for monomials.
    double stretch() const noexcept;

    std::string describe() const;

private:
    MapKind kind_ = MapKind::Monomial;
    cplx lambda_{1.0, 0.0};
    std::int64_t m_ = 1;
    double r_ = 0.0;
};

/// phi(z) for |z| = 1 (within 1e-8); DomainError otherwise.
cplx eval_map(const CircleMap& phi, cplx z);

/// Fourier coefficients of phi on T, truncated so the discarded l1 tail is
/// below tol.
TruncSeq coeffs(const CircleMap& phi, double tol);
/// Coefficients of phi restricted to [lo, hi] (closed form, no truncation
/// error inside the window).
TruncSeq coeffs_window(const CircleMap& phi, std::int64_t lo, std::int64_t hi);

/// Coefficients of the function z -> phi'(z) on T, l1 tail below tol.
TruncSeq derivative_coeffs(const CircleMap& phi, double tol);

/// Largest window the power-series routines will allocate.
inline constexpr std::int64_t kMaxPowerWindow = std::int64_t{1} << 16;

/// Coefficients of phi^n on T with discarded l1 tail below tol. Negative
/// powers use 1/phi = conj(phi) on T.
TruncSeq power_coeffs(const CircleMap& phi, std::int64_t n, double tol);
/// Entries of phi^n in [lo, hi], exact up to rounding: computed as a
/// truncated power series product, so no tail enters the window.
TruncSeq power_coeffs_window(const CircleMap& phi, std::int64_t n, std::int64_t lo, std::int64_t hi);

struct ComposeOptions {
    double cauchy_tol = 1e-8;           ///< l1 change between M and 2M
    std::size_t max_size = std::size_t{1} << 20;
};

/// Coefficients of f^ o phi. Monomials are handled by the exact index map;
/// Blaschke factors by circle sampling at M points with adaptive doubling.
/// M must be a power of two with M >= 4 * f.size().
TruncSeq compose_transform(const TruncSeq& f, const CircleMap& phi, std::size_t M,
                           const ComposeOptions& options = {});
/// compose_transform with the smallest admissible M.
TruncSeq compose_transform(const TruncSeq& f, const CircleMap& phi, const ComposeOptions& options = {});

/// Coefficients of 1/phi' on T, l1 tail below tol. SingularityError when
/// |phi'| < 1e-6 at a sample point.
TruncSeq reciprocal_derivative_coeffs(const CircleMap& phi, double tol);

} // namespace wlp
