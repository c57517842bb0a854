#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wlp/circlemaps.hpp"
#include "wlp/seqalg.hpp"
#include "wlp/weights.hpp"

namespace wlp {

/// Truncated matrix of a composition operator C_phi: f -> (f^ o phi)v.
/// Column n holds the coefficients of phi^n on rows m_lo..m_hi.
struct OperatorMatrix {
    std::int64_t n_lo = 0, n_hi = -1;
    std::int64_t m_lo = 0, m_hi = -1;
    Eigen::MatrixXcd entries;

    cplx operator()(std::int64_t m, std::int64_t n) const {
        return entries(static_cast<Eigen::Index>(m - m_lo), static_cast<Eigen::Index>(n - n_lo));
    }
    TruncSeq column(std::int64_t n) const;
    /// Number of entries of column n with modulus above eps.
    std::size_t column_support(std::int64_t n, double eps = 1e-12) const;
    /// Exactly one entry above eps in every column.
    bool is_phased_permutation(double eps = 1e-12) const;
};

/// Columns n_lo..n_hi filled from power_coeffs(phi, n, tol); the row range
/// is the union of the column supports.
OperatorMatrix build_matrix(const CircleMap& phi, std::int64_t n_lo, std::int64_t n_hi, double tol = 1e-10);

/// D_out * M * D_in^{-1} for the weight w.
Eigen::MatrixXcd weighted_matrix(const OperatorMatrix& M, const Weight& w);

struct ColumnNorm {
    double ratio = 0.0;        ///< ||C_phi delta_n||_{p,w} / w(n)
    double norm = 0.0;         ///< ||C_phi delta_n||_{p,w}, over the computed window
    std::int64_t lo = 0, hi = 0;
    double tail_estimate = 0.0;  ///< geometric bound on the weighted tail, relative to norm^p
};

struct ColumnOptions {
    double rel_tail = 1e-12;  ///< stop when the weighted tail is below this fraction
};

/// Weighted column norm with the window grown until the weighted tail is
/// negligible. The returned norm is a lower bound of the full column norm.
/// RangeError when a weight value needed exceeds 1e300.
ColumnNorm column_norm(const CircleMap& phi, const Weight& w, double p, std::int64_t n,
                       const ColumnOptions& options = {});
double column_ratio(const CircleMap& phi, const Weight& w, double p, std::int64_t n);

struct BlowupParams {
    int weight_case = 1;  ///< 1: exp(|n|^gamma), 2: a^|n| (1 + n^2)
    double gamma = 0.5;
    double a = 2.0;
    double r = 0.5;
    double p = 1.0;
    std::vector<std::int64_t> n_list;
};

struct BlowupRow {
    std::int64_t n = 0;
    double ratio = 0.0;
    double model_value = 0.0;
    std::int64_t k_n = 0;               ///< floor(alpha n), alpha = (1+r)/(1-r)
    double coeff_at_k_n = 0.0;          ///< |coefficient of b_r^n at k_n|
    double single_coeff_ratio = 0.0;    ///< w(k_n) |coeff| / w(n)
    double scaled_coeff = 0.0;          ///< |coeff| n^{1/3}
};

/// The weight of a blow-up case; AdmissibilityError when case 2 has r >= 1/a.
Weight blowup_weight(const BlowupParams& params);
std::vector<BlowupRow> blowup_experiment(const BlowupParams& params, unsigned jobs = 1);

enum class NormMethod {
    Dense,           ///< symmetric eigensolve of A^H A
    PowerIteration,  ///< block power iteration on A^H A
};

struct NormOptions {
    NormMethod method = NormMethod::Dense;
    double rel_tol = 1e-8;
    int max_iterations = 10000;
    std::uint64_t seed = 0;
};

struct NormEstimate {
    double norm = 0.0;
    int iterations = 0;
};

/// Largest singular value by block power iteration on A^H A. AccuracyError
/// when the top Ritz value has not settled after max_iterations.
NormEstimate largest_singular_value(const Eigen::MatrixXcd& A, const NormOptions& options = {});

/// Largest singular value by the method in options. The dense solve is the
/// default: the top of the spectrum of these truncations is clustered to a
/// few 1e-5, where power iteration settles early.
NormEstimate largest_singular_value_with(const Eigen::MatrixXcd& A, const NormOptions& options);

/// Norm of the truncation of C_phi between weighted l^2 spaces, input window
/// [-N, N], output window covering all columns at tolerance 1e-10.
double op_norm_l2(const CircleMap& phi, const Weight& w, std::int64_t N,
                  const NormOptions& options = {});

/// K(r) = (2|r|d + r^2 d^2 + ((1+|r|)/(1-|r|))^{2 Lambda})^{1/2} with
/// d^2 = sum_{n != 0} w(n)^{-2}. ParameterError if the d-series diverges.
double k_bound(double r, const Weight& w, double Lambda);

struct DistortionReport {
    double r = 0.0;
    std::int64_t N = 0;
    double norm_fwd = 0.0;
    double norm_inv = 0.0;
    double distortion = 0.0;
    double k_bound_fwd = 0.0;
    double k_bound_inv = 0.0;
    double lambda_param = 1.0;
    bool within_k_bound = false;
    /// Entries of column 1 above 1e-12; >= 2 means not of monomial form.
    std::size_t column1_support = 0;
};

/// w must be Polynomial(a) with integer a > 1; r_list in [0, 1).
std::vector<DistortionReport> distortion_experiment(const Weight& w, std::span<const double> r_list,
                                                   std::int64_t N, double Lambda, unsigned jobs = 1,
                                                   const NormOptions& options = {});

struct ChainRuleReport {
    double residual_l1 = 0.0;
    double lhs_l1 = 0.0;
    double tol = 0.0;  ///< truncation budget used for coeffs(phi')
};

/// l1 norm of (f^ o phi)' - (f^' o phi) phi', all at coefficient level.
ChainRuleReport chain_rule_check(const TruncSeq& f, const CircleMap& phi, double tol = 1e-14);

struct ExtensionReport {
    TruncSeq image;        ///< coefficients of (g^ o phi) / phi
    double image_norm = 0.0;
    double input_norm = 0.0;
    double ratio = 0.0;
};

/// Norms of (g^ o phi)/phi and g in l^p(Z, w_{a-1}); a >= 1.
ExtensionReport extension_step_check(const TruncSeq& g, const CircleMap& phi, int a, double p);

/// (Tf)_n = lambda^n f_n, or lambda^n f_{-n} when reflect is set.
TruncSeq standard_automorphism(const TruncSeq& f, cplx lambda, bool reflect);

} // namespace wlp
