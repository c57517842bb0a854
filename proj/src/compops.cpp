#include "wlp/compops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "power_series.hpp"
#include "wlp/error.hpp"
#include "wlp/parallel.hpp"

namespace wlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogWeightCap = std::log(1e300);
constexpr std::int64_t kMatrixEntryCap = std::int64_t{1} << 26;

// y = x * b_r as a truncated series of the same length:
// y (1 - r z) = x (z - r)  =>  y_k = r y_{k-1} + x_{k-1} - r x_k.
std::vector<double> times_blaschke(const std::vector<double>& x, double r) {
    std::vector<double> y(x.size());
    double prev_y = 0.0, prev_x = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        y[k] = r * prev_y + prev_x - r * x[k];
        prev_y = y[k];
        prev_x = x[k];
    }
    return y;
}

// Drops trailing entries while their total modulus stays below tol.
TruncSeq trim_tail(const std::vector<double>& c, double tol) {
    std::size_t last = c.size();
    double dropped = 0.0;
    while (last > 1 && dropped + std::abs(c[last - 1]) < tol) dropped += std::abs(c[--last]);
    return TruncSeq(0, std::vector<cplx>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(last)));
}

double log_weight_checked(const Weight& w, std::int64_t k) {
    const double lw = w.log_value(k);
    if (lw > kLogWeightCap) {
        std::ostringstream os;
        os << "weight exceeds 1e300 at index " << k;
        throw RangeError(os.str());
    }
    return lw;
}

} // namespace

TruncSeq OperatorMatrix::column(std::int64_t n) const {
    if (n < n_lo || n > n_hi) throw DomainError("column index outside the matrix");
    const auto j = static_cast<Eigen::Index>(n - n_lo);
    std::vector<cplx> v(static_cast<std::size_t>(entries.rows()));
    for (Eigen::Index i = 0; i < entries.rows(); ++i) v[static_cast<std::size_t>(i)] = entries(i, j);
    return TruncSeq(m_lo, std::move(v));
}

std::size_t OperatorMatrix::column_support(std::int64_t n, double eps) const {
    if (n < n_lo || n > n_hi) throw DomainError("column index outside the matrix");
    const auto j = static_cast<Eigen::Index>(n - n_lo);
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < entries.rows(); ++i)
        if (std::abs(entries(i, j)) > eps) ++count;
    return count;
}

bool OperatorMatrix::is_phased_permutation(double eps) const {
    for (std::int64_t n = n_lo; n <= n_hi; ++n)
        if (column_support(n, eps) != 1) return false;
    return true;
}

OperatorMatrix build_matrix(const CircleMap& phi, std::int64_t n_lo, std::int64_t n_hi, double tol) {
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
    if (n_hi < n_lo) throw ParameterError("empty column range");

    const auto ncols = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<TruncSeq> cols(ncols);
    const bool trivial = phi.kind() == MapKind::Monomial || phi.r() == 0.0;
    if (trivial) {
        for (std::size_t j = 0; j < ncols; ++j) cols[j] = power_coeffs(phi, n_lo + static_cast<std::int64_t>(j), tol);
    } else {
        // Every column shares the window of the highest power; columns are
        // built by repeated multiplication with b_r.
        const std::int64_t top = std::max(std::abs(n_lo), std::abs(n_hi));
        const std::int64_t K = power_coeffs(phi, top, tol).hi();
        std::vector<double> pw(static_cast<std::size_t>(K + 1), 0.0);
        pw[0] = 1.0;
        std::vector<TruncSeq> positive(static_cast<std::size_t>(top + 1));
        positive[0] = delta(0);
        for (std::int64_t k = 1; k <= top; ++k) {
            pw = times_blaschke(pw, phi.r());
            positive[static_cast<std::size_t>(k)] = trim_tail(pw, tol);
        }
        for (std::size_t j = 0; j < ncols; ++j) {
            const std::int64_t n = n_lo + static_cast<std::int64_t>(j);
            const auto& pos = positive[static_cast<std::size_t>(std::abs(n))];
            cols[j] = n >= 0 ? pos : reflect_conj(pos);
        }
    }

    OperatorMatrix M;
    M.n_lo = n_lo;
    M.n_hi = n_hi;
    M.m_lo = std::numeric_limits<std::int64_t>::max();
    M.m_hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& c : cols) {
        if (c.is_zero()) continue;
        M.m_lo = std::min(M.m_lo, c.lo());
        M.m_hi = std::max(M.m_hi, c.hi());
    }
    if (M.m_hi < M.m_lo) {
        M.m_lo = 0;
        M.m_hi = -1;
    }
    const std::int64_t nrows = M.m_hi - M.m_lo + 1;
    if (nrows > 0 && nrows > kMatrixEntryCap / static_cast<std::int64_t>(ncols))
        throw SizeError("operator matrix exceeds the size cap");
    M.entries = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(std::max<std::int64_t>(nrows, 0)),
                                       static_cast<Eigen::Index>(ncols));
    for (std::size_t j = 0; j < ncols; ++j) {
        const auto& c = cols[j];
        for (std::int64_t m = c.lo(); m <= c.hi() && !c.is_zero(); ++m)
            M.entries(static_cast<Eigen::Index>(m - M.m_lo), static_cast<Eigen::Index>(j)) = c[m];
    }
    return M;
}

Eigen::MatrixXcd weighted_matrix(const OperatorMatrix& M, const Weight& w) {
    Eigen::MatrixXcd A = M.entries;
    std::vector<double> row_log(static_cast<std::size_t>(A.rows()));
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        row_log[static_cast<std::size_t>(i)] = log_weight_checked(w, M.m_lo + i);
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
        const double col_log = log_weight_checked(w, M.n_lo + j);
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            if (A(i, j) != cplx{}) A(i, j) *= std::exp(row_log[static_cast<std::size_t>(i)] - col_log);
    }
    return A;
}

ColumnNorm column_norm(const CircleMap& phi, const Weight& w, double p, std::int64_t n, const ColumnOptions& options) {
    if (!(p >= 1.0)) throw ParameterError("column norm needs p >= 1");
    if (!(options.rel_tail > 0.0)) throw ParameterError("relative tail must be positive");
    ColumnNorm out;
    const double log_wn = log_weight_checked(w, n);

    const bool trivial = n == 0 || phi.kind() == MapKind::Monomial || phi.r() == 0.0;
    if (trivial) {
        const TruncSeq c = power_coeffs(phi, n, 1e-300);
        const std::int64_t m = c.lo();
        const double log_norm = std::log(std::abs(c[m])) + log_weight_checked(w, m);
        out.norm = std::exp(log_norm);
        out.ratio = std::exp(log_norm - log_wn);
        out.lo = out.hi = m;
        return out;
    }

    const std::int64_t s = n > 0 ? 1 : -1;
    const std::int64_t N = std::abs(n);
    const auto turning = static_cast<std::int64_t>(std::ceil(phi.stretch() * static_cast<double>(N))) + 8;
    constexpr std::size_t kProbe = 8;
    const bool sup = std::isinf(p);
    const double pp = sup ? 1.0 : p;

    for (std::int64_t K = turning + 64;; K *= 2) {
        if (K > kMaxPowerWindow) throw SizeError("column norm window exceeds the size cap");
        const auto c = detail::blaschke_power_series(phi.r(), N, K);
        std::vector<double> l(c.size(), -kInf);
        double top = -kInf;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0.0) continue;
            l[k] = pp * (std::log(std::abs(c[k])) + log_weight_checked(w, s * static_cast<std::int64_t>(k)));
            top = std::max(top, l[k]);
        }
        double sum = 0.0;
        for (double v : l) sum += sup ? 0.0 : std::exp(v - top);

        // geometric decay of the weighted terms over the last kProbe entries
        double tail = -1.0;
        const std::size_t last = c.size() - 1;
        if (l[last] == -kInf) {
            tail = 0.0;
        } else if (static_cast<std::int64_t>(last) >= turning) {
            double prev = kInf, rho = 0.0;
            bool ok = true;
            for (std::size_t k = last - kProbe + 1; k <= last && ok; ++k) {
                const double lr = l[k] - l[k - 1];
                ok = std::isfinite(lr) && lr < 0.0 && lr <= prev + 1e-9;
                prev = lr;
                rho = std::exp(lr);
            }
            if (ok) tail = std::exp(l[last] - top) * rho / (1.0 - rho);
        }
        const double rel = sup ? tail : tail / sum;
        if (tail >= 0.0 && rel < options.rel_tail) {
            const double log_norm = sup ? top : (top + std::log(sum)) / pp;
            out.norm = std::exp(log_norm);
            out.ratio = std::exp(log_norm - log_wn);
            out.tail_estimate = rel;
            out.lo = s > 0 ? 0 : -K;
            out.hi = s > 0 ? K : 0;
            return out;
        }
    }
}

double column_ratio(const CircleMap& phi, const Weight& w, double p, std::int64_t n) {
    return column_norm(phi, w, p, n).ratio;
}

Weight blowup_weight(const BlowupParams& params) {
    if (params.weight_case == 1) return Weight::subexp(params.gamma);
    if (params.weight_case == 2) {
        if (!(params.a > 1.0)) throw ParameterError("case 2 needs a > 1");
        if (!(std::abs(params.r) * params.a < 1.0)) {
            std::ostringstream os;
            os << "r = " << params.r << " is not admissible for a = " << params.a
               << ": C_{b_r} maps into the weighted space iff r < 1/a";
            throw AdmissibilityError(os.str());
        }
        return Weight::exppoly(params.a);
    }
    throw ParameterError("weight case must be 1 or 2");
}

std::vector<BlowupRow> blowup_experiment(const BlowupParams& params, unsigned jobs) {
    if (!(params.r >= 0.0 && params.r < 1.0)) throw ParameterError("r must lie in [0, 1)");
    const Weight w = blowup_weight(params);
    const CircleMap phi = CircleMap::blaschke(params.r);
    const double alpha = phi.stretch();
    for (auto n : params.n_list)
        if (n < 1) throw ParameterError("blow-up indices must be positive");

    std::vector<BlowupRow> rows(params.n_list.size());
    parallel_for(rows.size(), jobs, [&](std::size_t i) {
        const std::int64_t n = params.n_list[i];
        const double dn = static_cast<double>(n);
        BlowupRow row;
        row.n = n;
        row.ratio = column_norm(phi, w, params.p, n).ratio;
        row.model_value = params.weight_case == 1
                              ? std::exp((std::pow(alpha, params.gamma) - 1.0) * std::pow(dn, params.gamma)) *
                                    std::cbrt(1.0 / dn)
                              : std::pow(params.a, (alpha - 1.0) * dn) * std::cbrt(1.0 / dn);
        row.k_n = static_cast<std::int64_t>(std::floor(alpha * dn));
        row.coeff_at_k_n = std::abs(power_coeffs_window(phi, n, row.k_n, row.k_n)[row.k_n]);
        row.single_coeff_ratio = row.coeff_at_k_n * std::exp(w.log_value(row.k_n) - w.log_value(n));
        row.scaled_coeff = row.coeff_at_k_n * std::cbrt(dn);
        rows[i] = row;
    });
    return rows;
}

NormEstimate largest_singular_value(const Eigen::MatrixXcd& A, const NormOptions& options) {
    if (A.size() == 0) return {};
    if (!(options.rel_tol > 0.0) || options.max_iterations < 1) throw ParameterError("invalid power iteration options");
    const bool real = A.imag().isZero(0.0);
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    const Eigen::Index block = std::min<Eigen::Index>(A.cols(), 8);

    // Block power iteration on G = A^H A with Rayleigh-Ritz extraction; the
    // block absorbs clusters at the top of the spectrum that stall a single
    // vector.
    auto run = [&](const auto& G, auto V) -> NormEstimate {
        using Mat = std::decay_t<decltype(V)>;
        double lambda = 0.0;
        for (int it = 1; it <= options.max_iterations; ++it) {
            Mat Q = Eigen::HouseholderQR<Mat>(V).householderQ() * Mat::Identity(V.rows(), V.cols());
            const Mat W = G * Q;
            const Mat H = Q.adjoint() * W;
            Eigen::SelfAdjointEigenSolver<Mat> eig(H);
            const double next = eig.eigenvalues()(block - 1);
            if (next <= 0.0) return {0.0, it};
            V = W * eig.eigenvectors();
            if (std::abs(next - lambda) <= options.rel_tol * next) return {std::sqrt(next), it};
            lambda = next;
        }
        std::ostringstream os;
        os << "power iteration did not settle in " << options.max_iterations << " iterations";
        throw AccuracyError(os.str());
    };

    if (real) {
        const Eigen::MatrixXd R = A.real();
        const Eigen::MatrixXd G = R.transpose() * R;
        Eigen::MatrixXd V(R.cols(), block);
        for (Eigen::Index i = 0; i < V.size(); ++i) V.data()[i] = normal(rng);
        return run(G, V);
    }
    const Eigen::MatrixXcd G = A.adjoint() * A;
    Eigen::MatrixXcd V(A.cols(), block);
    for (Eigen::Index i = 0; i < V.size(); ++i) V.data()[i] = cplx(normal(rng), normal(rng));
    return run(G, V);
}

NormEstimate largest_singular_value_with(const Eigen::MatrixXcd& A, const NormOptions& options) {
    if (options.method == NormMethod::PowerIteration) return largest_singular_value(A, options);
    if (A.size() == 0) return {};
    double top = 0.0;
    if (A.imag().isZero(0.0)) {
        const Eigen::MatrixXd R = A.real();
        const Eigen::MatrixXd G = R.transpose() * R;
        top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(G, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
    } else {
        const Eigen::MatrixXcd G = A.adjoint() * A;
        top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(G, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
    }
    return {std::sqrt(std::max(top, 0.0)), 1};
}

double op_norm_l2(const CircleMap& phi, const Weight& w, std::int64_t N, const NormOptions& options) {
    if (N < 0) throw ParameterError("truncation must be nonnegative");
    if (phi.kind() == MapKind::Blaschke && phi.r() == 0.0) return 1.0;
    const OperatorMatrix M = build_matrix(phi, -N, N, 1e-10);
    return largest_singular_value_with(weighted_matrix(M, w), options).norm;
}

double k_bound(double r, const Weight& w, double Lambda) {
    if (!(std::abs(r) < 1.0)) throw ParameterError("k_bound needs |r| < 1");
    if (r == 0.0) return 1.0;
    if (!w.on_integers() || !w.is_radial()) throw ParameterError("k_bound needs a radial weight on Z");
    const double d2 = inverse_power_series(w, 2.0, 1).value;  // both signs
    const double d = std::sqrt(d2);
    const double ar = std::abs(r);
    const double alpha = (1.0 + ar) / (1.0 - ar);
    return std::sqrt(2.0 * ar * d + ar * ar * d2 + std::pow(alpha, 2.0 * Lambda));
}

std::vector<DistortionReport> distortion_experiment(const Weight& w, std::span<const double> r_list, std::int64_t N,
                                                   double Lambda, unsigned jobs,
                                                   const NormOptions& options) {
    const double a = w.parameter();
    if (w.family() != WeightFamily::Polynomial || !w.on_integers() || !(a > 1.0) || a != std::floor(a))
        throw ParameterError("distortion experiment needs a polynomial weight with integer exponent a > 1");
    for (double r : r_list)
        if (!(r >= 0.0 && r < 1.0)) throw ParameterError("r values must lie in [0, 1)");

    std::vector<DistortionReport> out(r_list.size());
    parallel_for(out.size(), jobs, [&](std::size_t i) {
        DistortionReport rep;
        rep.r = r_list[i];
        rep.N = N;
        rep.lambda_param = Lambda;
        const auto fwd = CircleMap::blaschke(rep.r);
        rep.norm_fwd = op_norm_l2(fwd, w, N, options);
        rep.norm_inv = op_norm_l2(CircleMap::blaschke(-rep.r), w, N, options);
        rep.distortion = rep.norm_fwd * rep.norm_inv;
        rep.k_bound_fwd = k_bound(rep.r, w, Lambda);
        rep.k_bound_inv = k_bound(-rep.r, w, Lambda);
        rep.within_k_bound = rep.distortion <= rep.k_bound_fwd * rep.k_bound_inv;
        rep.column1_support = build_matrix(fwd, 1, 1, 1e-10).column_support(1, 1e-12);
        out[i] = rep;
    });
    return out;
}

ChainRuleReport chain_rule_check(const TruncSeq& f, const CircleMap& phi, double tol) {
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
    ComposeOptions opts;
    opts.cauchy_tol = 1e-11;
    const TruncSeq lhs = formal_derivative(compose_transform(f, phi, opts));
    const TruncSeq rhs = convolve(compose_transform(formal_derivative(f), phi, opts), derivative_coeffs(phi, tol));
    ChainRuleReport rep;
    rep.residual_l1 = l1_distance(lhs, rhs);
    rep.lhs_l1 = lhs.l1_norm();
    rep.tol = tol;
    return rep;
}

ExtensionReport extension_step_check(const TruncSeq& g, const CircleMap& phi, int a, double p) {
    if (a < 1) throw ParameterError("extension step needs a >= 1");
    const Weight w = Weight::polynomial(static_cast<double>(a - 1));
    ExtensionReport rep;
    const TruncSeq composed = compose_transform(g, phi);
    const TruncSeq image = convolve(composed, reflect_conj(coeffs(phi, 1e-14)));
    rep.image = trim(image, 1e-14 * image.linf_norm());
    rep.image_norm = norm_p_w(rep.image, p, w);
    rep.input_norm = norm_p_w(g, p, w);
    rep.ratio = rep.input_norm > 0.0 ? rep.image_norm / rep.input_norm : 0.0;
    return rep;
}

TruncSeq standard_automorphism(const TruncSeq& f, cplx lambda, bool reflect) {
    if (!(std::abs(std::abs(lambda) - 1.0) <= 1e-12)) throw ParameterError("lambda must be unimodular");
    if (f.is_zero()) return {};
    const double theta = std::arg(lambda);
    const std::int64_t lo = reflect ? -f.hi() : f.lo();
    std::vector<cplx> v(f.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const std::int64_t n = lo + static_cast<std::int64_t>(k);
        v[k] = std::polar(1.0, theta * static_cast<double>(n)) * f[reflect ? -n : n];
    }
    return TruncSeq(lo, std::move(v));
}

} // namespace wlp
