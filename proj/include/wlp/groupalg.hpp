#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wlp/group.hpp"
#include "wlp/weights.hpp"

namespace wlp {

using cplx = std::complex<double>;
using GroupFunc = std::vector<cplx>;

GroupFunc group_delta(const FiniteGroup& G, Element a);

/// (f*g)(x) = sum_y f(y) g(y^{-1} x).
GroupFunc convolve_group(const GroupFunc& f, const GroupFunc& g, const FiniteGroup& G);

/// Weighted l^p norm over a finite group (counting measure).
double group_norm(const GroupFunc& f, double p, const Weight& w);

/// A standard isomorphism (gamma, phi): a group isomorphism phi: G -> H and
/// a nonvanishing character gamma of G. Both are checked exhaustively.
/// With counting measures the measure adjustment constant is 1.
class StandardIso {
public:
    StandardIso(GroupPtr domain, GroupPtr codomain, std::vector<Element> phi, std::vector<cplx> gamma);

    const FiniteGroup& domain() const noexcept { return *domain_; }
    const FiniteGroup& codomain() const noexcept { return *codomain_; }
    std::span<const Element> phi() const noexcept { return phi_; }
    std::span<const Element> phi_inverse() const noexcept { return phi_inv_; }
    std::span<const cplx> gamma() const noexcept { return gamma_; }
    double measure_constant() const noexcept { return 1.0; }

private:
    GroupPtr domain_, codomain_;
    std::vector<Element> phi_, phi_inv_;
    std::vector<cplx> gamma_;
};

/// (Tf)(h) = c gamma(phi^{-1} h) f(phi^{-1} h).
GroupFunc t_gamma_phi(const StandardIso& iso, const GroupFunc& f);
/// Matrix of t_gamma_phi; column a is T(delta_a).
Eigen::MatrixXcd t_gamma_phi_matrix(const StandardIso& iso);

/// All group automorphisms of Z_n: x -> u x with gcd(u, n) = 1.
std::vector<std::vector<Element>> cyclic_automorphisms(std::size_t n);
/// Character x -> exp(2 pi i k x / n) of Z_n.
std::vector<cplx> cyclic_character(std::size_t n, std::size_t k);

struct HomomorphismCheck {
    bool ok = false;
    double max_defect = 0.0;  ///< max over a, b of ||T(d_a*d_b) - T d_a * T d_b||_inf
    Element a = 0, b = 0;
};

HomomorphismCheck is_algebra_homomorphism(const Eigen::MatrixXcd& T, const FiniteGroup& G,
                                          const FiniteGroup& H, double tol);

struct IsoClassification {
    bool bipositive = false;
    bool isometric = false;
    bool isometry_sampled = false;  ///< isometry only checked on random vectors
    double norm = 0.0;
    double inverse_norm = 0.0;
    bool norms_exact = false;       ///< false: columnwise lower bounds
    double condition_number = 0.0;  ///< spectral condition number of T
};

/// Flags of an invertible operator T: l^p(G, w1) -> l^p(H, w2).
/// InvertibilityError when T is singular.
IsoClassification classify_iso(const Eigen::MatrixXcd& T, double p, const Weight& w1, const Weight& w2,
                               double tol = 1e-12, std::uint64_t seed = 0);

struct ShiftRigidityReport {
    bool unique_solution = false;  ///< only (gamma, x) = (1, e) works
    std::size_t solutions = 0;
    bool multipliers_ok = false;   ///< every l_x is a left multiplier
    double max_translation_ratio = 0.0;  ///< max_x ||l_x|| / w(x), <= 1
};

/// Checks that gamma l_x is an algebra homomorphism only for gamma = 1 and
/// x = e. The homomorphism equation on deltas forces gamma^2 = gamma, so the
/// only invertible candidate is gamma = 1, tested against every x.
ShiftRigidityReport shift_homomorphism_check(const FiniteGroup& G, const Weight& w, double p);

/// T_sigma = F^{-1} P_sigma F on C[Z_n], F the unitary DFT and P_sigma the
/// permutation of frequencies j -> sigma(j).
Eigen::MatrixXcd fourier_permutation_operator(std::span<const std::size_t> sigma);
/// sigma(j) = a j + k mod n with gcd(a, n) = 1.
bool is_affine_permutation(std::span<const std::size_t> sigma);

struct AutomorphismCensus {
    std::size_t n = 0;
    std::size_t total = 0;
    std::size_t standard_count = 0;
    double max_homomorphism_defect = 0.0;
    double max_isometry_defect = 0.0;
    std::optional<std::vector<std::size_t>> nonstandard_example;
    Eigen::MatrixXcd nonstandard_matrix;
};

/// All n! Fourier-permutation automorphisms of l^2(Z_n); n <= 9.
AutomorphismCensus enumerate_automorphisms_l2(std::size_t n, unsigned jobs = 1);

struct KaltonWoodReport {
    std::size_t n = 0;
    std::size_t total = 0;
    double threshold = 1.2;
    std::optional<double> min_nonstandard_norm;
    double max_standard_norm = 0.0;
    bool all_below_threshold_standard = false;
};

/// l^1 operator norms (max column l1 norm) of every T_sigma on l^1(Z_n); n <= 8.
KaltonWoodReport kalton_wood_scan(std::size_t n, unsigned jobs = 1, double threshold = 1.2);

} // namespace wlp
