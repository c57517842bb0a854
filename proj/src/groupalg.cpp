#include "wlp/groupalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "wlp/error.hpp"
#include "wlp/parallel.hpp"

namespace wlp {

namespace {

double weight_at(const Weight& w, Element x) {
    if (w.family() == WeightFamily::Constant) return 1.0;
    return w.at(x);
}

void check_func(const GroupFunc& f, std::size_t order) {
    if (f.size() != order) throw SizeError("group function length does not match the group order");
}

cplx root_of_unity(std::size_t n, std::size_t k) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n));
}

void check_permutation(std::span<const std::size_t> sigma) {
    const std::size_t n = sigma.size();
    if (n == 0) throw ParameterError("empty permutation");
    std::vector<bool> seen(n, false);
    for (auto s : sigma) {
        if (s >= n || seen[s]) throw ParameterError("not a permutation");
        seen[s] = true;
    }
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

double column_lp(const Eigen::VectorXcd& v, double p) {
    if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
    double s = 0.0;
    for (const auto& x : v) s += std::pow(std::abs(x), p);
    return std::pow(s, 1.0 / p);
}

} // namespace

GroupFunc group_delta(const FiniteGroup& G, Element a) {
    if (a >= G.order()) throw DomainError("element outside the group");
    GroupFunc f(G.order());
    f[a] = 1.0;
    return f;
}

GroupFunc convolve_group(const GroupFunc& f, const GroupFunc& g, const FiniteGroup& G) {
    check_func(f, G.order());
    check_func(g, G.order());
    GroupFunc out(G.order());
    // (f*g)(yz) accumulates f(y) g(z)
    for (Element y = 0; y < G.order(); ++y) {
        if (f[y] == cplx{}) continue;
        for (Element z = 0; z < G.order(); ++z) out[G.mul(y, z)] += f[y] * g[z];
    }
    return out;
}

double group_norm(const GroupFunc& f, double p, const Weight& w) {
    if (!(p >= 1.0)) throw ParameterError("norm needs p >= 1");
    double s = 0.0;
    for (Element x = 0; x < f.size(); ++x) {
        const double v = std::abs(f[x]) * weight_at(w, x);
        s = std::isinf(p) ? std::max(s, v) : s + std::pow(v, p);
    }
    return std::isinf(p) ? s : std::pow(s, 1.0 / p);
}

StandardIso::StandardIso(GroupPtr domain, GroupPtr codomain, std::vector<Element> phi, std::vector<cplx> gamma)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), phi_(std::move(phi)), gamma_(std::move(gamma)) {
    if (!domain_ || !codomain_) throw ParameterError("standard isomorphism needs both groups");
    const std::size_t n = domain_->order();
    if (codomain_->order() != n) throw ParameterError("groups of different order are not isomorphic");
    if (phi_.size() != n || gamma_.size() != n) throw SizeError("phi and gamma must have one entry per element");
    phi_inv_.assign(n, n);
    for (Element x = 0; x < n; ++x) {
        if (phi_[x] >= n || phi_inv_[phi_[x]] != n) throw ParameterError("phi is not a bijection");
        phi_inv_[phi_[x]] = x;
    }
    for (Element x = 0; x < n; ++x) {
        if (gamma_[x] == cplx{}) throw InvalidCharacterError("gamma vanishes at an element");
        for (Element y = 0; y < n; ++y) {
            if (phi_[domain_->mul(x, y)] != codomain_->mul(phi_[x], phi_[y]))
                throw ParameterError("phi does not preserve the group law");
            const cplx lhs = gamma_[domain_->mul(x, y)], rhs = gamma_[x] * gamma_[y];
            if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs)))
                throw InvalidCharacterError("gamma is not multiplicative");
        }
    }
}

GroupFunc t_gamma_phi(const StandardIso& iso, const GroupFunc& f) {
    check_func(f, iso.domain().order());
    GroupFunc out(f.size());
    const auto pinv = iso.phi_inverse();
    const auto gamma = iso.gamma();
    for (Element h = 0; h < out.size(); ++h) out[h] = iso.measure_constant() * gamma[pinv[h]] * f[pinv[h]];
    return out;
}

Eigen::MatrixXcd t_gamma_phi_matrix(const StandardIso& iso) {
    const auto n = static_cast<Eigen::Index>(iso.domain().order());
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n, n);
    for (Element a = 0; a < iso.domain().order(); ++a) {
        const auto col = t_gamma_phi(iso, group_delta(iso.domain(), a));
        for (Eigen::Index h = 0; h < n; ++h) T(h, static_cast<Eigen::Index>(a)) = col[static_cast<std::size_t>(h)];
    }
    return T;
}

std::vector<std::vector<Element>> cyclic_automorphisms(std::size_t n) {
    if (n == 0) throw ParameterError("cyclic group order must be positive");
    std::vector<std::vector<Element>> out;
    for (std::size_t u = n == 1 ? 0 : 1; u < std::max<std::size_t>(n, 1); ++u) {
        if (n > 1 && std::gcd(u, n) != 1) continue;
        std::vector<Element> phi(n);
        for (std::size_t x = 0; x < n; ++x) phi[x] = (u * x) % n;
        out.push_back(std::move(phi));
    }
    return out;
}

std::vector<cplx> cyclic_character(std::size_t n, std::size_t k) {
    if (n == 0) throw ParameterError("cyclic group order must be positive");
    std::vector<cplx> out(n);
    for (std::size_t x = 0; x < n; ++x) out[x] = root_of_unity(n, (k % n) * x);
    return out;
}

HomomorphismCheck is_algebra_homomorphism(const Eigen::MatrixXcd& T, const FiniteGroup& G, const FiniteGroup& H,
                                          double tol) {
    if (T.rows() != static_cast<Eigen::Index>(H.order()) || T.cols() != static_cast<Eigen::Index>(G.order()))
        throw SizeError("matrix dimensions do not match the group orders");
    const std::size_t m = H.order();
    auto column = [&](Element a) {
        GroupFunc c(m);
        for (std::size_t h = 0; h < m; ++h) c[h] = T(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(a));
        return c;
    };
    std::vector<GroupFunc> cols(G.order());
    for (Element a = 0; a < G.order(); ++a) cols[a] = column(a);

    HomomorphismCheck out;
    for (Element a = 0; a < G.order(); ++a) {
        for (Element b = 0; b < G.order(); ++b) {
            const GroupFunc prod = convolve_group(cols[a], cols[b], H);
            const GroupFunc& lhs = cols[G.mul(a, b)];
            double d = 0.0;
            for (std::size_t h = 0; h < m; ++h) d = std::max(d, std::abs(lhs[h] - prod[h]));
            if (d > out.max_defect) {
                out.max_defect = d;
                out.a = a;
                out.b = b;
            }
        }
    }
    out.ok = out.max_defect <= tol;
    return out;
}

IsoClassification classify_iso(const Eigen::MatrixXcd& T, double p, const Weight& w1, const Weight& w2, double tol,
                               std::uint64_t seed) {
    if (!(p >= 1.0)) throw ParameterError("classify_iso needs p >= 1");
    if (T.rows() != T.cols() || T.rows() == 0) throw SizeError("classify_iso needs a nonempty square matrix");
    const Eigen::Index n = T.rows();

    Eigen::FullPivLU<Eigen::MatrixXcd> lu(T);
    if (!lu.isInvertible()) throw InvertibilityError("operator matrix is singular");
    const Eigen::MatrixXcd Tinv = lu.inverse();

    IsoClassification out;
    const Eigen::JacobiSVD<Eigen::MatrixXcd> plain(T);
    const auto& sv = plain.singularValues();
    out.condition_number = sv(0) / sv(n - 1);

    auto nonnegative = [tol](const Eigen::MatrixXcd& M) {
        const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
        for (Eigen::Index i = 0; i < M.size(); ++i) {
            const cplx v = M.data()[i];
            if (std::abs(v.imag()) > tol * scale || v.real() < -tol * scale) return false;
        }
        return true;
    };
    out.bipositive = nonnegative(T) && nonnegative(Tinv);

    // A = D2 T D1^{-1}; T is an isometry of the weighted spaces iff A is one
    // of the plain l^p spaces.
    Eigen::MatrixXcd A = T;
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            A(i, j) *= weight_at(w2, static_cast<Element>(i)) / weight_at(w1, static_cast<Element>(j));

    const double big = A.cwiseAbs().maxCoeff();
    bool permutation = true;
    for (Eigen::Index j = 0; j < n && permutation; ++j) {
        Eigen::Index count = 0;
        for (Eigen::Index i = 0; i < n; ++i) count += std::abs(A(i, j)) > tol * big ? 1 : 0;
        permutation = count == 1;
    }
    auto near_one = [tol](double v) { return std::abs(v - 1.0) <= tol * 10.0; };

    if (permutation) {
        double hi = 0.0, lo = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < n; ++j) {
            Eigen::Index i = 0;
            A.col(j).cwiseAbs().maxCoeff(&i);
            hi = std::max(hi, std::abs(A(i, j)));
            lo = std::min(lo, std::abs(A(i, j)));
        }
        out.norm = hi;
        out.inverse_norm = 1.0 / lo;
        out.norms_exact = true;
        out.isometric = near_one(hi) && near_one(lo);
        return out;
    }

    if (p == 2.0) {
        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
        const auto& s = svd.singularValues();
        out.norm = s(0);
        out.inverse_norm = 1.0 / s(n - 1);
        out.norms_exact = true;
    } else if (p == 1.0 || std::isinf(p)) {
        const Eigen::MatrixXcd Ainv = A.inverse();
        if (p == 1.0) {
            out.norm = A.cwiseAbs().colwise().sum().maxCoeff();
            out.inverse_norm = Ainv.cwiseAbs().colwise().sum().maxCoeff();
        } else {
            out.norm = A.cwiseAbs().rowwise().sum().maxCoeff();
            out.inverse_norm = Ainv.cwiseAbs().rowwise().sum().maxCoeff();
        }
        out.norms_exact = true;
    }
    if (out.norms_exact) {
        // a surjection with ||T|| <= 1 and ||T^{-1}|| <= 1 is an isometry
        out.isometric = near_one(out.norm) && near_one(out.inverse_norm);
        return out;
    }

    // general p: columnwise and sampled lower bounds
    const Eigen::MatrixXcd Ainv = A.inverse();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    constexpr int kSamples = 64;
    bool iso = true;
    double norm = 0.0, inv = 0.0;
    for (Eigen::Index k = 0; k < n + kSamples; ++k) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
        if (k < n) {
            v(k) = 1.0;
        } else {
            for (auto& x : v) x = cplx(normal(rng), normal(rng));
        }
        const double nv = column_lp(v, p);
        const double ratio = column_lp(A * v, p) / nv;
        norm = std::max(norm, ratio);
        inv = std::max(inv, column_lp(Ainv * v, p) / nv);
        iso = iso && std::abs(ratio - 1.0) <= tol * 10.0;
    }
    out.norm = norm;
    out.inverse_norm = inv;
    out.isometric = iso;
    out.isometry_sampled = true;
    return out;
}

ShiftRigidityReport shift_homomorphism_check(const FiniteGroup& G, const Weight& w, double p) {
    if (!(p >= 1.0)) throw ParameterError("p must be >= 1");
    const std::size_t n = G.order();
    ShiftRigidityReport out;
    out.multipliers_ok = true;
    Element found = n;
    for (Element x = 0; x < n; ++x) {
        // l_x delta_a = delta_{xa}; with gamma = 1 the homomorphism equation
        // on deltas reads delta_{xab} = delta_{xa} * delta_{xb} = delta_{xaxb}.
        bool hom = true;
        for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b) {
                const GroupFunc lhs = group_delta(G, G.mul(x, G.mul(a, b)));
                const GroupFunc rhs = convolve_group(group_delta(G, G.mul(x, a)), group_delta(G, G.mul(x, b)), G);
                hom = hom && lhs == rhs;
                // left multiplier: l_x(f*g) = (l_x f)*g
                const GroupFunc mult = convolve_group(group_delta(G, G.mul(x, a)), group_delta(G, b), G);
                out.multipliers_ok = out.multipliers_ok && lhs == mult;
            }
        }
        if (hom) {
            ++out.solutions;
            found = x;
        }
        double worst = 0.0;
        for (Element a = 0; a < n; ++a)
            worst = std::max(worst, weight_at(w, G.mul(x, a)) / weight_at(w, a));
        out.max_translation_ratio = std::max(out.max_translation_ratio, worst / weight_at(w, x));
    }
    out.unique_solution = out.solutions == 1 && found == G.identity();
    return out;
}

Eigen::MatrixXcd fourier_permutation_operator(std::span<const std::size_t> sigma) {
    check_permutation(sigma);
    const std::size_t n = sigma.size();
    // T(y, x) = (1/n) sum_j w^{sigma(j) y - j x}; exponents are reduced
    // exactly mod n and the cancelling entries are snapped to zero.
    Eigen::MatrixXcd T(n, n);
    std::vector<std::size_t> counts(n);
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t j = 0; j < n; ++j) ++counts[(sigma[j] * y + (n - j) * x) % n];
            cplx s{};
            for (std::size_t e = 0; e < n; ++e)
                if (counts[e]) s += static_cast<double>(counts[e]) * root_of_unity(n, e);
            s /= static_cast<double>(n);
            if (std::abs(s) < 1e-12) s = 0.0;
            T(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = s;
        }
    }
    return T;
}

bool is_affine_permutation(std::span<const std::size_t> sigma) {
    check_permutation(sigma);
    const std::size_t n = sigma.size();
    if (n == 1) return true;
    const std::size_t k = sigma[0];
    const std::size_t a = (sigma[1] + n - k) % n;
    if (std::gcd(a, n) != 1) return false;
    for (std::size_t j = 0; j < n; ++j)
        if (sigma[j] != (a * j + k) % n) return false;
    return true;
}

AutomorphismCensus enumerate_automorphisms_l2(std::size_t n, unsigned jobs) {
    if (n == 0) throw ParameterError("n must be positive");
    if (n > 9) throw SizeError("automorphism census is limited to n <= 9");
    const auto perms = all_permutations(n);
    const FiniteGroup G = FiniteGroup::cyclic(n);
    std::vector<double> hom(perms.size()), iso(perms.size());
    std::vector<char> affine(perms.size());
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    parallel_for(perms.size(), jobs, [&](std::size_t i) {
        const Eigen::MatrixXcd T = fourier_permutation_operator(perms[i]);
        hom[i] = is_algebra_homomorphism(T, G, G, 0.0).max_defect;
        iso[i] = (T.adjoint() * T - I).cwiseAbs().maxCoeff();
        affine[i] = is_affine_permutation(perms[i]) ? 1 : 0;
    });

    AutomorphismCensus out;
    out.n = n;
    out.total = perms.size();
    for (std::size_t i = 0; i < perms.size(); ++i) {
        out.max_homomorphism_defect = std::max(out.max_homomorphism_defect, hom[i]);
        out.max_isometry_defect = std::max(out.max_isometry_defect, iso[i]);
        if (affine[i]) {
            ++out.standard_count;
        } else if (!out.nonstandard_example) {
            out.nonstandard_example = perms[i];
            out.nonstandard_matrix = fourier_permutation_operator(perms[i]);
        }
    }
    return out;
}

KaltonWoodReport kalton_wood_scan(std::size_t n, unsigned jobs, double threshold) {
    if (n == 0) throw ParameterError("n must be positive");
    if (n > 8) throw SizeError("Kalton-Wood scan is limited to n <= 8");
    const auto perms = all_permutations(n);
    std::vector<double> norms(perms.size());
    std::vector<char> affine(perms.size());
    parallel_for(perms.size(), jobs, [&](std::size_t i) {
        norms[i] = fourier_permutation_operator(perms[i]).cwiseAbs().colwise().sum().maxCoeff();
        affine[i] = is_affine_permutation(perms[i]) ? 1 : 0;
    });

    KaltonWoodReport out;
    out.n = n;
    out.total = perms.size();
    out.threshold = threshold;
    out.all_below_threshold_standard = true;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        if (affine[i]) {
            out.max_standard_norm = std::max(out.max_standard_norm, norms[i]);
            continue;
        }
        if (!out.min_nonstandard_norm || norms[i] < *out.min_nonstandard_norm) out.min_nonstandard_norm = norms[i];
        if (norms[i] < threshold) out.all_below_threshold_standard = false;
    }
    return out;
}

} // namespace wlp
