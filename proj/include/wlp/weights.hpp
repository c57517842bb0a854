#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlp/group.hpp"

namespace wlp {

enum class WeightFamily { Constant, Polynomial, SubExp, ExpPoly, Tabulated };

std::string to_string(WeightFamily family);
WeightFamily weight_family_from_string(const std::string& name);

/// A weight: a positive submultiplicative function with value 1 at the
/// identity, defined either on the integers or on a finite group.
///
/// Built-in families on Z:
///   Polynomial(a)  max(1, |n|^a),       a >= 0
///   SubExp(g)      exp(|n|^g),          0 < g < 1
///   ExpPoly(a)     a^|n| (1 + n^2),     a > 1
/// Constant is 1 on any domain. Tabulated weights carry explicit values,
/// either on a finite group or on an integer window [lo, lo + size).
///
/// Weights are immutable values.
class Weight {
public:
    static Weight constant(GroupPtr group = nullptr);
    static Weight polynomial(double a);
    static Weight subexp(double gamma);
    static Weight exppoly(double a);
    static Weight tabulated(GroupPtr group, std::vector<double> values);
    static Weight tabulated(std::int64_t lo, std::vector<double> values);

    WeightFamily family() const noexcept { return family_; }
    /// The family parameter (a or gamma); 0 for Constant and Tabulated.
    double parameter() const noexcept { return param_; }
    bool on_integers() const noexcept { return group_ == nullptr; }
    const GroupPtr& group() const noexcept { return group_; }
    std::span<const double> table() const noexcept { return table_; }
    std::int64_t table_lo() const noexcept { return table_lo_; }

    /// Value at an integer. Throws DomainError for group weights or when n is
    /// outside a tabulated window.
    double operator()(std::int64_t n) const;
    /// Value at a group element. Throws DomainError for weights on Z.
    double at(Element x) const;
    /// log of the value at an integer; finite even where the value overflows.
    double log_value(std::int64_t n) const;

    /// True when w(n) = w(-n) and w is nondecreasing in |n| (all built-in
    /// families on Z).
    bool is_radial() const noexcept;

private:
    Weight(WeightFamily family, double param, GroupPtr group);

    WeightFamily family_;
    double param_ = 0.0;
    GroupPtr group_;
    std::vector<double> table_;
    std::int64_t table_lo_ = 0;
};

double eval(const Weight& w, std::int64_t n);

struct SubmultiplicativityReport {
    double max_excess = 0.0;  ///< max of w(xy) - w(x)w(y) over the window
    std::int64_t x = 0;       ///< argmax pair
    std::int64_t y = 0;
    bool submultiplicative = true;
    bool exact = false;  ///< evaluated in integer arithmetic
    double max_ratio = 0.0;  ///< smallest C with w(xy) <= C w(x)w(y) on the window
};

/// Checks w(m+n) <= w(m)w(n) for all m, n in [-window, window].
///
/// Constant and integer-exponent Polynomial/ExpPoly weights are evaluated in
/// exact integer arithmetic while the values fit; everything else uses a
/// relative tolerance of 1e-12.
SubmultiplicativityReport check_submultiplicative(const Weight& w, std::int64_t window);
/// Exhaustive check over all pairs of a group weight.
SubmultiplicativityReport check_submultiplicative(const Weight& w);

struct AlgebraConstant {
    double constant = 0.0;  ///< C = max_n (u*u)(n) / u(n), u = w^{-q}
    std::int64_t argmax = 0;
    double q = 0.0;
    /// Upper bound on the out-of-window part of (u*u)(n)/u(n) for every
    /// |n| <= certified_window. Zero for finite groups, +inf if unbounded.
    double tail_bound = 0.0;
    std::int64_t certified_window = 0;

    /// C^{1/q}: the constant in ||f*g|| <= C^{1/q} ||f|| ||g||.
    double norm_bound() const;
};

/// Windowed algebra constant on [-window, window]; p > 1.
AlgebraConstant algebra_constant(const Weight& w, double p, std::int64_t window);
/// Exact algebra constant of a group weight; p > 1.
AlgebraConstant algebra_constant(const Weight& w, double p);

/// Sum of w(n)^{-s} over |n| >= from, for a weight on Z. The value is a
/// partial sum plus a tail estimate; `error_bound` brackets the tail.
struct SeriesValue {
    double value = 0.0;
    double error_bound = 0.0;
    double upper() const { return value + error_bound; }
};
SeriesValue inverse_power_series(const Weight& w, double s, std::int64_t from);

/// inf and sup over the window of |gamma(x)| w2(phi(x)) / w1(x).
using IntCharacter = std::function<std::complex<double>(std::int64_t)>;
using IntMap = std::function<std::int64_t(std::int64_t)>;
std::pair<double, double> standard_iso_ratio_bounds(const IntCharacter& gamma,
                                                    const IntMap& phi,
                                                    const Weight& w1,
                                                    const Weight& w2,
                                                    std::int64_t window);
/// Group version: gamma and phi given as tables over the domain of w1.
std::pair<double, double> standard_iso_ratio_bounds(std::span<const std::complex<double>> gamma,
                                                    std::span<const Element> phi,
                                                    const Weight& w1,
                                                    const Weight& w2);

} // namespace wlp
