#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wlp::dft {

using cplx = std::complex<double>;

enum class Sign { Negative = -1, Positive = +1 };

/// Unnormalized DFT: out_k = sum_j in_j exp(sign * 2 pi i j k / n).
std::vector<cplx> transform(std::span<const cplx> in, Sign sign);

inline std::vector<cplx> forward(std::span<const cplx> in) { return transform(in, Sign::Negative); }
inline std::vector<cplx> backward(std::span<const cplx> in) { return transform(in, Sign::Positive); }

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);
bool is_pow2(std::size_t n);

} // namespace wlp::dft
