#include "wlp/dft.hpp"

#include <limits>
#include <mutex>

#include <fftw3.h>

#include "wlp/error.hpp"

namespace wlp::dft {

namespace {
// The FFTW planner is not thread-safe; execution of a finished plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

std::vector<cplx> transform(std::span<const cplx> in, Sign sign) {
    const std::size_t n = in.size();
    std::vector<cplx> out(n);
    if (n == 0) return out;
    if (n > static_cast<std::size_t>(std::numeric_limits<int>::max())) throw SizeError("DFT length too large");

    std::vector<cplx> buf(in.begin(), in.end());
    auto* src = reinterpret_cast<fftw_complex*>(buf.data());
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    const int dir = sign == Sign::Negative ? FFTW_FORWARD : FFTW_BACKWARD;

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n), src, dst, dir, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace wlp::dft
