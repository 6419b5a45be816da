#include "efd/signal.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <unordered_map>

// FFTW planning is not thread-safe; execution on distinct buffers is. Plans
// are cached per length under a mutex and executed with the new-array API.

namespace efd::detail {
namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
};

std::mutex g_plan_mutex;
std::unordered_map<std::size_t, PlanPair>& plan_cache() {
    static auto* cache = new std::unordered_map<std::size_t, PlanPair>();
    return *cache;
}

PlanPair& plans_for(std::size_t k) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    PlanPair p;
    p.in = fftw_alloc_complex(k);
    p.out = fftw_alloc_complex(k);
    auto n = static_cast<int>(k);
    p.fwd = fftw_plan_dft_1d(n, p.in, p.out, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_1d(n, p.in, p.out, FFTW_BACKWARD, FFTW_ESTIMATE);
    return cache.emplace(k, p).first->second;
}

std::vector<cplx> run(const std::vector<cplx>& in, bool forward) {
    const std::size_t k = in.size();
    PlanPair& p = plans_for(k);
    fftw_complex* buf_in = fftw_alloc_complex(k);
    fftw_complex* buf_out = fftw_alloc_complex(k);
    std::memcpy(buf_in, in.data(), k * sizeof(fftw_complex));
    fftw_execute_dft(forward ? p.fwd : p.bwd, buf_in, buf_out);
    std::vector<cplx> out(k);
    std::memcpy(out.data(), buf_out, k * sizeof(fftw_complex));
    fftw_free(buf_in);
    fftw_free(buf_out);
    return out;
}

}  // namespace

std::vector<cplx> fft(const std::vector<cplx>& in) { return run(in, true); }
std::vector<cplx> ifft(const std::vector<cplx>& in) { return run(in, false); }

}  // namespace efd::detail
