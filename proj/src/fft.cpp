#include "wglab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace wglab {

namespace {

std::mutex plan_mutex;

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

fftw_plan get_plan(const std::vector<int>& dims, int sign) {
    static std::map<std::vector<int>, PlanPair> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& entry = cache[dims];
    fftw_plan& slot = sign == FFTW_FORWARD ? entry.fwd : entry.bwd;
    if (!slot) {
        std::size_t n = 1;
        for (int d : dims) n *= std::size_t(d);
        fftw_complex* buf = fftw_alloc_complex(n);
        if (!buf) throw std::bad_alloc();
        slot = fftw_plan_dft(int(dims.size()), dims.data(), buf, buf, sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        if (!slot) throw std::runtime_error("fftw plan creation failed");
    }
    return slot;
}

void run(std::vector<std::complex<double>>& data, const std::vector<int>& dims, int sign) {
    std::size_t n = 1;
    for (int d : dims) n *= std::size_t(d);
    if (data.size() != n) throw std::invalid_argument("dft: data size does not match dims");
    fftw_plan plan = get_plan(dims, sign);
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, p, p);
}

}  // namespace

void dft_forward(std::vector<std::complex<double>>& data, const std::vector<int>& dims) {
    run(data, dims, FFTW_FORWARD);
}

void dft_backward(std::vector<std::complex<double>>& data, const std::vector<int>& dims) {
    run(data, dims, FFTW_BACKWARD);
}

}  // namespace wglab
