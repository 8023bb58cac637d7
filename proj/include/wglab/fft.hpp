#ifndef WGLAB_FFT_HPP
#define WGLAB_FFT_HPP

#include <complex>
#include <vector>

namespace wglab {

// In-place c2c DFTs over row-major arrays, thin wrapper around FFTW with a
// process-wide plan cache (planning is mutex-guarded; execution is
// re-entrant).  Plans use FFTW_ESTIMATE so results do not depend on
// run-to-run planner measurements.  No normalization is applied here.

void dft_forward(std::vector<std::complex<double>>& data, const std::vector<int>& dims);
void dft_backward(std::vector<std::complex<double>>& data, const std::vector<int>& dims);

}  // namespace wglab

#endif
