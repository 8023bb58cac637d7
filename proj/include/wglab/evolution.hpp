#ifndef WGLAB_EVOLUTION_HPP
#define WGLAB_EVOLUTION_HPP

#include <functional>
#include <vector>

#include "wglab/conserved.hpp"
#include "wglab/field.hpp"
#include "wglab/lattice.hpp"
#include "wglab/resonant.hpp"

namespace wglab {

// e^{it Laplacian}: multiplies each coefficient at frequency (xi, k) by
// exp(-i t (|xi|^2 + |k|^2)).  Unitary; commutes with every other Fourier
// multiplier in the code.
WaveguideField linear_propagate(const WaveguideField& f, double t);

// Strang splitting for (i d_t + Lap) u = rho |u|^2 u: half linear step,
// pointwise phase rotation u <- u exp(-i dt rho |u|^2), half linear step.
// The 2/3-rule truncation after the nonlinear substep is on by default.
struct NlsStepperConfig {
    double dt = 1e-3;
    double rho = 1.0;  // 0 switches the nonlinearity off
    bool dealias = true;
};

WaveguideField step_nls(const WaveguideField& f, const NlsStepperConfig& cfg);

using FieldObserver = std::function<void(long step, double t, const WaveguideField& physical)>;

struct NlsEvolveResult {
    WaveguideField final;
    std::vector<DiagnosticsRecord> records;
};

// Fixed-step evolution to time T (T < 0 runs backwards); records and the
// observer fire every record_stride steps, including step 0 and the last.
NlsEvolveResult evolve_nls(const WaveguideField& f0, double T, const NlsStepperConfig& cfg,
                           long record_stride = 1, const FieldObserver& observer = nullptr);

// Coupling sum of the resonant system: component j of the result is
// sum over stored triples of v_{j1} conj(v_{j2}) v_{j3}, pointwise.
ResonantState resonant_rhs(const ResonantState& v, const ResonanceTable& table);

// Classical RK4 in the interaction picture w_j = e^{-it Lap_x} u_j; the
// stiff linear part is exact and only the coupling is stepped.
struct ResonantStepperConfig {
    double dt = 1e-2;
    const ResonanceTable* table = nullptr;
    double rho = 1.0;
    bool dealias = true;
};

ResonantState step_resonant(const ResonantState& v, const ResonantStepperConfig& cfg);

using StateObserver = std::function<void(long step, double t, const ResonantState& physical)>;

struct ResonantEvolveResult {
    ResonantState final;
    std::vector<DiagnosticsRecord> records;
};

ResonantEvolveResult evolve_resonant(const ResonantState& v0, double T,
                                     const ResonantStepperConfig& cfg, long record_stride = 1,
                                     const StateObserver& observer = nullptr);

// Componentwise e^{it Lap_x} for the resonant family.
ResonantState linear_propagate_resonant(const ResonantState& v, double t);

// v(z,t) = e^{-i|xi0|^2 t + i<z,xi0>} u(z - 2 xi0 t, t); xi0 must lie on
// the box dual lattice (multiples of 2pi/L), acting in the R^2 directions.
WaveguideField galilean_boost(const WaveguideField& f, double xi0_1, double xi0_2, double t);

struct RescaledField {
    WaveguideField field;
    GridSpec spec;
};

// u -> lam u(lam x, lam y) on the rescaled product box; lam must be a
// power of two.  Values scale by lam, the grid shrinks by 1/lam, dt by
// 1/lam^2.
RescaledField rescale_solution(const WaveguideField& f, double lam);

// 2/3-rule truncation masks, exposed for the experiments.
void dealias_inplace(WaveguideField& f);
void dealias_x_inplace(ResonantState& v);

}  // namespace wglab

#endif
