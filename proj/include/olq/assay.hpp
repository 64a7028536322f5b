#pragma once

#include <cstdint>
#include <vector>

namespace olq {

// Ensemble CNOT/flushing protocol in a sparse lattice: repeated gate cycles
// on initially paired qubits, measuring the per-cycle loss of target-species
// atoms to estimate the gate error probability.
struct AssayConfig {
    std::int64_t n_pairs = 0;  // initial paired count N
    double true_error = 0.0;   // P
    double alpha = 0.0;        // fraction of errors losing the control but not the target
    int n_cycles = 2;
    std::uint64_t seed = 0;
    // Spurious flip probability for unpaired targets (they then survive the
    // next flush). Off by default.
    double flip_probability = 0.0;

    void validate() const;
};

struct CycleCounts {
    double paired = 0.0;
    double new_unpaired = 0.0;  // alpha-type errors of this cycle
    double target_total = 0.0;  // target-species qubits still in the lattice
};

struct AssayRecord {
    std::vector<CycleCounts> cycles;
};

// Deterministic means: paired_k = (1-P)^k N, new unpaired at cycle k
// = alpha P (1-P)^(k-1) N. Unpaired leftovers are removed by the next
// cycle's flush, so the target total is paired + newly unpaired.
AssayRecord expected_counts(const AssayConfig& config);

// Per-pair Bernoulli sampling of the same process; bit-identical for a fixed seed.
AssayRecord simulate(const AssayConfig& config);

// P-hat = 1 - total(cycle 2)/total(cycle 1). Needs at least two cycles and a
// nonzero first-cycle count.
double estimate_error(const AssayRecord& record);

}  // namespace olq
