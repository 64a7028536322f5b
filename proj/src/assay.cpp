#include "olq/assay.hpp"

#include <cmath>
#include <stdexcept>

#include "olq/random.hpp"

namespace olq {

void AssayConfig::validate() const {
    if (n_pairs < 1) throw std::invalid_argument("assay: n_pairs must be >= 1");
    if (true_error < 0.0 || true_error > 1.0) {
        throw std::invalid_argument("assay: true_error must lie in [0, 1]");
    }
    if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("assay: alpha must lie in [0, 1]");
    }
    if (flip_probability < 0.0 || flip_probability > 1.0) {
        throw std::invalid_argument("assay: flip_probability must lie in [0, 1]");
    }
    if (n_cycles < 1) throw std::invalid_argument("assay: n_cycles must be >= 1");
}

AssayRecord expected_counts(const AssayConfig& config) {
    config.validate();
    const double n = static_cast<double>(config.n_pairs);
    const double p = config.true_error;

    AssayRecord record;
    record.cycles.reserve(config.n_cycles);
    double paired = n;
    double lingering = 0.0;  // flipped unpaired survivors from earlier cycles
    for (int cycle = 1; cycle <= config.n_cycles; ++cycle) {
        const double new_unpaired = config.alpha * p * paired;
        paired *= (1.0 - p);
        // previous cycle's unpaired pool was flushed, except for spurious flips
        lingering *= config.flip_probability;
        CycleCounts counts;
        counts.paired = paired;
        counts.new_unpaired = new_unpaired;
        counts.target_total = paired + new_unpaired + lingering;
        record.cycles.push_back(counts);
        lingering += new_unpaired;
    }
    return record;
}

AssayRecord simulate(const AssayConfig& config) {
    config.validate();
    Rng rng(config.seed);
    const double p = config.true_error;

    AssayRecord record;
    record.cycles.reserve(config.n_cycles);
    std::int64_t paired = config.n_pairs;
    std::int64_t lingering = 0;
    for (int cycle = 1; cycle <= config.n_cycles; ++cycle) {
        std::int64_t survivors = 0;
        std::int64_t new_unpaired = 0;
        for (std::int64_t i = 0; i < paired; ++i) {
            if (!rng.bernoulli(p)) {
                ++survivors;  // gate succeeded, pair intact
            } else if (rng.bernoulli(config.alpha)) {
                ++new_unpaired;  // control lost, target survives unpaired
            }
            // otherwise both lost or wrong state: target flushed
        }
        std::int64_t lingering_next = 0;
        for (std::int64_t i = 0; i < lingering; ++i) {
            if (rng.bernoulli(config.flip_probability)) ++lingering_next;
        }
        paired = survivors;
        lingering = lingering_next;

        CycleCounts counts;
        counts.paired = static_cast<double>(paired);
        counts.new_unpaired = static_cast<double>(new_unpaired);
        counts.target_total = static_cast<double>(paired + new_unpaired + lingering);
        record.cycles.push_back(counts);
        lingering += new_unpaired;
    }
    return record;
}

double estimate_error(const AssayRecord& record) {
    if (record.cycles.size() < 2) {
        throw std::invalid_argument("estimate_error: record needs at least two cycles");
    }
    const double first = record.cycles[0].target_total;
    const double second = record.cycles[1].target_total;
    if (first <= 0.0) {
        throw std::domain_error("estimate_error: no target qubits left after cycle 1");
    }
    return 1.0 - second / first;
}

}  // namespace olq
