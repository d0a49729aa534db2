#pragma once

#include <vector>

#include "radsense/common.hpp"

namespace radsense {

// 5G NR numerology-1 uplink slot geometry. Symbol indices are zero-based
// everywhere, so the type-1 DMRS positions are {2, 7, 11}.
struct NumerologyConfig {
    double subcarrier_spacing_hz = 30e3;
    int fft_size = 4096;
    int active_subcarriers = 3276;
    int symbols_per_slot = 14;
    double slot_duration_s = 0.5e-3;
    std::vector<int> dmrs_symbol_indices = {2, 7, 11};
    double sample_rate_hz = 122.88e6;

    double symbol_duration_s() const { return 1.0 / subcarrier_spacing_hz; }

    // Contiguous span covered by the CP-free symbol windows; shorter than
    // slot_duration_s and the region where pulse placement is meaningful.
    double symbol_span_s() const { return symbols_per_slot * symbol_duration_s(); }

    double channel_bandwidth_hz() const { return active_subcarriers * subcarrier_spacing_hz; }

    bool is_dmrs_symbol(int m) const;

    // Row n <-> baseband frequency (n - N/2) * subcarrier_spacing.
    double row_freq_hz(int n) const {
        return (n - active_subcarriers / 2) * subcarrier_spacing_hz;
    }
    int freq_to_row(double freq_hz) const;

    void validate() const; // throws ConfigError
};

} // namespace radsense
