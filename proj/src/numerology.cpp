#include "radsense/numerology.hpp"

#include <algorithm>
#include <cmath>

namespace radsense {

bool NumerologyConfig::is_dmrs_symbol(int m) const {
    return std::find(dmrs_symbol_indices.begin(), dmrs_symbol_indices.end(), m) !=
           dmrs_symbol_indices.end();
}

int NumerologyConfig::freq_to_row(double freq_hz) const {
    const int n = static_cast<int>(std::lround(freq_hz / subcarrier_spacing_hz)) +
                  active_subcarriers / 2;
    return std::clamp(n, 0, active_subcarriers - 1);
}

void NumerologyConfig::validate() const {
    if (subcarrier_spacing_hz <= 0.0) throw ConfigError("subcarrier spacing must be positive");
    if (fft_size <= 0 || active_subcarriers <= 0 || symbols_per_slot <= 0)
        throw ConfigError("grid dimensions must be positive");
    if (active_subcarriers > fft_size)
        throw ConfigError("active subcarriers exceed FFT size");
    const double err = std::abs(symbol_duration_s() * subcarrier_spacing_hz - 1.0);
    if (err > 1e-12) throw ConfigError("symbol duration inconsistent with spacing");
    if (channel_bandwidth_hz() > 100e6 + subcarrier_spacing_hz)
        throw ConfigError("active bandwidth exceeds the 100 MHz channel");
    int prev = -1;
    for (int m : dmrs_symbol_indices) {
        if (m <= prev) throw ConfigError("DMRS indices must be strictly increasing");
        if (m < 0 || m >= symbols_per_slot) throw ConfigError("DMRS index out of slot");
        prev = m;
    }
}

} // namespace radsense
