#pragma once

#include <vector>

#include "radsense/common.hpp"
#include "radsense/numerology.hpp"

namespace radsense {

enum class GridRole { raw, clean_5g, reconstructed_5g, residual, radar_only, noise_only };

enum class SymbolKind { data, dmrs };

struct ComplexVectorSymbol {
    std::vector<cdouble> data; // length N
    int symbol_index = 0;
    SymbolKind kind = SymbolKind::data;
};

// One uplink slot: N active subcarriers x M OFDM symbols of linear complex
// amplitudes. Stored column-major (one symbol = one contiguous column),
// matching the on-disk layout.
class ResourceGrid {
public:
    ResourceGrid(NumerologyConfig config, GridRole role);

    int rows() const { return config_.active_subcarriers; }
    int cols() const { return config_.symbols_per_slot; }

    cdouble& at(int n, int m) { return data_[static_cast<std::size_t>(m) * rows() + n]; }
    const cdouble& at(int n, int m) const {
        return data_[static_cast<std::size_t>(m) * rows() + n];
    }

    cdouble* column(int m) { return data_.data() + static_cast<std::size_t>(m) * rows(); }
    const cdouble* column(int m) const {
        return data_.data() + static_cast<std::size_t>(m) * rows();
    }

    std::vector<cdouble>& raw_data() { return data_; }
    const std::vector<cdouble>& raw_data() const { return data_; }

    const NumerologyConfig& config() const { return config_; }
    GridRole role() const { return role_; }
    void set_role(GridRole r) { role_ = r; }

    bool all_finite() const;

private:
    NumerologyConfig config_;
    GridRole role_;
    std::vector<cdouble> data_;
};

ComplexVectorSymbol grid_column(const ResourceGrid& grid, int m);
void set_grid_column(ResourceGrid& grid, const ComplexVectorSymbol& col);

// 10*log10(|y|^2 + 1e-30), column-major like the grid.
std::vector<double> grid_power_db(const ResourceGrid& grid);

double grid_total_power(const ResourceGrid& grid);
double grid_mean_power(const ResourceGrid& grid);

} // namespace radsense
