#pragma once

#include <iosfwd>
#include <vector>

namespace wdp {

// Minimal-iteration map over an interior weight grid; cell value 0 means
// no scheme was found up to m_max.
struct RegionGrid {
    int resolution;
    int m_max;
    std::vector<int> cells;  // cells[j * resolution + i], i -> rho, j -> rho'

    int at(int i_rho, int j_rho_prime) const {
        return cells[static_cast<std::size_t>(j_rho_prime) * resolution +
                     i_rho];
    }
    double weight_of(int index) const {  // cell-center sample
        return (index + 0.5) / resolution;
    }
};

// Evaluates min_iterations_pair on cell centers (i+1/2)/res. The grid is
// symmetric under swap of the weights, so only the upper triangle is
// computed and mirrored; the diagonal is 0 by convention. n_threads <= 0
// picks the hardware concurrency.
RegionGrid compute_region_grid(int resolution, int m_max, int n_threads = 0);

// Header `rho,rho_prime,min_m`, 17-significant-digit weights, LF endings.
void write_region_csv(const RegionGrid& grid, std::ostream& os);

// Plain P2, maxval = m_max, rho rightward, rho' upward (top row = largest
// rho'). Smaller min_m maps lighter; 0 (none found) maps to black.
void write_region_pgm(const RegionGrid& grid, std::ostream& os);

}  // namespace wdp
