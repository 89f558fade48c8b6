#include "wdp/region.hpp"

#include <atomic>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "wdp/decider.hpp"

namespace wdp {

RegionGrid compute_region_grid(int resolution, int m_max, int n_threads) {
    if (resolution < 2) throw std::domain_error("region: resolution < 2");
    if (m_max < 1) throw std::domain_error("region: m_max < 1");
    RegionGrid grid{resolution, m_max,
                    std::vector<int>(
                        static_cast<std::size_t>(resolution) * resolution, 0)};

    // Upper-triangle cell list (i < j); diagonal stays 0.
    std::vector<std::pair<int, int>> cells;
    for (int j = 0; j < resolution; ++j) {
        for (int i = 0; i < j; ++i) cells.emplace_back(i, j);
    }

    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (n_threads < 1) n_threads = 1;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= cells.size()) break;
            const auto [i, j] = cells[k];
            const WeightPair w(grid.weight_of(i), grid.weight_of(j));
            const auto scheme = min_iterations_pair(w, m_max);
            const int value = scheme ? scheme->m : 0;
            grid.cells[static_cast<std::size_t>(j) * resolution + i] = value;
            grid.cells[static_cast<std::size_t>(i) * resolution + j] = value;
        }
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return grid;
}

void write_region_csv(const RegionGrid& grid, std::ostream& os) {
    os << "rho,rho_prime,min_m\n";
    char buf[64];
    for (int i = 0; i < grid.resolution; ++i) {
        for (int j = 0; j < grid.resolution; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%d\n",
                          grid.weight_of(i), grid.weight_of(j),
                          grid.at(i, j));
            os << buf;
        }
    }
}

void write_region_pgm(const RegionGrid& grid, std::ostream& os) {
    os << "P2\n" << grid.resolution << ' ' << grid.resolution << '\n'
       << grid.m_max << '\n';
    for (int j = grid.resolution - 1; j >= 0; --j) {
        for (int i = 0; i < grid.resolution; ++i) {
            const int v = grid.at(i, j);
            const int pixel = (v == 0) ? 0 : grid.m_max + 1 - v;
            os << pixel << (i + 1 < grid.resolution ? ' ' : '\n');
        }
    }
}

}  // namespace wdp
