#ifndef PERMUTA_REFERENCE_CELLS_HPP
#define PERMUTA_REFERENCE_CELLS_HPP

#include <string>
#include <vector>

namespace permuta::bench {

// One published fail-count cell, keyed by table of origin.
struct ReferenceCell {
    int table;
    std::string instance;
    std::string model;
    std::string heuristic;
    std::string goal;
    long fails;
};

const std::vector<ReferenceCell>& reference_cells();
const ReferenceCell* find_reference(const std::string& instance, const std::string& model,
                                    const std::string& heuristic, const std::string& goal);

}  // namespace permuta::bench

#endif
