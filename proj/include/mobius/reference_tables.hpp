#ifndef MOBIUS_REFERENCE_TABLES_HPP
#define MOBIUS_REFERENCE_TABLES_HPP

#include <vector>

#include "mobius/physmodel.hpp"

namespace mobius::tables {

/// One cell of the bundled reference energy tables: the published
/// bound-state value for the canonical parameter set (a = b = 1, V0 = 0.2,
/// alpha = 0.2, q = 0.1, eta = 0.3) at the given quantum numbers and field.
struct ReferenceCell {
    int table = 1;    // 1: linear flux, 2: exponential flux
    double m = 0.0;
    int n = 0;
    double zeta = 0.0;
    double tau0 = 0.0;
    double value = 0.0; // reference energy, published in eV
};

const std::vector<ReferenceCell>& reference_cells();

/// Canonical reference model (natural-units preset) for the given table.
ModelParams reference_model(int table);

} // namespace mobius::tables

#endif
