#include "mobius/reference_tables.hpp"

namespace mobius::tables {

namespace {

// Bundled reference bound-state energies for the canonical configuration
// a = b = 1, V0 = 0.2, alpha = 0.2, q = 0.1, eta = 0.3; four field columns
// (zeta, tau0) in {(0,0), (0.2,0), (0,0.2), (0.2,0.2)}.  Values kept exactly
// as published, including the malformed 11-digit cell in table 1.
struct RowSpec {
    int table;
    double m;
    int n;
    double v00, v20, v02, v22; // columns keyed by (zeta, tau0) tenths
};

constexpr RowSpec kRows[] = {
    {1, 0, 0, 0.4140573410, 0.4179027610, 0.4638591595, 0.4179027610},
    {1, 0, 1, 0.4002780881, 0.4044674868, 0.4290782462, 0.4044674868},
    {1, 0, 2, 0.3274177382, 0.3316421869, 0.3316421869, 0.33164221869},
    {1, 0, 3, 0.2186552190, 0.2227726040, 0.2325659850, 0.2227726040},
    {1, -1, 0, 0.5097806661, 0.4754132366, 0.5625261810, 0.4754132366},
    {1, -1, 1, 0.5046881182, 0.4671794688, 0.5363338664, 0.4671794688},
    {1, -1, 2, 0.4332678480, 0.3951183852, 0.4553470018, 0.3951183852},
    {1, -1, 3, 0.3224585080, 0.2849070470, 0.3387106345, 0.2849070470},
    {1, 1, 0, 0.5097806661, 0.5516616974, 0.5625261810, 0.5516616974},
    {1, 1, 1, 0.5046881182, 0.5504113561, 0.5363338664, 0.5504113561},
    {1, 1, 2, 0.4332678480, 0.4799236060, 0.4553470018, 0.4799236060},
    {1, 1, 3, 0.3224585080, 0.3685592470, 0.3387106345, 0.3685592470},
    {2, 0, 0, -0.3359426590, -0.3400972390, -0.2861408405, -0.2901633745},
    {2, 0, 1, -0.3497219119, -0.3535325132, -0.3209217538, -0.3244871792},
    {2, 0, 2, -0.4225822618, -0.4263578131, -0.4029864378, -0.4064647625},
    {2, 0, 3, -0.5313447810, -0.5352273960, -0.5174340150, -0.5209693725},
    {2, -1, 0, -0.4402193339, -0.4025867634, -0.3874738190, -0.3508142471},
    {2, -1, 1, -0.4453118818, -0.4108205312, -0.4136661336, -0.3800163108},
    {2, -1, 2, -0.5167321520, -0.4828816148, -0.4946529982, -0.4614574695},
    {2, -1, 3, -0.6275414920, -0.5930929530, -0.6112893655, -0.5773899055},
    {2, 1, 0, -0.4402193339, -0.4863383026, -0.3874738190, -0.2901633745},
    {2, 1, 1, -0.4453118818, -0.4875886439, -0.4136661336, -0.3244871792},
    {2, 1, 2, -0.5167321520, -0.5580763940, -0.4946529982, -0.4064647625},
    {2, 1, 3, -0.6275414920, -0.6694407530, -0.6112893655, -0.5209693725},
};

std::vector<ReferenceCell> build_cells() {
    std::vector<ReferenceCell> cells;
    cells.reserve(96);
    for (const auto& r : kRows) {
        cells.push_back({r.table, r.m, r.n, 0.0, 0.0, r.v00});
        cells.push_back({r.table, r.m, r.n, 0.2, 0.0, r.v20});
        cells.push_back({r.table, r.m, r.n, 0.0, 0.2, r.v02});
        cells.push_back({r.table, r.m, r.n, 0.2, 0.2, r.v22});
    }
    return cells;
}

} // namespace

const std::vector<ReferenceCell>& reference_cells() {
    static const std::vector<ReferenceCell> cells = build_cells();
    return cells;
}

ModelParams reference_model(int table) {
    if (table != 1 && table != 2)
        throw DomainError("table", "must be 1 or 2");
    RawModel raw;
    raw.potential = {0.2, 1.0, 1.0, 0.1, 0.3, 0.2};
    raw.constants = PhysicalConstants::natural();
    raw.field.flux_model =
        table == 1 ? FluxModel::Linear : FluxModel::Exponential;
    return validate(raw);
}

} // namespace mobius::tables
