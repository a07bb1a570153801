#pragma once

#include <cstdint>

namespace decklab {

/// Shared knobs for exhaustive/randomized verification sweeps.
struct SweepConfig
{
    int workers = 1;
    std::uint64_t seed = 1;
    std::uint64_t samples = 10'000;
    /// Enumerate exhaustively when the candidate count is at most this.
    std::uint64_t exhaustive_cap = 1u << 20;
};

} // namespace decklab
