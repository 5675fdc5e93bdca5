#pragma once

#include <qgrass/partition.hpp>

namespace qgrass
{

struct RimHookOutcome
{
    enum class Kind { no_rim, illegal_rim, hook };

    Kind kind = Kind::no_rim;
    Partition remainder; // hook only
    int height = 0;      // hook only: number of rows the hook occupies

    bool operator==(const RimHookOutcome &) const = default;
};

/// Walks n boxes along the rim starting at the end of `start_row` (1-based),
/// moving down when the box below is in the diagram and left otherwise.
/// Throws std::invalid_argument for an empty rho, n < 1 or an empty start row.
RimHookOutcome remove_n_rim(const Partition &rho, int n, int start_row);

} // namespace qgrass
