#include <qgrass/rim_hook.hpp>

#include <stdexcept>

namespace qgrass
{

RimHookOutcome remove_n_rim(const Partition &rho, int n, int start_row)
{
    if (rho.empty() || n < 1) {
        throw std::invalid_argument("rim walk needs a nonempty partition and n >= 1");
    }
    if (start_row < 1 || start_row > rho.length()) {
        throw std::invalid_argument("start row " + std::to_string(start_row) + " is not a nonempty row of "
                                    + rho.str());
    }
    int row = start_row - 1; // 0-based
    int col = rho[row];      // 1-based column of the current box
    for (int count = 1; count < n; ++count) {
        if (rho[row + 1] >= col) {
            ++row;
        } else if (col > 1) {
            --col;
        } else {
            return {RimHookOutcome::Kind::no_rim, {}, 0};
        }
    }
    // On the rim rho[row + 1] <= col, so equality means the walk stopped right
    // above the last box of the next row.
    if (rho[row + 1] == col) {
        return {RimHookOutcome::Kind::illegal_rim, {}, 0};
    }
    std::vector<int> parts = rho.parts();
    for (int i = start_row - 1; i < row; ++i) {
        parts[i] = rho[i + 1] - 1;
    }
    parts[row] = col - 1;
    return {RimHookOutcome::Kind::hook, Partition(std::move(parts)), row - (start_row - 1) + 1};
}

} // namespace qgrass
