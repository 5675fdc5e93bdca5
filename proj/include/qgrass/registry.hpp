#pragma once

#include <string>
#include <vector>

namespace qgrass
{

enum class Novikov { none, single, vector };

/// Fixed variable layout shared by every polynomial built over it:
/// x_1..x_r, then hbar (optional), then q or q_1..q_r, then lambda_1..lambda_m.
struct VariableRegistry
{
    int r = 0;
    bool has_hbar = false;
    Novikov novikov = Novikov::none;
    int equivariant_count = 0;

    int size() const;

    int x(int i) const { return i; } // 0-based
    int hbar() const;
    int q() const;      // single Novikov variable
    int q(int i) const; // i-th Novikov variable, 0-based
    int lambda(int j) const;
    int novikov_count() const;

    bool is_x(int var) const { return var < r; }
    bool is_lambda(int var) const;

    std::vector<std::string> names() const;

    /// Same layout with the x-variables dropped: the coefficient ring of a
    /// Schur expansion.
    VariableRegistry without_x() const;

    bool operator==(const VariableRegistry &) const = default;

    static VariableRegistry xs(int r) { return {r, false, Novikov::none, 0}; }
    static VariableRegistry xs_hbar(int r) { return {r, true, Novikov::none, 0}; }
    static VariableRegistry novikov_only() { return {0, false, Novikov::single, 0}; }
    static VariableRegistry constants() { return {}; }
};

} // namespace qgrass
