#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qgrass
{

/// Weakly decreasing sequence of nonnegative parts; trailing zeros are dropped
/// so the representation is unique.
class Partition
{
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are weakly decreasing and >= 0.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const; // number of boxes |mu|
    bool empty() const { return parts_.empty(); }

    /// Part i (0-based); zero past the last row.
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    /// Parts padded with zeros to exactly `rows` entries.
    std::vector<int> padded(int rows) const;

    bool fits(int rows, int cols) const { return length() <= rows && (empty() || parts_[0] <= cols); }
    bool contains(const Partition &other) const;

    /// Rectangle rows x cols.
    static Partition rectangle(int rows, int cols);

    /// Comma list, "2,1"; the empty partition prints as "".
    std::string str() const;

    auto operator<=>(const Partition &) const = default;
    bool operator==(const Partition &) const = default;

private:
    std::vector<int> parts_;
};

/// Parses "2,1" (spaces allowed); "" and "0" give the empty partition.
Partition parse_partition(std::string_view text);

/// Complement in the r x (n-r) rectangle: dual_i = (n-r) - mu_{r+1-i}.
Partition dual_partition(const Partition &mu, int r, int n);

/// All partitions fitting the rows x cols rectangle, by size then reverse-lex.
std::vector<Partition> partitions_in_rectangle(int rows, int cols);

/// All partitions of `size` with at most `rows` rows.
std::vector<Partition> partitions_of(int size, int rows);

} // namespace qgrass
