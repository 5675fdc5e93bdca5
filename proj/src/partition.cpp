#include <qgrass/partition.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qgrass
{

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw std::invalid_argument("partition parts must be nonnegative");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int rows) const
{
    if (length() > rows) {
        throw std::invalid_argument("partition " + str() + " has more than " + std::to_string(rows) + " rows");
    }
    std::vector<int> out = parts_;
    out.resize(static_cast<std::size_t>(rows), 0);
    return out;
}

bool Partition::contains(const Partition &other) const
{
    if (other.length() > length()) {
        return false;
    }
    for (int i = 0; i < other.length(); ++i) {
        if (other[i] > (*this)[i]) {
            return false;
        }
    }
    return true;
}

Partition Partition::rectangle(int rows, int cols)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(rows, 0)), std::max(cols, 0)));
}

std::string Partition::str() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        out += (i ? "," : "") + std::to_string(parts_[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::string cleaned;
    for (char ch : text) {
        if (ch != ' ') {
            cleaned.push_back(ch);
        }
    }
    if (cleaned.empty()) {
        return Partition();
    }
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        const auto comma = cleaned.find(',', pos);
        const auto end = comma == std::string::npos ? cleaned.size() : comma;
        int value = 0;
        const char *first = cleaned.data() + pos;
        const char *last = cleaned.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (first == last || ec != std::errc() || ptr != last) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition dual_partition(const Partition &mu, int r, int n)
{
    const int cols = n - r;
    if (r < 0 || cols < 0 || !mu.fits(r, cols)) {
        throw std::invalid_argument("partition " + mu.str() + " does not fit the " + std::to_string(r) + "x"
                                    + std::to_string(cols) + " rectangle");
    }
    std::vector<int> parts(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        parts[i] = cols - mu[r - 1 - i];
    }
    return Partition(std::move(parts));
}

namespace
{

void extend(std::vector<int> &prefix, int rows, int max_part, int remaining, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (static_cast<int>(prefix.size()) == rows) {
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        prefix.push_back(p);
        extend(prefix, rows, p, remaining - p, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int size, int rows)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    if (size >= 0) {
        extend(prefix, rows, size, size, out);
    }
    return out;
}

std::vector<Partition> partitions_in_rectangle(int rows, int cols)
{
    std::vector<Partition> out;
    for (int s = 0; s <= rows * cols; ++s) {
        for (auto &p : partitions_of(s, rows)) {
            if (p.fits(rows, cols)) {
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

} // namespace qgrass
