#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <qgrass/json_io.hpp>

namespace qgrass
{

struct ReportItem
{
    std::string name;
    Json inputs;
    bool pass = false;
    bool error = false;
    std::string detail;
    double seconds = 0.0;
};

struct Report
{
    std::string suite;
    std::vector<ReportItem> items;

    /// "pass", "fail" or "error" (some item threw).
    std::string status() const;
    bool passed() const { return status() == "pass"; }
};

/// Optional restrictions of a suite's default sweep.
struct SuiteBounds
{
    std::optional<int> r;
    std::optional<int> n;
    std::optional<int> dmax;
    std::optional<int> nmax;
    int precision = 50;
};

class UnknownSuite : public std::invalid_argument
{
public:
    explicit UnknownSuite(const std::string &name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

const std::vector<std::string> &suite_names();

/// Runs a named sweep. Items are evaluated on QGRASS_THREADS workers (default
/// 1) but always reported in enumeration order.
Report verify_suite(const std::string &name, const SuiteBounds &bounds = {});

struct PendingItem
{
    std::string name;
    Json inputs;
    /// Returns (pass, detail).
    std::function<std::pair<bool, std::string>()> run;
};

/// Evaluates items in parallel with a deterministic result order.
Report run_items(const std::string &suite, std::vector<PendingItem> items);

/// Worker count from QGRASS_THREADS (>= 1).
unsigned thread_count();

Json to_json(const Report &report, bool timings = false);
std::string to_text(const Report &report, bool timings = false);

} // namespace qgrass
