#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "modd/exact.hpp"
#include "modd/graph.hpp"

namespace modd {

// One benchmark line: the three proven bounds next to what each method
// actually produced. Missing entries (method precondition not met, exact
// skipped or out of budget) print as "-".
struct ReportRow {
    std::string id;
    int n = 0;
    int t = 0;
    int bound_2n3 = 0;  // floor(2n/3)
    int bound_nt2 = 0;  // floor((n+t)/2)
    int bound_nmt = 0;  // n - t
    std::optional<int> size_peel;
    std::optional<int> size_rainbow;
    std::optional<int> size_degree;
    std::optional<int> size_dispatch;
    std::optional<int> exact;
    bool striped = false;
};

inline constexpr std::string_view kReportCsvHeader =
    "id,n,t,bound_2n3,bound_nt2,bound_nmt,size_peel,size_rainbow,size_degree,"
    "size_dispatch,exact,striped";

// Runs every applicable method on a maximal outerplanar graph. The exact
// column is filled only when n <= exact_cutoff and the solver finishes
// within the budget. Throws std::invalid_argument when g is not a MOP.
ReportRow evaluate_instance(const std::string& id, const Graph& g, int exact_cutoff,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// Throws InvariantViolation when the row breaks an ordering guarantee:
// exact must not exceed any method size, and no method size may exceed
// its bound column.
void validate_row(const ReportRow& row);

std::string to_csv(const ReportRow& row);

}  // namespace modd
