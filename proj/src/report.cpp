#include "modd/report.hpp"

#include <algorithm>

#include "modd/peel_color.hpp"
#include "modd/rainbow.hpp"
#include "modd/recognition.hpp"

namespace modd {

namespace {

std::string cell(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "-";
}

}  // namespace

ReportRow evaluate_instance(const std::string& id, const Graph& g, int exact_cutoff,
                            std::uint64_t node_budget) {
    auto emb = recognize_mop(g);
    if (!emb) throw std::invalid_argument("not a MOP: " + emb.reason());

    ReportRow row;
    row.id = id;
    row.n = g.vertex_count();
    row.t = degree_two_vertices(g).size();
    row.bound_2n3 = 2 * row.n / 3;
    row.bound_nt2 = (row.n + row.t) / 2;
    row.bound_nmt = row.n - row.t;
    row.striped = is_striped(*emb, g);

    row.size_peel = peel_double_domination(g).set.size();
    if (row.n >= 4) {
        row.size_rainbow = rainbow_double_domination(g, *emb).set.size();
        row.size_degree = degree_set_double_domination(g).set.size();
        row.size_dispatch = dispatch_bound(g).set.size();
    }
    if (row.n <= exact_cutoff) {
        SolverReport solved = exact_gamma_x2(g, node_budget);
        if (solved.optimal) row.exact = solved.optimum;
    }
    validate_row(row);
    return row;
}

void validate_row(const ReportRow& row) {
    auto fail = [&](const std::string& why) {
        throw InvariantViolation("report row '" + row.id + "': " + why);
    };
    auto check_size = [&](const std::optional<int>& size, int bound, const char* name) {
        if (!size) return;
        if (*size > bound) fail(std::string(name) + " exceeds its bound");
        if (row.exact && *size < *row.exact) fail(std::string(name) + " beats the exact optimum");
    };
    check_size(row.size_peel, row.bound_2n3, "size_peel");
    check_size(row.size_rainbow, row.bound_nt2, "size_rainbow");
    check_size(row.size_degree, row.bound_nmt, "size_degree");
    check_size(row.size_dispatch, std::min(row.bound_nt2, row.bound_nmt), "size_dispatch");
    if (row.size_degree && *row.size_degree != row.bound_nmt)
        fail("size_degree != n - t");
}

std::string to_csv(const ReportRow& row) {
    std::string out = row.id;
    out += ',' + std::to_string(row.n);
    out += ',' + std::to_string(row.t);
    out += ',' + std::to_string(row.bound_2n3);
    out += ',' + std::to_string(row.bound_nt2);
    out += ',' + std::to_string(row.bound_nmt);
    out += ',' + cell(row.size_peel);
    out += ',' + cell(row.size_rainbow);
    out += ',' + cell(row.size_degree);
    out += ',' + cell(row.size_dispatch);
    out += ',' + cell(row.exact);
    out += ',' + std::to_string(row.striped ? 1 : 0);
    return out;
}

}  // namespace modd
