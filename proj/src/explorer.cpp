#include "barcore/explorer.hpp"

#include <algorithm>
#include <string>

#include "barcore/yin_yang.hpp"

namespace barcore {

namespace {

YinYangDiagram budgeted_diagram(std::int64_t s, std::int64_t t, std::int64_t budget) {
    const YinYangDiagram d(s, t);
    if (d.total_paths() > budget)
        throw BudgetExceeded("(" + std::to_string(s) + "," + std::to_string(t) + ") has " +
                             d.total_paths().get_str() + " paths, over the budget of " +
                             std::to_string(budget));
    return d;
}

std::vector<BarPartition> sweep_cores(const YinYangDiagram& d, bool even_only) {
    const Parity base = path_parity(d, d.boundary_path());
    std::vector<BarPartition> cores;
    for_each_path(d.n(), d.m(), [&](const LatticePath& p) {
        if (even_only && path_parity(d, p) != base) return;
        cores.push_back(path_to_core(d, p));
    });
    std::sort(cores.begin(), cores.end(), size_lex_less);
    return cores;
}

}  // namespace

std::vector<BarPartition> all_st_cores(std::int64_t s, std::int64_t t, std::int64_t budget) {
    return sweep_cores(budgeted_diagram(s, t, budget), false);
}

std::vector<BarPartition> all_even_cores(std::int64_t s, std::int64_t t, std::int64_t budget) {
    return sweep_cores(budgeted_diagram(s, t, budget), true);
}

bool contains(const BarPartition& outer, const BarPartition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.parts().size(); ++i)
        if (outer.parts()[i] < inner.parts()[i]) return false;
    return true;
}

ConjectureReport find_maximal_container(std::int64_t s, std::int64_t t, std::int64_t budget) {
    const YinYangDiagram d = budgeted_diagram(s, t, budget);
    const std::vector<BarPartition> cores = sweep_cores(d, false);
    const std::vector<BarPartition> evens = sweep_cores(d, true);

    ConjectureReport report;
    report.s = s;
    report.t = t;
    report.even_core_count = static_cast<long>(evens.size());
    report.max_even_size = 0;
    for (const BarPartition& e : evens)
        if (BigInt(static_cast<long>(e.size())) > report.max_even_size)
            report.max_even_size = static_cast<long>(e.size());

    // Containing every even core is equivalent to containing their
    // componentwise-max profile, which cuts the search to one test per core.
    std::vector<std::int64_t> profile;
    for (const BarPartition& e : evens) {
        if (e.parts().size() > profile.size()) profile.resize(e.parts().size(), 0);
        for (std::size_t i = 0; i < e.parts().size(); ++i)
            profile[i] = std::max(profile[i], e.parts()[i]);
    }
    const BarPartition needed(profile);

    const BarPartition* best = nullptr;
    for (const BarPartition& core : cores) {
        if (!contains(core, needed)) continue;
        if (!best || core.size() < best->size() ||
            (core.size() == best->size() && core.parts() < best->parts()))
            best = &core;
    }

    report.conjecture_holds = best != nullptr;
    if (best) {
        report.maximal_container = *best;
        report.container_is_even = is_even_partition(*best);
    }
    return report;
}

}  // namespace barcore
