#include <atomic>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "barcore/bar_partition.hpp"
#include "barcore/counting.hpp"
#include "barcore/explorer.hpp"
#include "barcore/number_theory.hpp"
#include "barcore/serialize.hpp"
#include "barcore/yin_yang.hpp"

namespace {

using namespace barcore;

constexpr std::int64_t kRenderCellBudget = 1'000'000;

std::string join_parts(const BarPartition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

void print_kv(std::size_t key_width, const std::string& key, const std::string& value) {
    std::cout << key << std::string(key_width - key.size() + 2, ' ') << value << "\n";
}

// ---- count -----------------------------------------------------------------

int run_count(std::int64_t s, std::int64_t t, const std::string& format, bool oracle,
              std::int64_t oracle_max) {
    if (oracle) {
        const BigInt bound = YinYangDiagram(s, t).yin_sum();
        if (bound > oracle_max) {
            std::cerr << "count: brute-force oracle needs partitions up to size "
                      << bound.get_str() << ", over --oracle-max " << oracle_max << "\n";
            return 1;
        }
    }
    const CountReport report = make_count_report(s, t, oracle);
    const std::string brute =
        report.even_brute_force ? report.even_brute_force->get_str() : "";

    if (format == "json") {
        std::cout << count_report_to_json(report).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "s,t,total,even_closed_form,even_via_paths,even_brute_force,agreement\n"
                  << report.s << "," << report.t << "," << report.total.get_str() << ","
                  << report.even_closed_form.get_str() << ","
                  << report.even_via_paths.get_str() << "," << brute << ","
                  << (report.agreement ? "true" : "false") << "\n";
    } else {
        print_kv(16, "s", std::to_string(report.s));
        print_kv(16, "t", std::to_string(report.t));
        print_kv(16, "total", report.total.get_str());
        print_kv(16, "even_closed_form", report.even_closed_form.get_str());
        print_kv(16, "even_via_paths", report.even_via_paths.get_str());
        print_kv(16, "even_brute_force", brute.empty() ? "-" : brute);
        print_kv(16, "agreement", report.agreement ? "true" : "false");
    }
    return report.agreement ? 0 : 2;
}

// ---- diagram ---------------------------------------------------------------

int run_diagram(std::int64_t s, std::int64_t t, const std::string& format) {
    const YinYangDiagram d(s, t);
    if (d.m() * d.n() > kRenderCellBudget) {
        std::cerr << "diagram: " << d.m() << "x" << d.n()
                  << " grid is over the render budget of " << kRenderCellBudget
                  << " cells\n";
        return 1;
    }
    if (format == "json") {
        std::cout << diagram_to_json(d).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "x,y,value,yang\n";
        for (std::int64_t y = d.m(); y >= 1; --y)
            for (std::int64_t x = 1; x <= d.n(); ++x)
                std::cout << x << "," << y << "," << d.cell_value(x, y) << ","
                          << (d.is_yang(x, y) ? "true" : "false") << "\n";
    } else {
        std::cout << render_diagram_text(d);
    }
    return 0;
}

// ---- enumerate -------------------------------------------------------------

int run_enumerate(std::int64_t s, std::int64_t t, bool even_only, const std::string& format,
                  std::int64_t budget) {
    const std::vector<BarPartition> cores =
        even_only ? all_even_cores(s, t, budget) : all_st_cores(s, t, budget);
    if (format == "json") {
        Json arr = Json::array();
        for (const BarPartition& p : cores) arr.push_back(partition_to_json(p));
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "size,length,parts\n";
        for (const BarPartition& p : cores)
            std::cout << p.size() << "," << p.length() << "," << join_parts(p) << "\n";
    } else {
        for (const BarPartition& p : cores) std::cout << p.to_string() << "\n";
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct PairCheck {
    std::int64_t s = 0, t = 0;
    std::string total, even;
    bool paths_ok = false, sym_ok = false, jacobi_ok = false;
    int oracle = -1;  // -1 skipped, 0 failed, 1 passed

    bool failed() const { return !paths_ok || !sym_ok || !jacobi_ok || oracle == 0; }
};

PairCheck check_pair(std::int64_t s, std::int64_t t, std::int64_t oracle_max) {
    PairCheck r;
    r.s = s;
    r.t = t;
    const BigInt total = count_all_cores(s, t);
    const BigInt even = count_even_cores(s, t);
    r.total = total.get_str();
    r.even = even.get_str();
    r.paths_ok = count_even_cores_via_paths(s, t) == even;
    r.sym_ok = count_even_cores(t, s) == even;

    const int reciprocity = ((s - 1) / 2 % 2) * ((t - 1) / 2 % 2) % 2 ? -1 : 1;
    r.jacobi_ok = jacobi_floor_sum(s, t) == jacobi_symbol(s, t) &&
                  jacobi_symbol(s, t) * jacobi_symbol(t, s) == reciprocity;

    const YinYangDiagram d(s, t);
    if (oracle_max > 0 && d.yin_sum() <= oracle_max) {
        const auto cores = brute_force_st_cores(s, t, d.yin_sum().get_si());
        BigInt brute_even = 0;
        for (const BarPartition& p : cores)
            if (is_even_partition(p)) ++brute_even;
        r.oracle = BigInt(static_cast<long>(cores.size())) == total && brute_even == even;
    }
    return r;
}

int run_verify(std::int64_t max, std::int64_t oracle_max, int threads,
               const std::string& format) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t s = 3; s <= max; s += 2)
        for (std::int64_t t = s + 2; t <= max; t += 2)
            if (std::gcd(s, t) == 1) pairs.emplace_back(s, t);

    std::vector<PairCheck> results(pairs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1))
            results[i] = check_pair(pairs[i].first, pairs[i].second, oracle_max);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    std::size_t failed = 0;
    for (const PairCheck& r : results) failed += r.failed();
    const auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    const auto oracle_mark = [](int o) { return o < 0 ? "skip" : o ? "ok" : "FAIL"; };

    if (format == "json") {
        Json out;
        out["checked"] = results.size();
        out["failed"] = failed;
        Json rows = Json::array();
        for (const PairCheck& r : results) {
            Json row;
            row["s"] = r.s;
            row["t"] = r.t;
            row["total"] = r.total;
            row["even"] = r.even;
            row["paths"] = r.paths_ok;
            row["sym"] = r.sym_ok;
            row["jacobi"] = r.jacobi_ok;
            row["oracle"] = r.oracle < 0 ? Json() : Json(r.oracle == 1);
            rows.push_back(std::move(row));
        }
        out["pairs"] = std::move(rows);
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "s,t,total,even,paths,sym,jacobi,oracle\n";
        for (const PairCheck& r : results)
            std::cout << r.s << "," << r.t << "," << r.total << "," << r.even << ","
                      << mark(r.paths_ok) << "," << mark(r.sym_ok) << ","
                      << mark(r.jacobi_ok) << "," << oracle_mark(r.oracle) << "\n";
        std::cerr << "checked=" << results.size() << " failed=" << failed << "\n";
    } else {
        for (const PairCheck& r : results)
            std::cout << "s=" << r.s << " t=" << r.t << " total=" << r.total
                      << " even=" << r.even << " paths=" << mark(r.paths_ok)
                      << " sym=" << mark(r.sym_ok) << " jacobi=" << mark(r.jacobi_ok)
                      << " oracle=" << oracle_mark(r.oracle) << "\n";
        std::cout << "summary checked=" << results.size() << " failed=" << failed << "\n";
    }
    return failed ? 2 : 0;
}

// ---- explore ---------------------------------------------------------------

int run_explore(std::int64_t s, std::int64_t t, const std::string& format,
                std::int64_t budget) {
    const ConjectureReport report = find_maximal_container(s, t, budget);
    const std::string container =
        report.maximal_container ? report.maximal_container->to_string() : "-";
    const std::string container_even =
        report.container_is_even ? (*report.container_is_even ? "true" : "false") : "-";

    if (format == "json") {
        std::cout << conjecture_report_to_json(report).dump() << "\n";
    } else if (format == "csv") {
        std::cout
            << "s,t,even_core_count,max_even_size,maximal_container,container_is_even,"
               "conjecture_holds\n"
            << report.s << "," << report.t << "," << report.even_core_count.get_str() << ","
            << report.max_even_size.get_str() << ","
            << (report.maximal_container ? join_parts(*report.maximal_container) : "-") << ","
            << (report.container_is_even ? container_even : "-") << ","
            << (report.conjecture_holds ? "true" : "false") << "\n";
    } else {
        print_kv(17, "s", std::to_string(report.s));
        print_kv(17, "t", std::to_string(report.t));
        print_kv(17, "even_core_count", report.even_core_count.get_str());
        print_kv(17, "max_even_size", report.max_even_size.get_str());
        print_kv(17, "maximal_container", container);
        print_kv(17, "container_is_even", container_even);
        print_kv(17, "conjecture_holds", report.conjecture_holds ? "true" : "false");
    }
    return report.conjecture_holds ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yin-Yang diagrams, the path/core bijection, and exact even-core counts"};
    app.require_subcommand(1);

    std::int64_t s = 0, t = 0, max = 0;
    std::int64_t oracle_max_count = 64, oracle_max_verify = 0;
    std::int64_t budget = kDefaultPathBudget;
    int threads = 1;
    bool oracle = false, even_only = false;
    std::string format = "table";
    const auto format_check = CLI::IsMember({"table", "json", "csv"});

    CLI::App* count = app.add_subcommand("count", "Count cores three independent ways");
    count->add_option("--s", s, "first odd modulus")->required();
    count->add_option("--t", t, "second odd modulus")->required();
    count->add_option("--format", format, "table, json, or csv")->check(format_check);
    count->add_flag("--oracle", oracle, "also run the brute-force partition oracle");
    count->add_option("--oracle-max", oracle_max_count,
                      "largest partition size the oracle may scan (default 64)");

    CLI::App* diagram = app.add_subcommand("diagram", "Render the Yin-Yang diagram");
    diagram->add_option("--s", s, "first odd modulus")->required();
    diagram->add_option("--t", t, "second odd modulus")->required();
    diagram->add_option("--format", format, "table, json, or csv")->check(format_check);

    CLI::App* enumerate = app.add_subcommand("enumerate", "List cores via the path bijection");
    enumerate->add_option("--s", s, "first odd modulus")->required();
    enumerate->add_option("--t", t, "second odd modulus")->required();
    enumerate->add_option("--format", format, "table, json, or csv")->check(format_check);
    enumerate->add_flag("--even-only", even_only, "only the even cores");
    enumerate->add_option("--budget", budget, "largest path count to enumerate");

    CLI::App* verify = app.add_subcommand("verify", "Sweep identities over coprime odd pairs");
    verify->add_option("--max", max, "largest modulus in the sweep")->required();
    verify->add_option("--oracle-max", oracle_max_verify,
                       "run the partition oracle on pairs with Yin sum up to this (0 = off)");
    verify->add_option("--threads", threads, "worker threads (output order is fixed)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "table, json, or csv")->check(format_check);

    CLI::App* explore = app.add_subcommand("explore", "Search for a core containing all even cores");
    explore->add_option("--s", s, "first odd modulus")->required();
    explore->add_option("--t", t, "second odd modulus")->required();
    explore->add_option("--format", format, "table, json, or csv")->check(format_check);
    explore->add_option("--budget", budget, "largest path count to enumerate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (count->parsed()) return run_count(s, t, format, oracle, oracle_max_count);
        if (diagram->parsed()) return run_diagram(s, t, format);
        if (enumerate->parsed()) return run_enumerate(s, t, even_only, format, budget);
        if (verify->parsed()) return run_verify(max, oracle_max_verify, threads, format);
        if (explore->parsed()) return run_explore(s, t, format, budget);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
