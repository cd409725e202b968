#include "barcore/serialize.hpp"

#include <stdexcept>

namespace barcore {

namespace {

Json big_to_json(const BigInt& v) { return v.get_str(); }

BigInt big_from_json(const Json& j) {
    if (!j.is_string())
        throw std::invalid_argument("expected a decimal-string count");
    return BigInt(j.get<std::string>());
}

}  // namespace

Json partition_to_json(const BarPartition& p) {
    Json arr = Json::array();
    for (const std::int64_t part : p.parts()) arr.push_back(part);
    return arr;
}

BarPartition partition_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("expected a JSON array of parts");
    return BarPartition(j.get<std::vector<std::int64_t>>());
}

Json count_report_to_json(const CountReport& r) {
    Json j;
    j["s"] = r.s;
    j["t"] = r.t;
    j["total"] = big_to_json(r.total);
    j["even_closed_form"] = big_to_json(r.even_closed_form);
    j["even_via_paths"] = big_to_json(r.even_via_paths);
    j["even_brute_force"] = r.even_brute_force ? big_to_json(*r.even_brute_force) : Json();
    j["agreement"] = r.agreement;
    return j;
}

CountReport count_report_from_json(const Json& j) {
    CountReport r;
    r.s = j.at("s").get<std::int64_t>();
    r.t = j.at("t").get<std::int64_t>();
    r.total = big_from_json(j.at("total"));
    r.even_closed_form = big_from_json(j.at("even_closed_form"));
    r.even_via_paths = big_from_json(j.at("even_via_paths"));
    if (!j.at("even_brute_force").is_null())
        r.even_brute_force = big_from_json(j.at("even_brute_force"));
    r.agreement = j.at("agreement").get<bool>();
    return r;
}

Json conjecture_report_to_json(const ConjectureReport& r) {
    Json j;
    j["s"] = r.s;
    j["t"] = r.t;
    j["even_core_count"] = big_to_json(r.even_core_count);
    j["max_even_size"] = big_to_json(r.max_even_size);
    j["maximal_container"] =
        r.maximal_container ? partition_to_json(*r.maximal_container) : Json();
    j["container_is_even"] = r.container_is_even ? Json(*r.container_is_even) : Json();
    j["conjecture_holds"] = r.conjecture_holds;
    return j;
}

ConjectureReport conjecture_report_from_json(const Json& j) {
    ConjectureReport r;
    r.s = j.at("s").get<std::int64_t>();
    r.t = j.at("t").get<std::int64_t>();
    r.even_core_count = big_from_json(j.at("even_core_count"));
    r.max_even_size = big_from_json(j.at("max_even_size"));
    if (!j.at("maximal_container").is_null())
        r.maximal_container = partition_from_json(j.at("maximal_container"));
    if (!j.at("container_is_even").is_null())
        r.container_is_even = j.at("container_is_even").get<bool>();
    r.conjecture_holds = j.at("conjecture_holds").get<bool>();
    return r;
}

Json diagram_to_json(const YinYangDiagram& d) {
    Json j;
    j["s"] = d.s();
    j["t"] = d.t();
    j["m"] = d.m();
    j["n"] = d.n();
    j["a"] = d.a();
    j["b"] = d.b();
    Json cells = Json::array();
    for (std::int64_t y = d.m(); y >= 1; --y)
        for (std::int64_t x = 1; x <= d.n(); ++x)
            cells.push_back(Json::array({x, y, d.cell_value(x, y), d.is_yang(x, y)}));
    j["cells"] = std::move(cells);
    return j;
}

YinYangDiagram diagram_from_json(const Json& j) {
    const YinYangDiagram d(j.at("s").get<std::int64_t>(), j.at("t").get<std::int64_t>());
    if (j.at("m") != d.m() || j.at("n") != d.n() || j.at("a") != d.a() || j.at("b") != d.b())
        throw std::invalid_argument("diagram JSON: derived fields do not match s and t");
    if (diagram_to_json(d).at("cells") != j.at("cells"))
        throw std::invalid_argument("diagram JSON: recorded cells do not match s and t");
    return d;
}

}  // namespace barcore
