#include "rookh/json_io.hpp"

#include <unistd.h>

#include <fstream>

#include "rookh/version.hpp"

namespace rookh {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Permutation& w) { return Json(w.images()); }

Json to_json(const RookPlacement& r) {
    Json out = Json::array();
    for (const Cell& c : r.cells()) out.push_back({c.i, c.j});
    return out;
}

Json to_json(const Monomial& m) {
    Json out = Json::array();
    for (const auto& [v, e] : m.factors()) out.push_back({v.i, v.j, e});
    return out;
}

Json to_json(const LatticeProfile& prof) {
    return Json{{"xs", prof.xs}, {"ys", prof.ys}};
}

namespace {

long long coefficient_as_integer(const mpq_class& c) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
        throw std::logic_error("to_json: expected small integer coefficient");
    return c.get_num().get_si();
}

}  // namespace

Json to_json(const DoublySchurVector& f) {
    Json out = Json::array();
    for (const auto& [key, c] : f.coefficients())
        out.push_back({{"lambda", to_json(key.first)},
                       {"mu", to_json(key.second)},
                       {"coeff", coefficient_as_integer(c)}});
    return out;
}

Json to_json(const GradedDoublySchurSeries& s) {
    Json out = Json::array();
    for (const auto& [d, layer] : s.layers())
        out.push_back({{"degree", d}, {"terms", to_json(layer)}});
    return out;
}

Json to_json(const ReportDocument& report) {
    return Json{{"format_version", kFormatVersion},
                {"engine_version", kEngineVersion},
                {"command", report.command},
                {"inputs", report.inputs},
                {"results", report.results},
                {"timing_ms", report.timing_ms}};
}

std::filesystem::path character_table_cache_path(int n, const std::filesystem::path& dir) {
    return dir / ("character_table_" + std::to_string(n) + ".json");
}

std::string render_character_table_cache(const CharacterTable& table) {
    Json partitions = Json::array();
    for (const Partition& p : table.partitions()) partitions.push_back(to_json(p));
    Json values = Json::array();
    const int classes = static_cast<int>(table.partitions().size());
    for (int l = 0; l < classes; ++l) {
        Json row = Json::array();
        for (int rho = 0; rho < classes; ++rho) row.push_back(table.value(l, rho));
        values.push_back(std::move(row));
    }
    Json sizes = Json::array();
    for (int rho = 0; rho < classes; ++rho) sizes.push_back(table.class_size(rho));
    Json doc{{"format_version", kFormatVersion},
             {"kind", "character_table"},
             {"n", table.n()},
             {"partitions", partitions},
             {"class_sizes", sizes},
             {"values", values}};
    return doc.dump(2) + "\n";
}

std::optional<CharacterTable> read_character_table_cache(int n,
                                                         const std::filesystem::path& dir) {
    std::ifstream in(character_table_cache_path(n, dir));
    if (!in) return std::nullopt;
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded()) return std::nullopt;
    try {
        if (doc.at("format_version") != kFormatVersion || doc.at("kind") != "character_table" ||
            doc.at("n") != n)
            return std::nullopt;
        std::vector<Partition> partitions;
        for (const auto& parts : doc.at("partitions"))
            partitions.push_back(Partition(parts.get<std::vector<int>>()));
        std::vector<long long> sizes = doc.at("class_sizes").get<std::vector<long long>>();
        std::vector<std::vector<long long>> values;
        for (const auto& row : doc.at("values"))
            values.push_back(row.get<std::vector<long long>>());
        return CharacterTable(n, std::move(partitions), std::move(values), std::move(sizes));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void write_character_table_cache(const CharacterTable& table, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto target = character_table_cache_path(table.n(), dir);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(static_cast<long long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << render_character_table_cache(table);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

CharacterTable character_table_cached(int n, const std::filesystem::path& dir) {
    if (auto cached = read_character_table_cache(n, dir)) return *std::move(cached);
    CharacterTable table = character_table(n);
    write_character_table_cache(table, dir);
    // A racing writer may have landed first; both render identically, so
    // re-reading is unnecessary.
    return table;
}

}  // namespace rookh
