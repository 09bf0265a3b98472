#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

#include "rookh/character_table.hpp"
#include "rookh/extension.hpp"
#include "rookh/monomial.hpp"
#include "rookh/schur.hpp"

namespace rookh {

// All reports and caches use insertion-ordered JSON so serialization is
// deterministic byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);            // [4,2,1]
Json to_json(const Permutation& w);          // one-line notation
Json to_json(const RookPlacement& r);        // [[i,j],...]
Json to_json(const Monomial& m);             // [[i,j,exponent],...]
Json to_json(const LatticeProfile& prof);    // {"xs":[...],"ys":[...]}
Json to_json(const DoublySchurVector& f);    // [{"lambda":..,"mu":..,"coeff":..},...]
Json to_json(const GradedDoublySchurSeries& s);  // [{"degree":d,"terms":[...]},...]

// Envelope for every CLI answer.
struct ReportDocument {
    std::string command;
    Json inputs;
    Json results;
    double timing_ms = 0;
};

Json to_json(const ReportDocument& report);

// Character table disk cache, one file per n. Rewriting an existing entry
// produces byte-identical content; unreadable or mismatched files are
// ignored by readers.
std::filesystem::path character_table_cache_path(int n, const std::filesystem::path& dir);
std::string render_character_table_cache(const CharacterTable& table);
std::optional<CharacterTable> read_character_table_cache(int n, const std::filesystem::path& dir);
void write_character_table_cache(const CharacterTable& table, const std::filesystem::path& dir);

// Read-through accessor: cache hit, else compute, store, and return. A
// corrupt cache file is replaced. Writers create a temporary file and
// rename it into place; a reader that loses the race recomputes.
CharacterTable character_table_cached(int n, const std::filesystem::path& dir);

}  // namespace rookh
