#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hakenlab/cover.hpp"
#include "hakenlab/euler.hpp"

namespace hakenlab {

using json = nlohmann::json;

/// Representation input file:
/// {"n": int, "field": {"sqrt": int|null},
///  "pairs": [{"a": [[s,s],[s,s]], "b": [[s,s],[s,s]]}, ...]}
/// with s the scalar text format.
struct RepFile {
    mpz_class field_sqrt = 0;  // 0 = rationals
    PairSystem pairs;
};

RepFile parse_rep_file(const json& j);
RepFile load_rep_file(const std::filesystem::path& path);

/// Link corpus file: one JSON array of records
/// {"name": str, "components": int, "linking": [[int]],
///  "seifert": [[int]]|null, "goeritz": [[int]]|null,
///  "chiF": int|null, "P": int|null, "kappa": int}.
std::vector<LinkRecord> parse_link_corpus(const json& j);
std::vector<LinkRecord> load_link_corpus(const std::filesystem::path& path);

json to_json(const AbelianGroupInv& inv);
json to_json(const Mat2& m);

/// Parses JSON text, converting syntax errors to ParseError with line/column.
json parse_json_text(const std::string& text, const std::string& what);
json load_json_file(const std::filesystem::path& path);

}  // namespace hakenlab
