// Deterministic CSV / JSON report emission. Every run carries a metadata
// header (system, seed, version, parameters) so outputs are reproducible
// byte for byte for identical inputs.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gls {

inline constexpr const char* kVersion = "0.1.0";

struct RunMeta {
    std::string command;
    std::string system;  // sorted measures, "1/2,1/4,1/4"
    std::string symbols;
    std::string user_order;  // permutation internal index -> user position
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string format_double(double v);

void write_csv(std::ostream& out, const RunMeta& meta, const Table& table);
void write_json(std::ostream& out, const RunMeta& meta, const Table& table);

}  // namespace gls
