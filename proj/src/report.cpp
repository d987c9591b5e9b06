#include "gls/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace gls {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void write_csv(std::ostream& out, const RunMeta& meta, const Table& table) {
    out << "# version: " << kVersion << "\n";
    out << "# command: " << meta.command << "\n";
    out << "# system: " << meta.system << "\n";
    if (!meta.symbols.empty()) out << "# symbols: " << meta.symbols << "\n";
    if (!meta.user_order.empty()) out << "# user_order: " << meta.user_order << "\n";
    out << "# seed: " << meta.seed << "\n";
    for (const auto& [key, value] : meta.params) out << "# " << key << ": " << value << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << csv_escape(table.columns[c]);
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(row[c]);
        out << "\n";
    }
}

void write_json(std::ostream& out, const RunMeta& meta, const Table& table) {
    nlohmann::ordered_json doc;
    doc["meta"] = {{"version", kVersion},
                   {"command", meta.command},
                   {"system", meta.system},
                   {"symbols", meta.symbols},
                   {"user_order", meta.user_order},
                   {"seed", meta.seed}};
    for (const auto& [key, value] : meta.params) doc["meta"][key] = value;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    out << doc.dump(2) << "\n";
}

}  // namespace gls
