#include "gls/system_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gls {

namespace {

DigitSystem from_json(const nlohmann::json& doc) {
    if (!doc.contains("digits") || !doc["digits"].is_array())
        throw std::invalid_argument("system config needs a \"digits\" array");
    std::vector<Rational> measures;
    std::vector<std::string> symbols;
    for (const auto& entry : doc["digits"]) {
        measures.push_back(parse_rational(entry.at("measure").get<std::string>()));
        if (entry.contains("symbol"))
            symbols.push_back(entry["symbol"].get<std::string>());
        else
            symbols.push_back(std::to_string(measures.size() - 1));
    }
    return DigitSystem(std::move(measures), std::move(symbols));
}

}  // namespace

DigitSystem load_system(std::istream& in) {
    nlohmann::json doc;
    in >> doc;
    return from_json(doc);
}

DigitSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open system config: " + path);
    return load_system(in);
}

DigitSystem parse_system(const std::string& json_text) {
    std::istringstream in(json_text);
    return load_system(in);
}

Word parse_word(const DigitSystem& sys, const std::string& text) {
    std::vector<std::string> tokens;
    if (sys.single_char_symbols() &&
        text.find_first_of(" \t,") == std::string::npos) {
        for (char c : text) tokens.emplace_back(1, c);
    } else {
        std::string token;
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == ',') {
                if (!token.empty()) tokens.push_back(std::exchange(token, {}));
            } else {
                token += c;
            }
        }
        if (!token.empty()) tokens.push_back(token);
    }

    Word w;
    for (const std::string& token : tokens) {
        bool found = false;
        for (int d = 0; d < sys.digit_count(); ++d) {
            if (sys.symbol(static_cast<Digit>(d)) == token) {
                w.push_back(static_cast<Digit>(d));
                found = true;
                break;
            }
        }
        if (!found) throw DigitOutOfRange("unknown symbol \"" + token + "\"");
    }
    return w;
}

std::string user_order_string(const DigitSystem& sys) {
    std::string out;
    for (int d = 0; d < sys.digit_count(); ++d) {
        if (d) out += ",";
        out += std::to_string(sys.user_position(static_cast<Digit>(d)));
    }
    return out;
}

std::string symbols_string(const DigitSystem& sys) {
    std::string out;
    for (int d = 0; d < sys.digit_count(); ++d) {
        if (d) out += ",";
        out += sys.symbol(static_cast<Digit>(d));
    }
    return out;
}

}  // namespace gls
