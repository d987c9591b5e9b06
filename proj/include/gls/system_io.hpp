// JSON digit-system configs:
//   {"digits": [{"symbol": "0", "measure": "1/10"}, ...]}
// The file order is the user order; the constructor's measure sort is
// recorded in report metadata.

#pragma once

#include <istream>
#include <string>

#include "gls/fibred_system.hpp"

namespace gls {

DigitSystem load_system(std::istream& in);
DigitSystem load_system_file(const std::string& path);
DigitSystem parse_system(const std::string& json_text);

// Parses user-facing symbols into an internal-index word. Single-character
// symbol systems accept contiguous text; otherwise symbols are separated by
// whitespace or commas.
Word parse_word(const DigitSystem& sys, const std::string& text);

std::string user_order_string(const DigitSystem& sys);
std::string symbols_string(const DigitSystem& sys);

}  // namespace gls
