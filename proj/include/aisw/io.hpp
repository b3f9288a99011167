#pragma once

#include <string>

namespace aisw {

// 12 significant digits, locale-independent (std::to_chars general format);
// the CSV column format.
std::string format_sig12(double value);

// Shortest representation that parses back to the same double; used by the
// key-value well record.
std::string format_shortest(double value);

}  // namespace aisw
