#pragma once

#include <string>
#include <string_view>

namespace itemsum {

/// Porter (1980) suffix-stripping stemmer, following the widely used
/// reference implementation (including its "bli" -> "ble" and "logi" ->
/// "log" rules). Expects a lowercase word; words of length <= 2 are returned
/// unchanged.
std::string porter_stem(std::string_view word);

}  // namespace itemsum
