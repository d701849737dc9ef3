#pragma once

#include <string>
#include <string_view>

namespace jstyle {

/// SHA-256 of the input, lowercase hex.
std::string sha256Hex(std::string_view data);

}  // namespace jstyle
