#pragma once

#include <map>
#include <string>
#include <string_view>

namespace qlwb {

/// "states=30,fact=9" -> {{"states",30},{"fact",9}}. Throws InputError.
auto parse_caps(std::string_view text) -> std::map<std::string, int>;

/// Value of `name` in the QLWB_CAP environment variable, else `fallback`.
auto cap(std::string_view name, int fallback) -> int;

}
