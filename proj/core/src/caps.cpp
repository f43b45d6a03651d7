#include "qlwb/caps.hpp"
#include "qlwb/error.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace qlwb {

auto parse_caps(std::string_view text) -> std::map<std::string, int>
{
    std::map<std::string, int> out;
    std::stringstream in{std::string(text)};
    std::string item;
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos)
            continue;
        item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("QLWB_CAP: expected name=value, got '" + item + "'");
        auto value = item.substr(eq + 1);
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("QLWB_CAP: value for '" + item.substr(0, eq) + "' must be a non-negative integer");
        out[item.substr(0, eq)] = std::stoi(value);
    }
    return out;
}

auto cap(std::string_view name, int fallback) -> int
{
    const char * env = std::getenv("QLWB_CAP");
    if (! env)
        return fallback;
    auto caps = parse_caps(env);
    auto it = caps.find(std::string(name));
    return it == caps.end() ? fallback : it->second;
}

}
