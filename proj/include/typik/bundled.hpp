#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace typik {

// Knowledge bases compiled into the library: ex1, ex2, ex3 and bob.
std::optional<std::string> bundled_fixture(std::string_view name);
std::vector<std::string> bundled_fixture_names();

}  // namespace typik
