#pragma once

#include <string_view>

namespace spechtvar {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace spechtvar
