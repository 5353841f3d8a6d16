#pragma once

#include <string_view>

namespace qbaker {

inline constexpr std::string_view kLibraryVersion = "1.0.0";

}  // namespace qbaker
