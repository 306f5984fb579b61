#pragma once

#include <string_view>

namespace shbeat {

inline constexpr std::string_view project_name = "shbeat";
inline constexpr std::string_view project_version = "0.1.0";

/// "shbeat 0.1.0" — written into provenance headers of emitted files.
inline constexpr std::string_view version_banner = "shbeat 0.1.0";

} // namespace shbeat
