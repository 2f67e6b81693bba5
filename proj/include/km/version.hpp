#pragma once

#include <string_view>

namespace km {

inline constexpr std::string_view kToolName = "km";
inline constexpr std::string_view kVersion = "0.1.0";

// Bumped whenever SVG styling or layout changes; emitted in rendered documents.
inline constexpr std::string_view kSvgStyleVersion = "km-svg/1";

}  // namespace km
