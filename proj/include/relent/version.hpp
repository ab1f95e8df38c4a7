#pragma once

namespace relent {

inline constexpr const char* kToolVersion = "1.0.0";

} // namespace relent
