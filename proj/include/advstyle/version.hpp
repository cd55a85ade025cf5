#pragma once

namespace advstyle {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace advstyle
