#pragma once

namespace skewfit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace skewfit
