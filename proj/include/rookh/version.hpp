#pragma once

namespace rookh {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

}  // namespace rookh
