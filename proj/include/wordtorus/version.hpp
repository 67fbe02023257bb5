#pragma once

namespace wordtorus {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kJsonSchemaVersion = 1;

}  // namespace wordtorus
