#pragma once

namespace zsf {

inline constexpr int kAtomCacheVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace zsf
