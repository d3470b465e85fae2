#pragma once

namespace polardet {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "polardet/1";

// Bumped whenever any deterministic enumeration order changes; reports embed
// it so that shard plans and resume ranks are only reused across compatible
// builds.
inline constexpr int kEnumOrderVersion = 1;

}  // namespace polardet
