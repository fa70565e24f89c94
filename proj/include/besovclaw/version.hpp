#pragma once

namespace besovclaw {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaMajor = 1;
inline constexpr const char* kSchemaVersion = "1.0";

}  // namespace besovclaw
