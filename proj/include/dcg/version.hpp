#pragma once

namespace dcg {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace dcg
