#pragma once

namespace qkm {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qkm
