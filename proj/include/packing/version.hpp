#pragma once

namespace packing {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace packing
