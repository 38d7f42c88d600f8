#pragma once

namespace egomap {

inline constexpr char kVersion[] = "0.1.0";

}  // namespace egomap
