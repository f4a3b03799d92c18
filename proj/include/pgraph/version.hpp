#pragma once

namespace pgraph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pgraph
