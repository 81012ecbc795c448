#pragma once

namespace satlat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace satlat
