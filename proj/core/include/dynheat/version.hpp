#pragma once

namespace dynheat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dynheat
