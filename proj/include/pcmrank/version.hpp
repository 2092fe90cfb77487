#pragma once

namespace pcmrank {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pcmrank
