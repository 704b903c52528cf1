#pragma once

namespace c4free {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace c4free
