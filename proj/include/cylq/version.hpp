#pragma once

namespace cylq {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace cylq
