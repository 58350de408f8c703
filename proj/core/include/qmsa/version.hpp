#pragma once

namespace qmsa {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qmsa
