#pragma once

namespace qacc {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qacc
