#pragma once

namespace xent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace xent
