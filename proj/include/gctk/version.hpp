#pragma once

namespace gctk {
inline constexpr const char* kVersion = "0.1.0";
}
