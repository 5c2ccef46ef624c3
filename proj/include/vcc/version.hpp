#pragma once

namespace vcc {

inline constexpr const char* kVersion = "0.1.0";

}
