#pragma once

namespace peakalg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace peakalg
