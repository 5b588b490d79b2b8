#pragma once

namespace spinsq {

inline constexpr const char* kVersion = "0.1.0";

// Unit conventions stamped into every output artifact.
inline constexpr const char* kEnergyUnit = "|c2'|";
inline constexpr const char* kTimeUnit = "hbar/|c2'|";

}  // namespace spinsq
