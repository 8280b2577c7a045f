#pragma once

namespace susyent {

// Version string embedded in CSV metadata lines; bump on any change that
// alters output bytes.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace susyent
