// version.hpp

#pragma once

namespace dkmax {

inline constexpr const char* kToolVersion = "dkmax 1.0.0";

}  // namespace dkmax
