#ifndef SLP_VERSION_HPP
#define SLP_VERSION_HPP

namespace slp {

inline constexpr const char* kVersion = "1.0.0";

}

#endif
