#ifndef SNN_VERSION_HPP
#define SNN_VERSION_HPP

namespace snn {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
