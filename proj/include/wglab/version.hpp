#ifndef WGLAB_VERSION_HPP
#define WGLAB_VERSION_HPP

namespace wglab {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
