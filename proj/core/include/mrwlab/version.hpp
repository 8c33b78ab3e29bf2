#ifndef MRWLAB_VERSION_HPP
#define MRWLAB_VERSION_HPP

#define MRWLAB_VERSION "0.1.0"

namespace mrwlab {
inline const char* version() { return MRWLAB_VERSION; }
}  // namespace mrwlab

#endif  // MRWLAB_VERSION_HPP
