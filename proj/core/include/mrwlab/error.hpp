#ifndef MRWLAB_ERROR_HPP
#define MRWLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mrwlab {

/// Library error carrying the originating module, so callers can emit
/// machine-parsable one-line diagnostics ("error: <module>: <message>").
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message)
      : std::runtime_error(message), module_(std::move(module)) {}

  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

}  // namespace mrwlab

#endif  // MRWLAB_ERROR_HPP
