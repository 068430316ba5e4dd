#pragma once

#include <stdexcept>
#include <string>

namespace polyfree {

enum class Errc {
  MalformedInput,  // bad word, bad presentation, bad certificate, bad JSON
  Unsupported,     // request outside the supported families / sizes
  LimitExceeded,   // enumeration or search limit hit where a result is required
  Internal         // broken invariant; always a bug
};

class PfError : public std::runtime_error {
 public:
  PfError(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace polyfree
