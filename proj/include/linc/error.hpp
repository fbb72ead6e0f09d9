#pragma once
#include <stdexcept>
#include <string>

namespace linc {

// Every failure in the library throws this type. Messages start with a
// stable tag (e.g. "DivisionByZero", "NonPrimitivePoly") followed by detail,
// so callers and tests can match on the tag without parsing the rest.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

}  // namespace linc
