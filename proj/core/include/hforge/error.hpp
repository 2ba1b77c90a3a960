#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hforge {

enum class Errc {
  invalid_argument,
  group_axiom,
  not_closed,
  not_normal,
  not_abelian,
  group_mismatch,
  overflow,
  parse,
  precondition,
  pta_failure,
  support_failure,
  verification,
  internal,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace hforge
