#ifndef JTYPE_ERROR_HPP
#define JTYPE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace jtype {

// Error categories shared by every module; the C API maps them 1:1 onto
// jt_status values.
enum class Errc {
  invalid_argument = 1,
  parse_error,
  division_by_zero,
  field_mismatch,
  variable_mismatch,
  inhomogeneous,
  characteristic,
  not_artinian,
  zero_form,
  out_of_range,
  incomparable,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace jtype

#endif
