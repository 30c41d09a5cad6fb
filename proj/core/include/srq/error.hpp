#ifndef SRQ_ERROR_HPP
#define SRQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace srq {

enum class ErrorCode {
  ZeroDivision,
  RealPoint,
  DegenerateCenter,
  PoleOnSymmetrizationZeroSet,
  NonConvergence,
  SingularMatrix,
  DegenerateComposite,
  DegenerateSwap,
  NotHermitian,
  NotSp11,
  PoleAtPoint,
  OutsideBall,
  CoincidentPoints,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace srq

#endif  // SRQ_ERROR_HPP
