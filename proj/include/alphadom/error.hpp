#ifndef ALPHADOM_ERROR_HPP_
#define ALPHADOM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace alphadom {

enum class Errc {
  InvalidEndpoint,
  SelfLoop,
  Disconnected,
  InfeasibleDensity,
  MalformedHeader,
  MalformedEdgeLine,
  OutOfRange,
  NoEnabledNode,
  BudgetExceeded,
  BadAlpha,
  BadArgument,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidEndpoint:   return "InvalidEndpoint";
    case Errc::SelfLoop:          return "SelfLoop";
    case Errc::Disconnected:      return "Disconnected";
    case Errc::InfeasibleDensity: return "InfeasibleDensity";
    case Errc::MalformedHeader:   return "MalformedHeader";
    case Errc::MalformedEdgeLine: return "MalformedEdgeLine";
    case Errc::OutOfRange:        return "OutOfRange";
    case Errc::NoEnabledNode:     return "NoEnabledNode";
    case Errc::BudgetExceeded:    return "BudgetExceeded";
    case Errc::BadAlpha:          return "BadAlpha";
    case Errc::BadArgument:       return "BadArgument";
    case Errc::IoError:           return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace alphadom

#endif  // ALPHADOM_ERROR_HPP_
