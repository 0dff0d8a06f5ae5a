#pragma once

#include <stdexcept>
#include <string>

namespace bei {

enum class errc {
  parse_error,     // malformed input text
  range_error,     // vertex index out of range / unsupported size
  duplicate_edge,
  self_loop,
  unsupported,     // valid format feature we deliberately do not handle
  cap_exceeded,    // enumeration candidate set larger than the configured cap
  not_a_path,      // block graph is not a path
  not_theta,       // graph is not a theta-with-whiskers
  not_cactus,
  not_bicyclic,
  unsupported_block,
  hypothesis_violated,  // pattern outside the predicted-cutset hypothesis
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::range_error: return "RangeError";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::self_loop: return "SelfLoop";
    case errc::unsupported: return "Unsupported";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_a_path: return "NotAPath";
    case errc::not_theta: return "NotTheta";
    case errc::not_cactus: return "NotCactus";
    case errc::not_bicyclic: return "NotBicyclic";
    case errc::unsupported_block: return "UnsupportedBlock";
    case errc::hypothesis_violated: return "HypothesisViolated";
  }
  return "?";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace bei
