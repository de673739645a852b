// Error codes shared by the core library and the C API.
#pragma once

#include <stdexcept>
#include <string>

namespace jnp {

enum class Errc : int {
  ok = 0,
  degenerate_point,
  out_of_arc,
  empty_support,
  zero_polynomial,
  not_in_image,
  not_closed,
  not_homogeneous,
  not_in_l,
  bad_direction,
  direction_mismatch,
  not_companion,
  hypothesis_violated,
  non_divisible,
  bad_start,
  bad_params,
  edge_rejected,
  no_common_root,
  ratio_mismatch,
  hypothesis_unmet,
  not_anchored,
  not_divisible,
  power_root_failed,
  parse_error,
  bad_input,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace jnp
