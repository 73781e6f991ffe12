#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

enum class Errc {
  invalid_argument = 1,
  non_composable,
  model_mismatch,
  not_a_bijection,
  not_transitive,
  index_out_of_range,
  precondition_violated,
  no_witness,
  base_mismatch,
  sum_mismatch,
  nonpositive_degree,
  overflow,
  parse_error,
  unknown_name,
  sort_mismatch,
  signature_mismatch,
  not_a_member,
  not_positive,
  image_escapes_target,
  inconsistent_diagram,
  no_joint_bound,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace cyclo
