#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tempex {

enum class Errc {
  invalid_vertex,
  self_loop,
  bad_snapshot_index,
  empty_interval,
  endpoint_mismatch,
  time_overlap,
  unreachable,
  not_always_connected,
  interval_too_short,
  x_too_small,
  bound_violated,
  horizon_exhausted,
  start_out_of_range,
  instance_too_large,
  bad_spec,
  parse_error,
  version_mismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, std::int64_t detail = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        detail_(detail) {}

  Errc code() const { return code_; }
  // context value: required horizon for horizon_exhausted, line number for
  // parse_error, and so on
  std::int64_t detail() const { return detail_; }

 private:
  Errc code_;
  std::int64_t detail_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg, std::int64_t detail = 0) {
  throw Error(code, msg, detail);
}

}  // namespace tempex
