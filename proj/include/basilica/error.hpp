#pragma once

#include <stdexcept>
#include <string>

namespace basilica {

// Error taxonomy. ValidationError is raised for bad caller input (CLI exit
// code 1); InternalError is raised when a structural guarantee breaks (CLI
// exit code 2) and indicates a bug rather than a bad input.
enum class errc {
  malformed_input,
  not_equivalent,
  diameter_has_no_parent,
  outside_source_arc,
  bad_index,
  empty_gap,
  completion_failed,
  size_mismatch,
  invalid_isomorphism,
  leaf_transport_failure,
  refinement_failure,
  disconnected,
  incidence_broken,
  cyclic_order_broken,
  precondition_diam,
  no_isomorphism,
  conjugacy_failure,
  io_failure,
};

const char* errc_name(errc c);

class ValidationError : public std::runtime_error {
public:
  ValidationError(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

class InternalError : public std::logic_error {
public:
  InternalError(errc c, const std::string& what)
      : std::logic_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

namespace detail {
inline void require(bool cond, errc c, const char* what) {
  if (!cond) throw ValidationError(c, what);
}
inline void ensure(bool cond, errc c, const char* what) {
  if (!cond) throw InternalError(c, what);
}
}  // namespace detail

}  // namespace basilica
