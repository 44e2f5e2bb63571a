// Error taxonomy shared by all modules. The CLI maps these to exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace divstab {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction-time violations: dimension mismatches, malformed values.
class dimension_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

// Preconditions stated by an operation (dim bound, integrality, ...).
class precondition_error : public error {
 public:
  using error::error;
};

class unbounded_error : public error {
 public:
  using error::error;
};

class zero_volume_error : public error {
 public:
  using error::error;
};

class invalid_interval_error : public error {
 public:
  using error::error;
};

class not_fano_error : public error {
 public:
  using error::error;
};

class invalid_sequence_error : public error {
 public:
  using error::error;
};

class out_of_range_error : public error {
 public:
  using error::error;
};

class constraint_error : public error {
 public:
  using error::error;
};

class fit_error : public error {
 public:
  fit_error(const std::string& what, long long suggested_step)
      : error(what), suggested_step_(suggested_step) {}
  long long suggested_step() const { return suggested_step_; }

 private:
  long long suggested_step_;
};

}  // namespace divstab
