#pragma once

#include <stdexcept>
#include <string>

namespace lrvp {

/// Input data (samples, snapshots) that cannot be used, e.g. non-finite values.
class invalid_input : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A time integration produced non-finite values.
class blowup_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent run configuration.
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace lrvp
