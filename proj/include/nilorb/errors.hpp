#ifndef NILORB_ERRORS_HPP
#define NILORB_ERRORS_HPP

#include <stdexcept>

namespace nilorb {

/// Caller handed in something outside an operation's contract.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The algebra or operator falls outside what this library handles
/// (degenerate Killing form, non-integer spectrum, ...).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical identity that must hold by construction failed; indicates a
/// construction bug rather than bad input.
struct property_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bundled or user-supplied data failed its integrity validation.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nilorb

#endif
