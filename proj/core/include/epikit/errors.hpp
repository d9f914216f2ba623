#pragma once

#include <stdexcept>
#include <string>

namespace epikit {

// Invalid caller input: unknown type strings, rank out of range, malformed
// Kac vectors, precondition violations on points and root arguments.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A query outside the published tables (the tabulated small-characteristic
// G2 abelianisations cover two points only).
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Candidate enumeration over a support whose gradient cone is not trivial:
// the intertwining candidate set is infinite.
struct NonCompactError : std::runtime_error {
  explicit NonCompactError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace epikit
