#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Malformed graph input (edge list, graph6, family spec).
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A graph exceeds the configured vertex cap.
class cap_exceeded : public std::length_error {
public:
  cap_exceeded(int vertices, int cap)
      : std::length_error("graph has " + std::to_string(vertices) +
                          " vertices, above the vertex cap of " + std::to_string(cap) +
                          " (raise it with --cap or TORIC_BETTI_CAP)"),
        vertices_(vertices), cap_(cap) {}

  int vertices() const noexcept { return vertices_; }
  int cap() const noexcept { return cap_; }

private:
  int vertices_;
  int cap_;
};

/// A truncated series operation outside its domain (zero divisor, bad
/// constant term, coefficient beyond the truncation order).
class series_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace toric
