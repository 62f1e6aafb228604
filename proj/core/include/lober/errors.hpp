#pragma once

#include <stdexcept>
#include <string>

namespace lober {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curve violates a ClosedCurve invariant (too few vertices, non-finite
/// coordinates).
class InvalidCurveError : public Error {
 public:
  using Error::Error;
};

/// Curve, segment or tangent with zero extent.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A crossing whose tangents are (numerically) parallel, or a collinear
/// overlap. The class method cannot handle these; the winding method can.
class TransversalityError : public Error {
 public:
  TransversalityError(const std::string& what, std::size_t seg_c1,
                      std::size_t seg_c2)
      : Error(what), seg_c1_(seg_c1), seg_c2_(seg_c2) {}

  std::size_t segment_c1() const noexcept { return seg_c1_; }
  std::size_t segment_c2() const noexcept { return seg_c2_; }

 private:
  std::size_t seg_c1_;
  std::size_t seg_c2_;
};

/// Intersection structure inconsistent with two simple closed curves
/// (odd crossing count, missing or ambiguous successor).
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Query point lies on the curve, so the interior indicator is undefined.
class OnBoundaryError : public Error {
 public:
  using Error::Error;
};

/// Malformed Tecplot header or data row.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded (e.g. densifier vertex count).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Vector field evaluated at one of its singular points.
class SingularityError : public Error {
 public:
  using Error::Error;
};

}  // namespace lober
