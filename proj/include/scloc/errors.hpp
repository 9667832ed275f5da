#pragma once

#include <stdexcept>
#include <string>

namespace scloc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadShape : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct NonPositiveDepth : Error {
  using Error::Error;
};
struct TooFewPoints : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NoValidPixels : Error {
  using Error::Error;
};
struct InvalidMode : Error {
  using Error::Error;
};
struct MissingCache : Error {
  using Error::Error;
};
struct Degenerate : Error {
  using Error::Error;
};
struct NoRealSolution : Error {
  using Error::Error;
};
struct TooFewInliers : Error {
  using Error::Error;
};
struct AllHypothesesFailed : Error {
  using Error::Error;
};
struct EmptyView : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace scloc
