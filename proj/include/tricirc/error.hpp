#pragma once

#include <stdexcept>
#include <string>

namespace tricirc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A derived cover (or family constructor) produced a loop or parallel edge.
class NonSimpleCover : public Error {
 public:
  using Error::Error;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

class NotSemiregular : public Error {
 public:
  using Error::Error;
};

// A size or enumeration cap was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public Error {
 public:
  using Error::Error;
};

}  // namespace tricirc
