// Copyright 2026 ftcomp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTCOMP_ERRORS_HPP_
#define FTCOMP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftcomp
{

/// Base class of every error thrown by this library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A 3x3 matrix failed the orthonormality or determinant checks for SO(3).
class NotARotation : public Error
{
public:
  using Error::Error;
};

/// The innovation matrix of a recursive update is numerically singular.
class SingularInnovation : public Error
{
public:
  using Error::Error;
};

/// A stacked measurement matrix has column rank below the parameter count.
class RankDeficient : public Error
{
public:
  using Error::Error;
};

/// A sample stream delivered non-increasing timestamps.
class NonMonotonicTime : public Error
{
public:
  using Error::Error;
};

/// A contact event lies outside the trajectory it was scheduled on.
class EventOutOfRange : public Error
{
public:
  using Error::Error;
};

/// An operation that needs at least one element received none.
class EmptyInput : public Error
{
public:
  using Error::Error;
};

/// A scenario name did not match any preset.
class UnknownScenario : public Error
{
public:
  using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public Error
{
public:
  using Error::Error;
};

/// Malformed input file. The message always names the offending line.
class ParseError : public Error
{
public:
  using Error::Error;
  ParseError(std::size_t line, const std::string & what)
  : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const {return line_;}

private:
  std::size_t line_ = 0;
};

}  // namespace ftcomp

#endif  // FTCOMP_ERRORS_HPP_
