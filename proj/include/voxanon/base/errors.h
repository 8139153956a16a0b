// voxanon/base/errors.h

// Copyright 2026  The voxanon Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VOXANON_BASE_ERRORS_H_
#define VOXANON_BASE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace voxanon {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported or malformed file content (wrong WAV encoding, bad columns).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Unreadable, unwritable or truncated files.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed (root finder did not converge, filter blew up).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Caller passed arguments outside an operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Inputs are individually well-formed but mutually inconsistent
/// (missing score for a trial, speaker with too few segments).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration: weight profiles, key mismatches, unknown options.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A metric has no defined value for the given inputs.
class MetricUndefinedError : public Error {
 public:
  using Error::Error;
};

/// Text-file parse failure; the message carries file and line.
class ParseError : public FormatError {
 public:
  ParseError(const std::string &file, std::size_t line, const std::string &what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace voxanon

#endif  // VOXANON_BASE_ERRORS_H_
