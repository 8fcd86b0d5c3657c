// Copyright 2026 The ddskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DDSKIT_ERROR_HPP
#define DDSKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddskit {

enum class ErrorKind {
  invalid_argument,
  parse,
  limit_exceeded,
  internal,
};

// Base of every exception thrown by the library. The C API maps `kind()` onto
// its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline Error invalid_argument(const std::string& message) {
  return Error(ErrorKind::invalid_argument, message);
}

inline Error internal_error(const std::string& message) {
  return Error(ErrorKind::internal, message);
}

inline Error limit_exceeded(const std::string& message) {
  return Error(ErrorKind::limit_exceeded, message);
}

}  // namespace ddskit

#endif  // DDSKIT_ERROR_HPP
