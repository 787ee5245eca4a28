// Copyright 2026 The Scoreplay Authors
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

#ifndef SCOREPLAY_ERRORS_HPP_
#define SCOREPLAY_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scoreplay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed notation. offset() is the byte position where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A game was handed to an operation that is only defined on Tame_x or
// Tame_{-x} members.
class UniverseError : public Error {
 public:
  using Error::Error;
};

// A configured cap (state count, day number) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Invalid Pirates & Treasure board description.
class BoardError : public Error {
 public:
  BoardError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace scoreplay

#endif  // SCOREPLAY_ERRORS_HPP_
