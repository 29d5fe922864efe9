/*
 * Copyright 2026 The gsa Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GSA_ERRORS_HPP_
#define GSA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gsa {

// Parameter combinations for which no construction exists (S <= K-U).
class UnsupportedRegimeError : public std::runtime_error {
 public:
  explicit UnsupportedRegimeError(const std::string& what)
      : std::runtime_error(what) {}
};

// Randomized construction did not verify within the attempt budget.
class ConstructionFailedError : public std::runtime_error {
 public:
  explicit ConstructionFailedError(const std::string& what)
      : std::runtime_error(what) {}
};

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what)
      : std::runtime_error(what) {}
};

class DivisionByZeroError : public std::runtime_error {
 public:
  explicit DivisionByZeroError(const std::string& what)
      : std::runtime_error(what) {}
};

// Protocol-order violations: wrong round, non-survivor transmitting,
// insufficient survivors for decoding.
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed plan / transcript / key files. Carries a line number when the
// format is line-oriented (0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// An audit whose enumeration would exceed the configured ceiling refuses to
// run rather than silently degrade to a partial check.
class AuditRefusedError : public std::runtime_error {
 public:
  explicit AuditRefusedError(const std::string& what)
      : std::runtime_error(what) {}
};

class NetError : public std::runtime_error {
 public:
  explicit NetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsa

#endif  // GSA_ERRORS_HPP_
