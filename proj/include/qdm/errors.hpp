// Copyright 2026 The QDM Simulator Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace qdm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A requested size exceeds the global qubit cap.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Matrix or vector dimensions do not agree.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Unknown register, slot out of range, or illegal register pairing.
class LayoutError : public Error {
  public:
    using Error::Error;
};

/// A value violates a domain invariant (normalization, unitarity, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Canonical/extended iteration called with the wrong kind of spec.
class ModeError : public Error {
  public:
    using Error::Error;
};

/// Projection onto an outcome of zero probability.
class ProjectionError : public Error {
  public:
    using Error::Error;
};

/// Malformed scenario or report document. `path()` names the offending field.
class ParseError : public Error {
  public:
    ParseError(const std::string &path, const std::string &what)
        : Error(path.empty() ? what : path + ": " + what), path_(path) {}
    [[nodiscard]] const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

} // namespace qdm
