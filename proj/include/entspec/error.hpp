// Copyright 2026 The entspec Authors
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

namespace entspec {

// Argument errors are reported as std::invalid_argument throughout.

/// Malformed state file or sweep CSV; the message names the violated invariant.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Failure to open, read or write a file.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Requested qubit count exceeds a configured cap.
class CapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace entspec
