// Copyright 2026 The distk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTK_ERRORS_HPP
#define DISTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace distk {

// Error classes map onto the CLI exit-code contract:
//   3 = ParseError, 4 = PreconditionError, 5 = SizeCapError.

/// Malformed input file (graph files, moment CSVs). Messages carry line numbers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (bad k, disconnected input,
/// trivial distance-k graph, non-moment sequence, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction would exceed a configured size cap.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace distk

#endif  // DISTK_ERRORS_HPP
