// Copyright 2026 The condiam Authors
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

#ifndef CONDIAM_ERROR_HPP_
#define CONDIAM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace condiam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input: bad files, invalid queries,
// out-of-range parameters, oracle size guards.
class InputError : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed to meet its own postconditions (eigensolver
// non-convergence, LP failure, lost alternation).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace condiam

#endif  // CONDIAM_ERROR_HPP_
