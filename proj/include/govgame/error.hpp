// Copyright 2026 The govgame Authors
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

#ifndef GOVGAME_ERROR_HPP_
#define GOVGAME_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace govgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a documented invariant (range, shape, sign).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An input document is malformed or does not follow its schema. The message
// carries the location (line and/or field path).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace govgame

#endif  // GOVGAME_ERROR_HPP_
