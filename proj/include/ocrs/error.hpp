// Copyright 2026 The Authors.
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

#ifndef OCRS_ERROR_HPP
#define OCRS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ocrs {

// Error categories exposed 1:1 through the C API status codes.
enum class ErrorCode {
  invalid_argument = 1,  // structural misuse (dimension mismatch, bad index)
  parse = 2,             // malformed JSON or unknown field/value
  too_large = 3,         // enumeration refused; message carries the size report
  kind_mismatch = 4,     // scheme incompatible with the constraint class
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ocrs

#endif  // OCRS_ERROR_HPP
