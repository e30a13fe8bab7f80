// aml/error.h

// Copyright 2026  AML Authors

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

#ifndef AML_ERROR_H_
#define AML_ERROR_H_

#include <stdexcept>
#include <string>

namespace aml {

// Exit-code mapping used by the CLI: ConfigError -> 2, DataError -> 3,
// NumericalError (and NotPositiveDefiniteError) -> 4.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &msg) : std::runtime_error(msg) {}
};

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

class NotPositiveDefiniteError : public NumericalError {
 public:
  explicit NotPositiveDefiniteError(const std::string &msg)
      : NumericalError(msg) {}
};

// Invalid arguments to library functions (dimension mismatches, bad ranges).
class InvalidInputError : public ConfigError {
 public:
  explicit InvalidInputError(const std::string &msg) : ConfigError(msg) {}
};

}  // namespace aml

#endif  // AML_ERROR_H_
