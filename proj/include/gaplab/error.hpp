// Copyright 2026 The gaplab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gaplab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation (t below a threshold
// floor, lo >= hi, inadmissible tuple where one is required, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

// A range bound exceeds the configured ceiling, or a successor search ran
// past it.
class CeilingError : public Error {
  public:
    using Error::Error;
};

// The caller asked for something the execution contract forbids, e.g. a
// multi-threaded sweep with the adaptive threshold family.
class ContractError : public Error {
  public:
    using Error::Error;
};

}  // namespace gaplab
