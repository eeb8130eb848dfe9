// Copyright 2026 The hyperwit Authors
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

namespace hyperwit {

/// Base class of every error thrown by the core library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex index, wrong length, unparsable text.
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// A configured size cap was exceeded. The message names the cap.
class LimitExceeded : public Error {
   public:
    LimitExceeded(const std::string &cap_name, long long cap, long long requested)
        : Error(cap_name + " cap exceeded: requested " + std::to_string(requested) + ", cap is " +
                std::to_string(cap)),
          cap_name_(cap_name) {
    }
    const std::string &cap_name() const noexcept {
        return cap_name_;
    }

   private:
    std::string cap_name_;
};

/// The input is well formed but outside the domain of the operation
/// (non-symmetric state for the norm procedure, disconnected hypergraph, ...).
class PreconditionFailed : public Error {
   public:
    using Error::Error;
};

/// An internal cross-check between two independent code paths disagreed.
class ValidationError : public Error {
   public:
    using Error::Error;
};

}  // namespace hyperwit
