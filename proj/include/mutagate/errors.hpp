// Copyright 2026 The Mutagate Project Authors
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

namespace mutagate {

/// Bad configuration or command line (CLI exit status 4).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem / serialization failure (CLI exit status 4).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The unmutated tree does not pass its own test suite (CLI exit status 3).
class BaselineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mutation point no longer matches the source it was enumerated from.
class StalePointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mutagate
