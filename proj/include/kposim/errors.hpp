// Copyright 2026 The kposim Authors
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

namespace kposim {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct DegenerateState : Error {
    using Error::Error;
};
struct BelowBifurcation : Error {
    using Error::Error;
};
struct DegenerateSteadyState : Error {
    using Error::Error;
};
struct StepSizeUnderflow : Error {
    using Error::Error;
};
struct NotConverged : Error {
    using Error::Error;
};
struct NoExtrema : Error {
    using Error::Error;
};
struct InvalidSplitting : Error {
    using Error::Error;
};
struct DivisionByZeroPhotonNumber : Error {
    using Error::Error;
};
struct MissingSnapshots : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace kposim
