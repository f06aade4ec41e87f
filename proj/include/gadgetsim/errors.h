// Copyright 2026 The gadgetsim Authors
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

namespace gadgetsim {

/// Invalid register, configuration or flag values.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition (non-Hermitian input, wrong bit flips, ...).
class ContractError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Norm drift, failed unitarity or similar loss of numerical accuracy.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Requested chain strength cannot deliver the requested effective strength.
class CalibrationError : public ConfigError {
   public:
    using ConfigError::ConfigError;
};

/// An analytic cross-check of the encoding failed.
class ConstructionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A metric was requested where it is not defined (e.g. zero survival probability).
class UndefinedMetricError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Experiment specification files that fail to parse or validate.
class SpecError : public ConfigError {
   public:
    using ConfigError::ConfigError;
};

}  // namespace gadgetsim
