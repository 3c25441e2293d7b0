/**
 * Copyright 2026 The pncp developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PNCP_ERRORS_HPP
#define PNCP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pncp {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotPsd : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct BadDimension : Error {
    using Error::Error;
};

struct SingularBlock : Error {
    using Error::Error;
};

struct ParameterOutOfRange : Error {
    using Error::Error;
};

struct NoUpperBracket : Error {
    using Error::Error;
};

struct NonRealTrace : Error {
    using Error::Error;
};

/// Raised when a spectral routine violates its residual contract
/// (solver non-convergence); distinct from input validation errors.
struct NumericFailure : Error {
    using Error::Error;
};

}  // namespace pncp

#endif
