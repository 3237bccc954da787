/*
   Copyright 2026 The whf contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace whf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by zero, non-finite input, malformed literal.
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// det a(t) is not c*t^theta.
struct NotMonomialDet : Error {
    using Error::Error;
};

// Exact product check of a computed factorisation did not close.
struct VerificationFailed : Error {
    using Error::Error;
};

struct NormalisationUnavailable : Error {
    using Error::Error;
};

// A quotient that should be a Laurent polynomial left a remainder.
struct NonExactDivision : Error {
    using Error::Error;
};

// zeta outside the admissible annulus of a stream.
struct InadmissibleRadius : Error {
    using Error::Error;
};

}  // namespace whf
