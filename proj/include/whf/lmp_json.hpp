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

#include <json.hpp>

#include "whf/laurent.hpp"
#include "whf/reduction.hpp"

namespace whf {

using Json = nlohmann::json;

Json toJson(const Rational& x);
Json toJson(const GaussianRational& z);
Json toJson(const LaurentScalar& s);
// {"rows": 2, "cols": 2, "entries": [[...], [...]]}
Json toJson(const LaurentMatrix2& m);

Rational rationalFromJson(const Json& j);
GaussianRational gaussianFromJson(const Json& j);
LaurentScalar scalarFromJson(const Json& j);
LaurentMatrix2 matrixFromJson(const Json& j);

// {"a11Minus": <entry>, "a11Plus": ..., "kappa": k, "deltaMinus": ...,
//  "deltaPlus": ..., "theta": t}; absent entries default to 1, integers to 0.
Json toJson(const ScalarFactorisationData& s);
ScalarFactorisationData scalarDataFromJson(const Json& j);

}  // namespace whf
