// Copyright 2026 The cavqft Authors
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

#include "cavqft/table_io.hpp"

#include <cmath>
#include <cstdio>

namespace cavqft {

std::string format_sci(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    // Avoid printing -0.
    if (value == 0.0) value = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", value);
    return buf;
}

}  // namespace cavqft
