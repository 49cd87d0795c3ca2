// Copyright 2026 The tspdqes Authors
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
#include "tspdqes/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tspdqes {

unsigned default_thread_count() {
    const char *value = std::getenv("TSPDQES_THREADS");
    if (value == nullptr || *value == '\0') {
        return 1;
    }
    try {
        const long parsed = std::stol(value);
        return parsed > 0 ? static_cast<unsigned>(parsed) : 1U;
    } catch (const std::exception &) {
        return 1;
    }
}

} // namespace tspdqes
