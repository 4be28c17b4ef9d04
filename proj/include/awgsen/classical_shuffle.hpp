/*
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
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace awgsen {

/**
 * Generalized shuffle wiring with m input groups of l ports and l output
 * groups of m ports: port q of input group p connects to port p of output
 * group q. Serves as the connectivity oracle the AWG fabrics are checked
 * against.
 */
struct ClassicalShuffle {
    int m = 1;
    int l = 1;

    ClassicalShuffle(int m_, int l_) : m(m_), l(l_) {
        if (m < 1 || l < 1) {
            throw std::invalid_argument("shuffle needs m >= 1 and l >= 1");
        }
    }

    std::uint64_t port_count() const {
        return static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(l);
    }
};

/// Flat connection map: input p*l+q goes to output q*m+p.
inline std::uint64_t classical_shuffle_map(const ClassicalShuffle& s,
                                           std::uint64_t input) {
    if (input >= s.port_count()) {
        throw std::out_of_range("shuffle input index " + std::to_string(input) +
                                " out of range");
    }
    std::uint64_t p = input / static_cast<std::uint64_t>(s.l);
    std::uint64_t q = input % static_cast<std::uint64_t>(s.l);
    return q * static_cast<std::uint64_t>(s.m) + p;
}

}  // namespace awgsen
