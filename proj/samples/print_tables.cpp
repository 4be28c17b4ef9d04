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

// Prints the routing and connectivity tables of a 3x6 AWG next to those of
// the equivalent modular shuffle built from two 3x3 AWGs.

#include <iostream>

#include "awgsen/awgsen.hpp"

int main() {
    using namespace awgsen;

    AwgSpec single(3, 6);
    std::cout << "wavelength routing table of a 3x6 AWG\n"
              << render_table(build_routing_table(single), TableFormat::text)
              << "\nconnectivity table (input channel, output channel)\n"
              << render_table(build_connectivity_table(single), TableFormat::text);

    ModularShuffle w = build_w(3, 2);
    std::cout << "\nrouting table of the same shuffle from two 3x3 AWGs\n"
              << render_table(w.traced_table(), TableFormat::text)
              << "\nconnectivity table\n"
              << render_table(build_w_connectivity_table(w), TableFormat::text);

    std::cout << "\nequivalent to the classical shuffle: "
              << (check_equivalence(w) ? "yes" : "no")
              << "\nwavelength contention-free: "
              << (check_contention_free(w) ? "yes" : "no") << "\n";
    return 0;
}
