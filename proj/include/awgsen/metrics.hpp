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

#include "awgsen/modular_shuffle.hpp"
#include "awgsen/sen.hpp"

namespace awgsen {

/// Device counts and scalability figures of a built fabric. The flag trips
/// for AWG sizes whose coherent crosstalk is no longer negligible (m > 32).
struct MetricsReport {
    std::uint64_t port_count = 0;            // N wavelength channels per side
    std::uint64_t awg_count = 0;             // m x m AWGs in the whole fabric
    int awg_size = 0;                        // m
    std::uint64_t twc_count = 0;             // individual converters
    std::uint64_t twc_module_count = 0;      // converter modules
    int conversion_range = 0;                // wavelengths a converter spans
    int wavelength_granularity = 0;          // distinct wavelengths required
    std::uint64_t internal_fiber_count = 0;  // fibers per shuffle side, N/m
    std::uint64_t classical_fiber_count = 0; // fibers of the classical wiring, N
    bool crosstalk_flag = false;             // m > 32
};

inline constexpr int kCrosstalkSizeLimit = 32;

inline MetricsReport compute_metrics(const ModularShuffle& w) {
    MetricsReport rep;
    rep.port_count = w.channel_count();
    rep.awg_count = static_cast<std::uint64_t>(w.r());
    rep.awg_size = w.m();
    rep.wavelength_granularity = w.m();
    rep.internal_fiber_count = static_cast<std::uint64_t>(w.fiber_count());
    rep.classical_fiber_count = w.channel_count();
    rep.crosstalk_flag = w.m() > kCrosstalkSizeLimit;
    return rep;
}

inline MetricsReport compute_metrics(const SenNetwork& net) {
    MetricsReport rep;
    rep.port_count = net.channel_count();
    rep.awg_size = net.m();
    rep.awg_count = 0;
    for (const ModularShuffle& stage : net.stages()) {
        rep.awg_count += static_cast<std::uint64_t>(stage.r());
    }
    rep.twc_module_count =
        static_cast<std::uint64_t>(net.n()) * net.twc_modules_per_column();
    rep.twc_count = rep.twc_module_count * static_cast<std::uint64_t>(net.m());
    rep.conversion_range = net.m();
    rep.wavelength_granularity = net.m();
    rep.internal_fiber_count = net.fibers_per_side();
    rep.classical_fiber_count = net.channel_count();
    rep.crosstalk_flag = net.m() > kCrosstalkSizeLimit;
    return rep;
}

}  // namespace awgsen
