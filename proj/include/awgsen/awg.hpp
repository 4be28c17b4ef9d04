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
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "awgsen/address.hpp"
#include "awgsen/classical_shuffle.hpp"

namespace awgsen {

/**
 * A single m x l arrayed waveguide grating.
 *
 * Only the main free-spectrum-range channels are modeled: the device is
 * associated with exactly max(m, l) wavelengths and routes input p to
 * output q on wavelength (p + q) mod l. Rectangular devices with fewer
 * inputs than outputs are the shape the modular constructions use; l < m
 * is rejected as a configuration error.
 */
struct AwgSpec {
    int inputs = 1;
    int outputs = 1;

    AwgSpec(int m, int l) : inputs(m), outputs(l) {
        if (m < 1 || l < 1) {
            throw std::invalid_argument("AWG needs at least one input and output");
        }
        if (l < m) {
            throw std::invalid_argument("AWG with fewer outputs than inputs is not supported");
        }
    }

    int wavelength_count() const { return outputs > inputs ? outputs : inputs; }
    /// Total wavelength channels on either side of the device.
    std::uint64_t channel_count() const {
        return static_cast<std::uint64_t>(inputs) * static_cast<std::uint64_t>(outputs);
    }
};

/// Wavelength connecting input p and output q of an AWG with l outputs.
inline int awg_wavelength(int p, int q, int l) {
    if (l < 1 || p < 0 || q < 0 || q >= l) {
        throw std::out_of_range("AWG port index out of range");
    }
    return (p + q) % l;
}

/// Output reached from input p on wavelength i: q = (i - p) mod l.
inline int awg_output(int p, int i, int l) {
    if (l < 1 || p < 0 || i < 0 || i >= l) {
        throw std::out_of_range("AWG wavelength index out of range");
    }
    int q = (i - p) % l;
    return q < 0 ? q + l : q;
}

/// Input feeding output q on wavelength i: p = (i - q) mod l.
/// The formula can name a row beyond the physical input count of a
/// rectangular device; awg_input_for checks that.
inline int awg_input(int q, int i, int l) {
    if (l < 1 || q < 0 || q >= l || i < 0 || i >= l) {
        throw std::out_of_range("AWG index out of range");
    }
    int p = (i - q) % l;
    return p < 0 ? p + l : p;
}

/// awg_input with the device's input count enforced.
inline int awg_input_for(const AwgSpec& spec, int q, int i) {
    int p = awg_input(q, i, spec.outputs);
    if (p >= spec.inputs) {
        throw std::domain_error("no physical input carries wavelength " +
                                std::to_string(i) + " at output " + std::to_string(q));
    }
    return p;
}

/// Wavelength routing table: rows are inputs, columns are outputs, each
/// cell holds the wavelength index of the connection between them.
struct RoutingTable {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;  // row-major

    int at(int p, int q) const {
        if (p < 0 || p >= rows || q < 0 || q >= cols) {
            throw std::out_of_range("routing table cell out of range");
        }
        return entries[static_cast<std::size_t>(p) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(q)];
    }
};

inline RoutingTable build_routing_table(const AwgSpec& spec) {
    RoutingTable t;
    t.rows = spec.inputs;
    t.cols = spec.outputs;
    t.entries.reserve(spec.channel_count());
    for (int p = 0; p < spec.inputs; ++p) {
        for (int q = 0; q < spec.outputs; ++q) {
            t.entries.push_back(awg_wavelength(p, q, spec.outputs));
        }
    }
    return t;
}

/// Connectivity table: cell (p, q) pairs input channel pq with the output
/// channel qp it connects to, both as two-field addresses.
struct ConnectivityTable {
    int rows = 0;
    int cols = 0;
    int base = 1;  // addresses use base max(m, l)
    std::vector<std::pair<FieldAddress, FieldAddress>> entries;  // row-major

    const std::pair<FieldAddress, FieldAddress>& at(int p, int q) const {
        if (p < 0 || p >= rows || q < 0 || q >= cols) {
            throw std::out_of_range("connectivity table cell out of range");
        }
        return entries[static_cast<std::size_t>(p) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(q)];
    }
};

inline ConnectivityTable build_connectivity_table(const AwgSpec& spec) {
    ConnectivityTable t;
    t.rows = spec.inputs;
    t.cols = spec.outputs;
    t.base = spec.wavelength_count();
    t.entries.reserve(spec.channel_count());
    for (int p = 0; p < spec.inputs; ++p) {
        for (int q = 0; q < spec.outputs; ++q) {
            t.entries.emplace_back(FieldAddress({p, q}, t.base),
                                   FieldAddress({q, p}, t.base));
        }
    }
    return t;
}

/// True iff the channel map pq -> qp induced by the wavelength routing rule
/// is a bijection equal to the classical shuffle of the same shape, and no
/// two connections reuse a wavelength at any input or output port.
inline bool check_single_awg_shuffle_equivalence(const AwgSpec& spec) {
    const int m = spec.inputs;
    const int l = spec.outputs;
    ClassicalShuffle oracle(m, l);
    std::vector<bool> hit(oracle.port_count(), false);
    std::set<std::pair<int, int>> in_port_waves;   // (input, wavelength)
    std::set<std::pair<int, int>> out_port_waves;  // (output, wavelength)
    for (int p = 0; p < m; ++p) {
        for (int q = 0; q < l; ++q) {
            int i = awg_wavelength(p, q, l);
            if (awg_output(p, i, l) != q || awg_input(q, i, l) != p) {
                return false;
            }
            if (!in_port_waves.insert({p, i}).second ||
                !out_port_waves.insert({q, i}).second) {
                return false;  // wavelength reused at a port
            }
            std::uint64_t in_flat = static_cast<std::uint64_t>(p) * l + q;
            std::uint64_t out_flat = static_cast<std::uint64_t>(q) * m + p;
            if (classical_shuffle_map(oracle, in_flat) != out_flat) {
                return false;
            }
            if (hit[out_flat]) {
                return false;  // not injective
            }
            hit[out_flat] = true;
        }
    }
    for (bool h : hit) {
        if (!h) {
            return false;
        }
    }
    return true;
}

}  // namespace awgsen
