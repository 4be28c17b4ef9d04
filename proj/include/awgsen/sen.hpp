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
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "awgsen/address.hpp"
#include "awgsen/modular_shuffle.hpp"

namespace awgsen {

/// Thrown when a requested network would exceed the configured channel limit.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Default cap on m^n, sized for desk-scale exhaustive verification.
inline constexpr std::uint64_t kDefaultChannelLimit = 4096;

/**
 * One m x m wavelength-exchange module: m converters between a demux and a
 * mux, applying a bijective wavelength mapping to the channels of a fiber.
 * With the mapping ranging over all permutations the module realizes
 * exactly what an m x m crossbar realizes.
 */
class TwcModule {
  public:
    TwcModule(int size, std::vector<int> mapping)
        : size_(size), mapping_(std::move(mapping)) {
        if (size_ < 1 || mapping_.size() != static_cast<std::size_t>(size_)) {
            throw std::invalid_argument("conversion map must cover the module size");
        }
        std::vector<bool> seen(static_cast<std::size_t>(size_), false);
        for (int w : mapping_) {
            if (w < 0 || w >= size_ || seen[static_cast<std::size_t>(w)]) {
                throw std::invalid_argument("conversion map must be a bijection");
            }
            seen[static_cast<std::size_t>(w)] = true;
        }
    }

    static TwcModule identity(int size) {
        std::vector<int> map(static_cast<std::size_t>(size));
        std::iota(map.begin(), map.end(), 0);
        return TwcModule(size, std::move(map));
    }

    int size() const { return size_; }
    const std::vector<int>& mapping() const { return mapping_; }

    int apply(int wavelength) const {
        if (wavelength < 0 || wavelength >= size_) {
            throw std::out_of_range("wavelength index out of range");
        }
        return mapping_[static_cast<std::size_t>(wavelength)];
    }

    bool operator==(const TwcModule&) const = default;

  private:
    int size_;
    std::vector<int> mapping_;
};

inline int twc_apply(const TwcModule& module, int wavelength) {
    return module.apply(wavelength);
}

/**
 * Shuffle-exchange network with m^n wavelength channels: n cascaded shuffle
 * stages, each the modular shuffle of m^(n-2) m x m AWGs, separated by n
 * wavelength boundaries (the planes inside the converter columns where the
 * per-fiber wavelength permutations act). Boundary k follows stage k; the
 * last boundary lands in the output stage. The n = 1 network degenerates to
 * a single converter module on one fiber and has no AWG fabric.
 */
class SenNetwork {
  public:
    SenNetwork(int m, int n, std::uint64_t channel_limit = kDefaultChannelLimit)
        : m_(m), n_(n) {
        if (m < 2) {
            throw std::invalid_argument("network base must be >= 2");
        }
        if (n < 1) {
            throw std::invalid_argument("network needs at least one stage");
        }
        std::uint64_t count = 1;
        for (int i = 0; i < n; ++i) {
            if (count > channel_limit / static_cast<std::uint64_t>(m)) {
                throw ResourceLimitError("network of " + std::to_string(m) + "^" +
                                         std::to_string(n) +
                                         " channels exceeds the limit of " +
                                         std::to_string(channel_limit));
            }
            count *= static_cast<std::uint64_t>(m);
        }
        channel_count_ = count;
        if (n >= 2) {
            int r = 1;
            for (int i = 0; i < n - 2; ++i) {
                r *= m;
            }
            stages_.assign(static_cast<std::size_t>(n), ModularShuffle(m, r));
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }
    std::uint64_t channel_count() const { return channel_count_; }
    std::uint64_t fibers_per_side() const { return channel_count_ / m_; }
    int stage_count() const { return n_; }
    int boundary_count() const { return n_; }
    std::uint64_t twc_modules_per_column() const { return fibers_per_side(); }

    /// AWG fabric of stage k; empty when n = 1.
    const std::vector<ModularShuffle>& stages() const { return stages_; }

    bool valid_address(const FieldAddress& addr) const {
        return addr.base() == m_ && addr.width() == n_;
    }

    void require_address(const FieldAddress& addr) const {
        if (!valid_address(addr)) {
            throw std::invalid_argument("address shape does not match this network");
        }
    }

    bool operator==(const SenNetwork&) const = default;

  private:
    int m_;
    int n_;
    std::uint64_t channel_count_;
    std::vector<ModularShuffle> stages_;
};

inline SenNetwork build_sen(int m, int n,
                            std::uint64_t channel_limit = kDefaultChannelLimit) {
    return SenNetwork(m, n, channel_limit);
}

/// Connection of input channel X through shuffle stage k: the output channel
/// is the one-field left rotation and the carrying wavelength is the one of
/// X's two-tuple form. Every stage applies the same wiring.
inline std::pair<FieldAddress, int> stage_connect(const SenNetwork& net, int k,
                                                  const FieldAddress& x) {
    if (k < 0 || k >= net.stage_count()) {
        throw std::out_of_range("stage index out of range");
    }
    net.require_address(x);
    return {rotate_left(x), field_to_tuple(x).wavelength};
}

/// Wavelength exchange at boundary k: the trailing field of the stage-k
/// output is replaced by the next routing digit. The fiber part never
/// changes; the new wavelength is the two-tuple wavelength of the produced
/// address.
inline std::pair<FieldAddress, int> boundary_exchange(const SenNetwork& net, int k,
                                                      const FieldAddress& y,
                                                      int replacement) {
    if (k < 0 || k >= net.boundary_count()) {
        throw std::out_of_range("boundary index out of range");
    }
    net.require_address(y);
    if (replacement < 0 || replacement >= net.m()) {
        throw std::out_of_range("replacement digit out of range");
    }
    FieldAddress next = y.with_trailing(replacement);
    return {next, field_to_tuple(next).wavelength};
}

}  // namespace awgsen
