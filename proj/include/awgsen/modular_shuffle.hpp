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

#include "awgsen/awg.hpp"
#include "awgsen/classical_shuffle.hpp"

namespace awgsen {

/**
 * Routing table of a modular shuffle built from r identical m x m AWGs.
 * Rows are the m input groups; the r*m columns are labeled (a, q') where
 * a picks the AWG and q' its output. A legitimate table carries only the
 * m shared wavelengths, one per cell, each appearing r times per row and
 * once per column.
 */
struct ModularTable {
    int m = 1;
    int r = 1;
    std::vector<int> entries;  // row-major, m rows x r*m columns; negative = empty cell

    int cols() const { return r * m; }

    int at(int p, int a, int qp) const { return at_flat(p, a * m + qp); }

    int at_flat(int p, int q) const {
        if (p < 0 || p >= m || q < 0 || q >= cols()) {
            throw std::out_of_range("modular table cell out of range");
        }
        return entries[static_cast<std::size_t>(p) * static_cast<std::size_t>(cols()) +
                       static_cast<std::size_t>(q)];
    }
};

/// Entry (p, (a, q')) = (p + q') mod m: the table of A(m, rm) reduced
/// entrywise mod m, with column q relabeled (q / m, q mod m).
inline ModularTable build_modular_table(int m, int r) {
    if (m < 1 || r < 1) {
        throw std::invalid_argument("modular table needs m >= 1 and r >= 1");
    }
    ModularTable t;
    t.m = m;
    t.r = r;
    t.entries.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(r) *
                      static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) {
        for (int q = 0; q < r * m; ++q) {
            t.entries.push_back((p + q % m) % m);
        }
    }
    return t;
}

/// One legitimacy condition outcome; row/col give the first violating cell
/// where that is meaningful, -1 otherwise.
struct ConditionResult {
    bool passed = true;
    int row = -1;
    int col = -1;
    std::string note;
};

struct TableValidation {
    ConditionResult wavelength_set;    // only the m wavelengths of the shared set appear
    ConditionResult one_per_cell;      // every cell holds exactly one wavelength
    ConditionResult row_column_count;  // r occurrences per row, one per column

    bool ok() const {
        return wavelength_set.passed && one_per_cell.passed && row_column_count.passed;
    }
};

inline TableValidation validate_modular_table(const ModularTable& t) {
    TableValidation v;
    const int cols = t.cols();

    if (t.entries.size() !=
        static_cast<std::size_t>(t.m) * static_cast<std::size_t>(cols)) {
        v.one_per_cell = {false, -1, -1, "table shape does not match m and r"};
        v.wavelength_set = {false, -1, -1, "table shape does not match m and r"};
        v.row_column_count = {false, -1, -1, "table shape does not match m and r"};
        return v;
    }

    for (int p = 0; p < t.m && v.one_per_cell.passed; ++p) {
        for (int q = 0; q < cols; ++q) {
            if (t.at_flat(p, q) < 0) {
                v.one_per_cell = {false, p, q, "cell holds no wavelength"};
                break;
            }
        }
    }

    for (int p = 0; p < t.m && v.wavelength_set.passed; ++p) {
        for (int q = 0; q < cols; ++q) {
            int i = t.at_flat(p, q);
            if (i >= t.m) {
                v.wavelength_set = {false, p, q,
                                    "wavelength " + std::to_string(i) +
                                        " is outside the shared set of " +
                                        std::to_string(t.m)};
                break;
            }
        }
    }

    for (int p = 0; p < t.m && v.row_column_count.passed; ++p) {
        std::vector<int> count(static_cast<std::size_t>(t.m), 0);
        for (int q = 0; q < cols; ++q) {
            int i = t.at_flat(p, q);
            if (i >= 0 && i < t.m) {
                ++count[static_cast<std::size_t>(i)];
            }
        }
        for (int i = 0; i < t.m; ++i) {
            if (count[static_cast<std::size_t>(i)] != t.r) {
                v.row_column_count = {false, p, -1,
                                      "wavelength " + std::to_string(i) + " appears " +
                                          std::to_string(count[static_cast<std::size_t>(i)]) +
                                          " times in row " + std::to_string(p) +
                                          ", expected " + std::to_string(t.r)};
                break;
            }
        }
    }
    for (int q = 0; q < cols && v.row_column_count.passed; ++q) {
        std::vector<int> count(static_cast<std::size_t>(t.m), 0);
        for (int p = 0; p < t.m; ++p) {
            int i = t.at_flat(p, q);
            if (i >= 0 && i < t.m) {
                ++count[static_cast<std::size_t>(i)];
            }
        }
        for (int i = 0; i < t.m; ++i) {
            if (count[static_cast<std::size_t>(i)] != 1) {
                v.row_column_count = {false, -1, q,
                                      "wavelength " + std::to_string(i) + " appears " +
                                          std::to_string(count[static_cast<std::size_t>(i)]) +
                                          " times in column " + std::to_string(q)};
                break;
            }
        }
    }
    return v;
}

/// Input channel of a modular shuffle: wavelength field q' of port a in
/// input group p.
struct WInChannel {
    int group = 0;  // p
    int port = 0;   // a
    int wave = 0;   // q'

    bool operator==(const WInChannel&) const = default;
};

/// Output channel: position p inside singleton output group (a, q').
struct WOutChannel {
    int awg = 0;      // a
    int awg_out = 0;  // q'
    int port = 0;     // p

    bool operator==(const WOutChannel&) const = default;
};

/// One internal fiber hookup: port a of input group p feeds input p of AWG a.
struct WInputLink {
    int group = 0;
    int port = 0;
    int awg = 0;
    int awg_input = 0;

    bool operator==(const WInputLink&) const = default;
};

/// Output-side label: output group q is output q' = q mod m of AWG a = q / m.
struct WOutputLabel {
    int group = 0;
    int awg = 0;
    int awg_output = 0;

    bool operator==(const WOutputLabel&) const = default;
};

/**
 * Modular shuffle realizing the m x rm wiring with r vertically stacked
 * m x m AWGs sharing one wavelength set of size m. Input side: m groups of
 * r fibers. Output side: rm singleton groups. Construction and queries are
 * deterministic; a built network is immutable.
 */
class ModularShuffle {
  public:
    ModularShuffle(int m, int r) : m_(m), r_(r) {
        if (m < 1 || r < 1) {
            throw std::invalid_argument("modular shuffle needs m >= 1 and r >= 1");
        }
        wiring_.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(r));
        for (int p = 0; p < m; ++p) {
            for (int a = 0; a < r; ++a) {
                wiring_.push_back(WInputLink{p, a, a, p});
            }
        }
        output_labels_.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(m));
        for (int q = 0; q < r * m; ++q) {
            output_labels_.push_back(WOutputLabel{q, q / m, q % m});
        }
    }

    int m() const { return m_; }
    int r() const { return r_; }
    int fiber_count() const { return r_ * m_; }  // internal fibers per side
    std::uint64_t channel_count() const {
        return static_cast<std::uint64_t>(r_) * static_cast<std::uint64_t>(m_) *
               static_cast<std::uint64_t>(m_);
    }

    const std::vector<WInputLink>& wiring() const { return wiring_; }
    const std::vector<WOutputLabel>& output_labels() const { return output_labels_; }

    const WInputLink& link_for(int group, int port) const {
        if (group < 0 || group >= m_ || port < 0 || port >= r_) {
            throw std::out_of_range("input port out of range");
        }
        return wiring_[static_cast<std::size_t>(group) * static_cast<std::size_t>(r_) +
                       static_cast<std::size_t>(port)];
    }

    const WOutputLabel& label_for(int group) const {
        if (group < 0 || group >= r_ * m_) {
            throw std::out_of_range("output group out of range");
        }
        return output_labels_[static_cast<std::size_t>(group)];
    }

    /// Flat index of an input channel: group-major, then port, then wavelength field.
    std::uint64_t input_flat(const WInChannel& c) const {
        return (static_cast<std::uint64_t>(c.group) * r_ + c.port) * m_ + c.wave;
    }

    /// Flat index of an output channel: output group a*m+q', then position p.
    std::uint64_t output_flat(const WOutChannel& c) const {
        return (static_cast<std::uint64_t>(c.awg) * m_ + c.awg_out) * m_ + c.port;
    }

    /// Trace input channel (p, a, q') through the wiring: it enters AWG a at
    /// input p, leaves at output q' on wavelength (p + q') mod m, and lands
    /// in output group (a, q') at position p.
    std::pair<WOutChannel, int> connect(const WInChannel& c) const {
        if (c.group < 0 || c.group >= m_ || c.port < 0 || c.port >= r_ ||
            c.wave < 0 || c.wave >= m_) {
            throw std::out_of_range("input channel out of range");
        }
        const WInputLink& link = link_for(c.group, c.port);
        int wavelength = awg_wavelength(link.awg_input, c.wave, m_);
        int awg_out = awg_output(link.awg_input, wavelength, m_);
        return {WOutChannel{link.awg, awg_out, link.awg_input}, wavelength};
    }

    /// Routing table recomputed from the wiring, cell by cell.
    ModularTable traced_table() const {
        ModularTable t;
        t.m = m_;
        t.r = r_;
        t.entries.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(r_ * m_), -1);
        for (int p = 0; p < m_; ++p) {
            for (int a = 0; a < r_; ++a) {
                for (int qp = 0; qp < m_; ++qp) {
                    auto [out, wavelength] = connect(WInChannel{p, a, qp});
                    int q = out.awg * m_ + out.awg_out;
                    t.entries[static_cast<std::size_t>(p) * static_cast<std::size_t>(r_ * m_) +
                              static_cast<std::size_t>(q)] = wavelength;
                }
            }
        }
        return t;
    }

    bool operator==(const ModularShuffle& other) const = default;

  private:
    int m_;
    int r_;
    std::vector<WInputLink> wiring_;
    std::vector<WOutputLabel> output_labels_;
};

inline ModularShuffle build_w(int m, int r) { return ModularShuffle(m, r); }

/// Connection of one input channel, as (output channel, wavelength).
inline std::pair<WOutChannel, int> w_connect(const ModularShuffle& w,
                                             const WInChannel& c) {
    return w.connect(c);
}

/// No two connections use the same wavelength on the same input fiber or
/// the same output fiber, over all r*m^2 connections.
inline bool check_contention_free(const ModularShuffle& w) {
    std::set<std::pair<std::uint64_t, int>> in_claims;   // (input fiber, wavelength)
    std::set<std::pair<std::uint64_t, int>> out_claims;  // (output fiber, wavelength)
    for (int p = 0; p < w.m(); ++p) {
        for (int a = 0; a < w.r(); ++a) {
            for (int qp = 0; qp < w.m(); ++qp) {
                auto [out, wavelength] = w.connect(WInChannel{p, a, qp});
                std::uint64_t in_fiber = static_cast<std::uint64_t>(p) * w.r() + a;
                std::uint64_t out_fiber =
                    static_cast<std::uint64_t>(out.awg) * w.m() + out.awg_out;
                if (!in_claims.insert({in_fiber, wavelength}).second) {
                    return false;
                }
                if (!out_claims.insert({out_fiber, wavelength}).second) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Channel-level equivalence with the classical shuffle of the same shape:
/// the flat connection map equals the oracle permutation.
inline bool check_equivalence(const ModularShuffle& w) {
    ClassicalShuffle oracle(w.m(), w.r() * w.m());
    std::vector<bool> hit(w.channel_count(), false);
    for (int p = 0; p < w.m(); ++p) {
        for (int a = 0; a < w.r(); ++a) {
            for (int qp = 0; qp < w.m(); ++qp) {
                WInChannel in{p, a, qp};
                auto [out, wavelength] = w.connect(in);
                (void)wavelength;
                std::uint64_t got = w.output_flat(out);
                if (got != classical_shuffle_map(oracle, w.input_flat(in))) {
                    return false;
                }
                if (hit[got]) {
                    return false;
                }
                hit[got] = true;
            }
        }
    }
    return true;
}

/// Connectivity table of a modular shuffle: cell (p, (a, q')) pairs input
/// channel p a q' with output channel a q' p. Channels are triples here, not
/// uniform-base addresses, since the port field ranges over r.
struct WConnectivityTable {
    int m = 1;
    int r = 1;
    std::vector<std::pair<WInChannel, WOutChannel>> entries;  // row-major

    int cols() const { return r * m; }

    const std::pair<WInChannel, WOutChannel>& at_flat(int p, int q) const {
        if (p < 0 || p >= m || q < 0 || q >= cols()) {
            throw std::out_of_range("connectivity table cell out of range");
        }
        return entries[static_cast<std::size_t>(p) * static_cast<std::size_t>(cols()) +
                       static_cast<std::size_t>(q)];
    }
};

inline WConnectivityTable build_w_connectivity_table(const ModularShuffle& w) {
    WConnectivityTable t;
    t.m = w.m();
    t.r = w.r();
    t.entries.reserve(w.channel_count());
    for (int p = 0; p < w.m(); ++p) {
        for (int q = 0; q < w.fiber_count(); ++q) {
            WInChannel in{p, q / w.m(), q % w.m()};
            t.entries.emplace_back(in, w.connect(in).first);
        }
    }
    return t;
}

}  // namespace awgsen
