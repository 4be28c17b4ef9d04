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

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "awgsen/address.hpp"
#include "awgsen/sen.hpp"

namespace awgsen {

/// Connection request from source channel S to destination channel D.
struct Request {
    FieldAddress src;
    FieldAddress dst;

    bool operator==(const Request&) const = default;
};

/// Passage through one shuffle stage: enter at `in`, leave at `out` on
/// wavelength `lambda`. The final record of a route covers the output
/// stage, where in == out == D.
struct RouteHop {
    FieldAddress in;
    FieldAddress out;
    int lambda = 0;

    bool operator==(const RouteHop&) const = default;
};

struct Route {
    std::vector<RouteHop> hops;  // n stage records plus the output-stage record

    bool operator==(const Route&) const = default;
};

/// Ordered set of requests routed as one static configuration.
struct RequestSet {
    int m = 2;
    int n = 1;
    std::vector<Request> requests;
};

inline void validate_request_set(const RequestSet& set) {
    std::vector<std::uint64_t> sources;
    std::vector<std::uint64_t> destinations;
    sources.reserve(set.requests.size());
    destinations.reserve(set.requests.size());
    for (const Request& r : set.requests) {
        if (r.src.base() != set.m || r.dst.base() != set.m ||
            r.src.width() != set.n || r.dst.width() != set.n) {
            throw std::invalid_argument("request address shape does not match the set");
        }
        sources.push_back(to_integer(r.src));
        destinations.push_back(to_integer(r.dst));
    }
    std::sort(sources.begin(), sources.end());
    if (std::adjacent_find(sources.begin(), sources.end()) != sources.end()) {
        throw std::invalid_argument("request set has a duplicate source");
    }
    std::sort(destinations.begin(), destinations.end());
    if (std::adjacent_find(destinations.begin(), destinations.end()) !=
        destinations.end()) {
        throw std::invalid_argument("request set has a duplicate destination");
    }
}

/**
 * Self-routing path of R(S, D): stage k is entered at
 * X_k = s_{n-k} ... s_1 d_n ... d_{n-k+1}, left at its rotation, and
 * boundary k then substitutes destination digit d_{n-k} for the trailing
 * field. No search is involved; the route is a pure function of S and D.
 */
inline Route self_route(const SenNetwork& net, const Request& req) {
    net.require_address(req.src);
    net.require_address(req.dst);
    Route route;
    route.hops.reserve(static_cast<std::size_t>(net.n()) + 1);
    FieldAddress x = req.src;
    for (int k = 0; k < net.n(); ++k) {
        auto [y, lambda] = stage_connect(net, k, x);
        route.hops.push_back(RouteHop{x, y, lambda});
        x = boundary_exchange(net, k, y, req.dst.digit(k)).first;
    }
    route.hops.push_back(RouteHop{x, x, field_to_tuple(x).wavelength});
    return route;
}

/// Closed-form wavelength assignment of R(S, D), without a network:
/// i_k = [s_{n-k} + d_{n-k+1}] mod m with d_{n+1} taken as s_1, plus the
/// output-stage i_n = [d_n + d_1] mod m. Width-1 addresses have no group
/// field, so the digit itself is the wavelength.
inline std::vector<int> wavelength_sequence(const Request& req) {
    if (req.src.base() != req.dst.base() || req.src.width() != req.dst.width()) {
        throw std::invalid_argument("request endpoints must share base and width");
    }
    const int m = req.src.base();
    const int n = req.src.width();
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n) + 1);
    if (n == 1) {
        seq.push_back(req.src.digit(0));
        seq.push_back(req.dst.digit(0));
        return seq;
    }
    for (int k = 0; k < n; ++k) {
        int lead = req.src.digit(k);  // s_{n-k}
        int trail = k == 0 ? req.src.digit(n - 1) : req.dst.digit(k - 1);
        seq.push_back((lead + trail) % m);
    }
    seq.push_back((req.dst.digit(0) + req.dst.digit(n - 1)) % m);
    return seq;
}

/// Where a connection claims capacity: a wavelength on a fiber entering
/// stage k (k = n names the output stage). Boundary conversions are
/// attributed to the downstream stage's input side.
struct ChannelRef {
    int stage = 0;
    std::uint64_t fiber = 0;
    int wavelength = 0;

    auto operator<=>(const ChannelRef&) const = default;
};

/// Two requests claiming the identical stage-input channel.
struct Contention {
    ChannelRef channel;
    Request first;
    Request second;
};

/// Stage-input channels claimed by one route, in stage order (0..n).
inline std::vector<ChannelRef> claimed_channels(const Route& route) {
    std::vector<ChannelRef> claims;
    claims.reserve(route.hops.size());
    for (std::size_t k = 0; k < route.hops.size(); ++k) {
        const RouteHop& hop = route.hops[k];
        claims.push_back(ChannelRef{static_cast<int>(k),
                                    field_to_tuple(hop.in).fiber, hop.lambda});
    }
    return claims;
}

/**
 * Routes every request and reports each stage-input channel claimed by two
 * or more of them. A shuffle stage itself is contention-free, so a clash on
 * an output fiber always mirrors a clash at the stage input; channels are
 * therefore reported once, at the input side, as the offending pair of
 * requests with the lowest source addresses. The report is sorted by
 * (stage, fiber, wavelength) and is independent of request order.
 */
inline std::vector<Contention> detect_contentions(const SenNetwork& net,
                                                  const RequestSet& set) {
    if (set.m != net.m() || set.n != net.n()) {
        throw std::invalid_argument("request set does not match the network shape");
    }
    validate_request_set(set);
    std::map<ChannelRef, std::vector<const Request*>> claims;
    for (const Request& req : set.requests) {
        Route route = self_route(net, req);
        for (const ChannelRef& ref : claimed_channels(route)) {
            claims[ref].push_back(&req);
        }
    }
    std::vector<Contention> found;
    for (auto& [ref, claimants] : claims) {
        if (claimants.size() < 2) {
            continue;
        }
        std::sort(claimants.begin(), claimants.end(),
                  [](const Request* a, const Request* b) {
                      return to_integer(a->src) < to_integer(b->src);
                  });
        found.push_back(Contention{ref, *claimants[0], *claimants[1]});
    }
    return found;  // std::map iteration already orders by channel
}

/// Destinations are strictly increasing or strictly decreasing once the
/// requests are sorted by source address.
inline bool is_monotonic(const RequestSet& set) {
    validate_request_set(set);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(set.requests.size());
    for (const Request& r : set.requests) {
        pairs.emplace_back(to_integer(r.src), to_integer(r.dst));
    }
    std::sort(pairs.begin(), pairs.end());
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        increasing = increasing && pairs[i - 1].second < pairs[i].second;
        decreasing = decreasing && pairs[i - 1].second > pairs[i].second;
    }
    return increasing || decreasing;
}

/// Active sources form a contiguous range of addresses.
inline bool is_concentrated(const RequestSet& set) {
    validate_request_set(set);
    if (set.requests.empty()) {
        return true;
    }
    std::vector<std::uint64_t> sources;
    sources.reserve(set.requests.size());
    for (const Request& r : set.requests) {
        sources.push_back(to_integer(r.src));
    }
    std::sort(sources.begin(), sources.end());
    return sources.back() - sources.front() + 1 == sources.size();
}

struct NonblockingReport {
    int m = 0;
    int n = 0;
    std::uint64_t sets_tested = 0;
    std::uint64_t violations = 0;
};

/**
 * Exhaustively enumerates every monotonic and concentrated request set of
 * the m^n-channel network: every contiguous source window of every length,
 * against every strictly increasing and every strictly decreasing
 * assignment of distinct destinations. Counts the sets whose routing shows
 * any contention; the claim under test predicts zero.
 */
inline NonblockingReport verify_nonblocking(int m, int n,
                                     std::uint64_t channel_limit = kDefaultChannelLimit) {
    SenNetwork net = build_sen(m, n, channel_limit);
    const std::uint64_t total = net.channel_count();
    NonblockingReport report;
    report.m = m;
    report.n = n;

    auto run_set = [&](const std::vector<std::uint64_t>& sources,
                       const std::vector<std::uint64_t>& dests, bool reversed) {
        RequestSet set;
        set.m = m;
        set.n = n;
        set.requests.reserve(sources.size());
        for (std::size_t i = 0; i < sources.size(); ++i) {
            std::uint64_t d = reversed ? dests[dests.size() - 1 - i] : dests[i];
            set.requests.push_back(Request{from_integer(sources[i], m, n),
                                           from_integer(d, m, n)});
        }
        ++report.sets_tested;
        if (!detect_contentions(net, set).empty()) {
            ++report.violations;
        }
    };

    for (std::uint64_t len = 1; len <= total; ++len) {
        for (std::uint64_t start = 0; start + len <= total; ++start) {
            std::vector<std::uint64_t> sources(len);
            for (std::uint64_t i = 0; i < len; ++i) {
                sources[i] = start + i;
            }
            // lexicographic enumeration of destination combinations
            std::vector<std::uint64_t> dests(len);
            for (std::uint64_t i = 0; i < len; ++i) {
                dests[i] = i;
            }
            while (true) {
                run_set(sources, dests, false);
                if (len > 1) {
                    run_set(sources, dests, true);
                }
                std::size_t i = len;
                while (i > 0 && dests[i - 1] == total - (len - (i - 1))) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++dests[i - 1];
                for (std::size_t j = i; j < len; ++j) {
                    dests[j] = dests[j - 1] + 1;
                }
            }
        }
    }
    return report;
}

/// Exact occupancy ratio across all stage sides, as a fraction.
struct Utilization {
    std::uint64_t busy = 0;
    std::uint64_t capacity = 0;
    bool single_loaded = true;  // no channel carries two connections

    double value() const {
        return capacity == 0 ? 1.0
                             : static_cast<double>(busy) / static_cast<double>(capacity);
    }
    bool full() const { return busy == capacity && single_loaded; }
};

/**
 * Routes the identity permutation (every channel requests itself, which is
 * monotonic and concentrated) and measures how many channels per stage
 * side carry a connection. Counts both sides of every shuffle stage plus
 * the output stage.
 */
inline Utilization full_load_utilization(const SenNetwork& net) {
    const std::uint64_t per_side = net.channel_count();
    const std::uint64_t sides = 2 * static_cast<std::uint64_t>(net.n()) + 1;
    std::vector<std::uint32_t> load(sides * per_side, 0);

    for (std::uint64_t s = 0; s < per_side; ++s) {
        FieldAddress addr = from_integer(s, net.m(), net.n());
        Route route = self_route(net, Request{addr, addr});
        for (std::size_t k = 0; k < route.hops.size(); ++k) {
            const RouteHop& hop = route.hops[k];
            std::uint64_t in_slot = field_to_tuple(hop.in).fiber *
                                        static_cast<std::uint64_t>(net.m()) +
                                    static_cast<std::uint64_t>(hop.lambda);
            ++load[2 * k * per_side + in_slot];
            if (static_cast<int>(k) < net.n()) {
                std::uint64_t out_slot = field_to_tuple(hop.out).fiber *
                                             static_cast<std::uint64_t>(net.m()) +
                                         static_cast<std::uint64_t>(hop.lambda);
                ++load[(2 * k + 1) * per_side + out_slot];
            }
        }
    }

    Utilization u;
    u.capacity = sides * per_side;
    for (std::uint32_t c : load) {
        if (c > 0) {
            ++u.busy;
        }
        if (c > 1) {
            u.single_loaded = false;
        }
    }
    return u;
}

}  // namespace awgsen
