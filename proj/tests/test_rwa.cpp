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
#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "awgsen/rwa.hpp"

namespace {

using namespace awgsen;

Request make_request(const std::string& src, const std::string& dst, int m, int n) {
    return Request{parse_address(src, m, n), parse_address(dst, m, n)};
}

RequestSet make_set(std::initializer_list<std::pair<const char*, const char*>> pairs,
                    int m, int n) {
    RequestSet set;
    set.m = m;
    set.n = n;
    for (const auto& [src, dst] : pairs) {
        set.requests.push_back(make_request(src, dst, m, n));
    }
    return set;
}

// A monotonic and concentrated seven-request set whose routes share fibers.
RequestSet example_seven_requests() {
    return make_set({{"011", "000"},
                     {"012", "002"},
                     {"020", "010"},
                     {"021", "011"},
                     {"022", "012"},
                     {"100", "021"},
                     {"101", "022"}},
                    3, 3);
}

TEST(SelfRouteTest, ReferenceChain) {
    SenNetwork net = build_sen(3, 3);
    Route route = self_route(net, make_request("010", "111", 3, 3));
    ASSERT_EQ(route.hops.size(), 4u);

    EXPECT_EQ(to_text(route.hops[0].in), "010");
    EXPECT_EQ(to_text(route.hops[0].out), "100");
    EXPECT_EQ(route.hops[0].lambda, 0);

    EXPECT_EQ(to_text(route.hops[1].in), "101");
    EXPECT_EQ(to_text(route.hops[1].out), "011");
    EXPECT_EQ(route.hops[1].lambda, 2);

    EXPECT_EQ(to_text(route.hops[2].in), "011");
    EXPECT_EQ(to_text(route.hops[2].out), "110");
    EXPECT_EQ(route.hops[2].lambda, 1);

    EXPECT_EQ(to_text(route.hops[3].in), "111");
    EXPECT_EQ(to_text(route.hops[3].out), "111");
    EXPECT_EQ(route.hops[3].lambda, 2);
}

TEST(SelfRouteTest, SelfRequestOfZeroStaysAtZero) {
    SenNetwork net = build_sen(3, 3);
    Route route = self_route(net, make_request("000", "000", 3, 3));
    for (const RouteHop& hop : route.hops) {
        EXPECT_EQ(to_integer(hop.in), 0u);
        EXPECT_EQ(to_integer(hop.out), 0u);
        EXPECT_EQ(hop.lambda, 0);
    }
}

TEST(SelfRouteTest, ContentionExampleIntermediateChannel) {
    SenNetwork net = build_sen(3, 3);
    Route route = self_route(net, make_request("011", "000", 3, 3));
    EXPECT_EQ(to_text(route.hops[2].in), "100");
    EXPECT_EQ(route.hops[2].lambda, 1);
}

TEST(SelfRouteTest, ShapeMismatchRejected) {
    SenNetwork net = build_sen(3, 3);
    EXPECT_THROW(self_route(net, make_request("01", "11", 3, 2)),
                 std::invalid_argument);
    EXPECT_THROW(self_route(net, make_request("010", "11", 3, 3)),
                 std::invalid_argument);
}

TEST(WavelengthSequenceTest, ReferenceSequences) {
    EXPECT_EQ(wavelength_sequence(make_request("010", "111", 3, 3)),
              (std::vector<int>{0, 2, 1, 2}));
    EXPECT_EQ(wavelength_sequence(make_request("000", "000", 3, 3)),
              (std::vector<int>{0, 0, 0, 0}));
    EXPECT_EQ(wavelength_sequence(make_request("101", "002", 3, 3)),
              (std::vector<int>{2, 0, 1, 2}));
    EXPECT_EQ(wavelength_sequence(make_request("011", "000", 3, 3)),
              (std::vector<int>{1, 1, 1, 0}));
}

TEST(SelfRouteTest, TotalityAndSequenceConsistencyExhaustive) {
    for (int m = 2; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            SenNetwork net = build_sen(m, n);
            const std::uint64_t count = net.channel_count();
            for (std::uint64_t s = 0; s < count; ++s) {
                for (std::uint64_t d = 0; d < count; ++d) {
                    Request req{from_integer(s, m, n), from_integer(d, m, n)};
                    Route route = self_route(net, req);
                    ASSERT_EQ(route.hops.size(), static_cast<std::size_t>(n) + 1);
                    EXPECT_EQ(route.hops.front().in, req.src);
                    EXPECT_EQ(route.hops.back().in, req.dst);
                    std::vector<int> seq = wavelength_sequence(req);
                    ASSERT_EQ(seq.size(), route.hops.size());
                    for (std::size_t k = 0; k < seq.size(); ++k) {
                        EXPECT_EQ(route.hops[k].lambda, seq[k]);
                    }
                    for (int k = 0; k < n; ++k) {
                        EXPECT_EQ(route.hops[static_cast<std::size_t>(k)].out,
                                  rotate_left(route.hops[static_cast<std::size_t>(k)].in));
                        // wavelength exchange stays on the fiber
                        EXPECT_EQ(
                            field_to_tuple(route.hops[static_cast<std::size_t>(k) + 1].in)
                                .fiber,
                            field_to_tuple(route.hops[static_cast<std::size_t>(k)].out)
                                .fiber);
                    }
                }
            }
        }
    }
}

TEST(DetectContentionsTest, KnownContendingPair) {
    SenNetwork net = build_sen(3, 3);
    RequestSet set = make_set({{"011", "000"}, {"101", "002"}}, 3, 3);
    std::vector<Contention> found = detect_contentions(net, set);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].channel.stage, 2);
    EXPECT_EQ(found[0].channel.fiber, 3u);  // fiber "10"
    EXPECT_EQ(found[0].channel.wavelength, 1);
    EXPECT_EQ(to_text(found[0].first.src), "011");
    EXPECT_EQ(to_text(found[0].second.src), "101");
}

TEST(DetectContentionsTest, SingletonIsFree) {
    SenNetwork net = build_sen(3, 3);
    EXPECT_TRUE(detect_contentions(net, make_set({{"012", "201"}}, 3, 3)).empty());
}

TEST(DetectContentionsTest, SevenRequestExampleIsFree) {
    SenNetwork net = build_sen(3, 3);
    RequestSet set = example_seven_requests();
    EXPECT_TRUE(is_monotonic(set));
    EXPECT_TRUE(is_concentrated(set));
    EXPECT_TRUE(detect_contentions(net, set).empty());
}

TEST(DetectContentionsTest, DuplicateEndpointsRejected) {
    SenNetwork net = build_sen(3, 3);
    EXPECT_THROW(
        detect_contentions(net, make_set({{"000", "001"}, {"000", "002"}}, 3, 3)),
        std::invalid_argument);
    EXPECT_THROW(
        detect_contentions(net, make_set({{"000", "001"}, {"001", "001"}}, 3, 3)),
        std::invalid_argument);
    EXPECT_THROW(
        detect_contentions(net, make_set({{"00", "01"}}, 3, 2)),
        std::invalid_argument);
}

TEST(DetectContentionsTest, ReportIndependentOfRequestOrder) {
    SenNetwork net = build_sen(3, 3);
    RequestSet base = make_set(
        {{"011", "000"}, {"101", "002"}, {"012", "100"}, {"202", "222"}}, 3, 3);
    std::vector<Contention> reference = detect_contentions(net, base);

    std::vector<std::size_t> order{0, 1, 2, 3};
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        RequestSet shuffled;
        shuffled.m = base.m;
        shuffled.n = base.n;
        for (std::size_t idx : order) {
            shuffled.requests.push_back(base.requests[idx]);
        }
        std::vector<Contention> got = detect_contentions(net, shuffled);
        ASSERT_EQ(got.size(), reference.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].channel, reference[i].channel);
            EXPECT_EQ(got[i].first, reference[i].first);
            EXPECT_EQ(got[i].second, reference[i].second);
        }
    }
}

TEST(MonotonicTest, Examples) {
    EXPECT_TRUE(is_monotonic(example_seven_requests()));
    EXPECT_TRUE(is_monotonic(make_set({{"012", "201"}}, 3, 3)));
    // decreasing destinations count as monotonic too
    EXPECT_TRUE(is_monotonic(
        make_set({{"000", "222"}, {"001", "111"}, {"002", "000"}}, 3, 3)));
    EXPECT_FALSE(is_monotonic(
        make_set({{"000", "010"}, {"001", "222"}, {"002", "100"}}, 3, 3)));
    EXPECT_THROW(is_monotonic(make_set({{"000", "001"}, {"001", "001"}}, 3, 3)),
                 std::invalid_argument);
}

TEST(ConcentratedTest, Examples) {
    EXPECT_TRUE(is_concentrated(example_seven_requests()));
    EXPECT_TRUE(is_concentrated(make_set({{"012", "201"}}, 3, 3)));
    EXPECT_FALSE(is_concentrated(make_set({{"000", "000"}, {"002", "001"}}, 3, 3)));
    // order of arrival does not matter
    EXPECT_TRUE(is_concentrated(
        make_set({{"002", "000"}, {"000", "001"}, {"001", "002"}}, 3, 3)));
}

TEST(ConverseWitnessTest, ContendingPairIsNotConcentrated) {
    RequestSet pair = make_set({{"011", "000"}, {"101", "002"}}, 3, 3);
    EXPECT_TRUE(is_monotonic(pair));
    EXPECT_FALSE(is_concentrated(pair));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

// Window/assignment count the enumerator must visit: every source window of
// every length, every destination combination, increasing and decreasing,
// with the two directions coinciding for single requests.
std::uint64_t expected_set_count(std::uint64_t total) {
    std::uint64_t sum = 0;
    for (std::uint64_t len = 1; len <= total; ++len) {
        std::uint64_t windows = total - len + 1;
        std::uint64_t directions = len == 1 ? 1 : 2;
        sum += windows * binomial(total, len) * directions;
    }
    return sum;
}

TEST(NonblockingTest, SmallNetworksAreContentionFree) {
    NonblockingReport r22 = verify_nonblocking(2, 2);
    EXPECT_EQ(r22.violations, 0u);
    EXPECT_EQ(r22.sets_tested, expected_set_count(4));
    EXPECT_EQ(r22.sets_tested, 70u);

    NonblockingReport r21 = verify_nonblocking(2, 1);
    EXPECT_EQ(r21.violations, 0u);
    EXPECT_EQ(r21.sets_tested, expected_set_count(2));
}

TEST(NonblockingTest, ProofShapeBoundsOnRandomCollisions) {
    // override with AWGSEN_TEST_SEED; the default keeps runs reproducible
    unsigned seed = 12345;
    if (const char* env = std::getenv("AWGSEN_TEST_SEED")) {
        seed = static_cast<unsigned>(std::stoul(env));
    }
    std::mt19937 rng(seed);
    int collisions_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int m = trial % 2 == 0 ? 3 : 2;
        int n = 3;
        SenNetwork net = build_sen(m, n);
        std::uint64_t total = net.channel_count();
        std::vector<std::uint64_t> sources(total);
        std::vector<std::uint64_t> dests(total);
        for (std::uint64_t i = 0; i < total; ++i) {
            sources[i] = i;
            dests[i] = i;
        }
        std::shuffle(sources.begin(), sources.end(), rng);
        std::shuffle(dests.begin(), dests.end(), rng);
        std::uint64_t len = 2 + rng() % (total - 2);
        RequestSet set;
        set.m = m;
        set.n = n;
        for (std::uint64_t i = 0; i < len; ++i) {
            set.requests.push_back(
                Request{from_integer(sources[i], m, n), from_integer(dests[i], m, n)});
        }
        for (const Contention& c : detect_contentions(net, set)) {
            ++collisions_seen;
            ASSERT_GE(c.channel.stage, 1);
            ASSERT_LE(c.channel.stage, n - 1);  // distinct outputs cannot clash later
            std::uint64_t bound = 1;
            for (int i = 0; i < n - c.channel.stage; ++i) {
                bound *= static_cast<std::uint64_t>(m);
            }
            std::uint64_t s0 = to_integer(c.first.src);
            std::uint64_t s1 = to_integer(c.second.src);
            std::uint64_t d0 = to_integer(c.first.dst);
            std::uint64_t d1 = to_integer(c.second.dst);
            std::uint64_t source_gap = s1 > s0 ? s1 - s0 : s0 - s1;
            std::uint64_t dest_gap = d1 > d0 ? d1 - d0 : d0 - d1;
            EXPECT_GE(source_gap, bound);
            EXPECT_LE(dest_gap, bound - 1);
        }
    }
    EXPECT_GT(collisions_seen, 100);  // the negative sampling really fired
}

TEST(UtilizationTest, FullLoadFillsEveryChannelOnce) {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 3}}) {
        SenNetwork net = build_sen(m, n);
        Utilization u = full_load_utilization(net);
        EXPECT_EQ(u.busy, u.capacity) << "S(" << m << "," << n << ")";
        EXPECT_TRUE(u.single_loaded);
        EXPECT_TRUE(u.full());
        EXPECT_DOUBLE_EQ(u.value(), 1.0);
        EXPECT_EQ(u.capacity,
                  (2 * static_cast<std::uint64_t>(n) + 1) * net.channel_count());
    }
}

TEST(UtilizationTest, IdentityPermutationIsMonotonicAndConcentrated) {
    SenNetwork net = build_sen(2, 3);
    RequestSet identity;
    identity.m = 2;
    identity.n = 3;
    for (std::uint64_t v = 0; v < net.channel_count(); ++v) {
        identity.requests.push_back(
            Request{from_integer(v, 2, 3), from_integer(v, 2, 3)});
    }
    EXPECT_TRUE(is_monotonic(identity));
    EXPECT_TRUE(is_concentrated(identity));
    EXPECT_TRUE(detect_contentions(net, identity).empty());
}

}  // namespace
