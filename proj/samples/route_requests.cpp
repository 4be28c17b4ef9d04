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

// Routes a pair of requests through a 27-channel network, shows their
// contention, then verifies the nonblocking condition on a smaller network.

#include <iostream>

#include "awgsen/awgsen.hpp"

int main() {
    using namespace awgsen;

    SenNetwork net = build_sen(3, 3);
    Request first{parse_address("011", 3, 3), parse_address("000", 3, 3)};
    Request second{parse_address("101", 3, 3), parse_address("002", 3, 3)};

    std::cout << route_to_text(first, self_route(net, first)) << "\n"
              << route_to_text(second, self_route(net, second)) << "\n";

    RequestSet set;
    set.m = 3;
    set.n = 3;
    set.requests = {first, second};
    std::cout << contentions_to_text(detect_contentions(net, set), set) << "\n";

    std::cout << nonblocking_report_to_text(verify_nonblocking(2, 2));
    return 0;
}
