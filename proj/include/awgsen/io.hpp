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

#include <string>
#include <vector>

#include <json.hpp>

#include "awgsen/address.hpp"
#include "awgsen/metrics.hpp"
#include "awgsen/modular_shuffle.hpp"
#include "awgsen/rwa.hpp"
#include "awgsen/sen.hpp"
#include "awgsen/table_render.hpp"

namespace awgsen {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON descriptors
// ---------------------------------------------------------------------------

inline json to_json(const ModularShuffle& w) {
    json wiring = json::array();
    for (const WInputLink& link : w.wiring()) {
        wiring.push_back({{"group", link.group},
                          {"port", link.port},
                          {"awg", link.awg},
                          {"awg_input", link.awg_input}});
    }
    json labels = json::array();
    for (const WOutputLabel& label : w.output_labels()) {
        labels.push_back({{"group", label.group},
                          {"awg", label.awg},
                          {"awg_output", label.awg_output}});
    }
    return {{"m", w.m()}, {"r", w.r()}, {"wiring", wiring}, {"output_labels", labels}};
}

inline ModularShuffle modular_shuffle_from_json(const json& j) {
    ModularShuffle w(j.at("m").get<int>(), j.at("r").get<int>());
    const json& wiring = j.at("wiring");
    if (wiring.size() != w.wiring().size()) {
        throw std::invalid_argument("wiring entry count does not match m and r");
    }
    for (std::size_t i = 0; i < wiring.size(); ++i) {
        const json& e = wiring[i];
        WInputLink link{e.at("group").get<int>(), e.at("port").get<int>(),
                        e.at("awg").get<int>(), e.at("awg_input").get<int>()};
        if (!(link == w.wiring()[i])) {
            throw std::invalid_argument("wiring entry " + std::to_string(i) +
                                        " does not describe this construction");
        }
    }
    const json& labels = j.at("output_labels");
    if (labels.size() != w.output_labels().size()) {
        throw std::invalid_argument("output label count does not match m and r");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const json& e = labels[i];
        WOutputLabel label{e.at("group").get<int>(), e.at("awg").get<int>(),
                           e.at("awg_output").get<int>()};
        if (!(label == w.output_labels()[i])) {
            throw std::invalid_argument("output label " + std::to_string(i) +
                                        " does not describe this construction");
        }
    }
    return w;
}

inline json to_json(const SenNetwork& net) {
    json stages = json::array();
    for (int k = 0; k < net.stage_count(); ++k) {
        json stage = {{"index", k}};
        if (net.n() >= 2) {
            stage["shuffle"] = to_json(net.stages()[static_cast<std::size_t>(k)]);
        } else {
            stage["shuffle"] = nullptr;
        }
        stages.push_back(stage);
    }
    return {{"m", net.m()}, {"n", net.n()}, {"stages", stages}};
}

inline SenNetwork sen_from_json(const json& j,
                                std::uint64_t channel_limit = kDefaultChannelLimit) {
    SenNetwork net(j.at("m").get<int>(), j.at("n").get<int>(), channel_limit);
    const json& stages = j.at("stages");
    if (static_cast<int>(stages.size()) != net.stage_count()) {
        throw std::invalid_argument("stage count does not match n");
    }
    for (int k = 0; k < net.stage_count(); ++k) {
        const json& stage = stages[static_cast<std::size_t>(k)];
        if (stage.at("index").get<int>() != k) {
            throw std::invalid_argument("stages are out of order");
        }
        const json& shuffle = stage.at("shuffle");
        if (net.n() >= 2) {
            ModularShuffle w = modular_shuffle_from_json(shuffle);
            if (!(w == net.stages()[static_cast<std::size_t>(k)])) {
                throw std::invalid_argument("stage " + std::to_string(k) +
                                            " does not match the construction");
            }
        } else if (!shuffle.is_null()) {
            throw std::invalid_argument("a single-stage network has no shuffle fabric");
        }
    }
    return net;
}

inline json to_json(const RequestSet& set) {
    json requests = json::array();
    for (const Request& r : set.requests) {
        requests.push_back({{"src", to_text(r.src)}, {"dst", to_text(r.dst)}});
    }
    return {{"m", set.m}, {"n", set.n}, {"requests", requests}};
}

inline RequestSet request_set_from_json(const json& j) {
    RequestSet set;
    set.m = j.at("m").get<int>();
    set.n = j.at("n").get<int>();
    for (const json& e : j.at("requests")) {
        set.requests.push_back(
            Request{parse_address(e.at("src").get<std::string>(), set.m, set.n),
                    parse_address(e.at("dst").get<std::string>(), set.m, set.n)});
    }
    return set;
}

inline json to_json(const Request& req, const Route& route) {
    json hops = json::array();
    for (std::size_t k = 0; k < route.hops.size(); ++k) {
        const RouteHop& hop = route.hops[k];
        hops.push_back({{"stage", static_cast<int>(k)},
                        {"in", to_text(hop.in)},
                        {"out", to_text(hop.out)},
                        {"lambda", hop.lambda}});
    }
    return {{"m", req.src.base()},
            {"n", req.src.width()},
            {"src", to_text(req.src)},
            {"dst", to_text(req.dst)},
            {"hops", hops}};
}

inline json to_json(const std::vector<Contention>& contentions, const RequestSet& set) {
    json list = json::array();
    for (const Contention& c : contentions) {
        list.push_back(
            {{"stage", c.channel.stage},
             {"side", "input"},
             {"fiber",
              set.n >= 2 ? to_text(from_integer(c.channel.fiber, set.m, set.n - 1))
                         : std::string("0")},
             {"lambda", c.channel.wavelength},
             {"first", {{"src", to_text(c.first.src)}, {"dst", to_text(c.first.dst)}}},
             {"second",
              {{"src", to_text(c.second.src)}, {"dst", to_text(c.second.dst)}}}});
    }
    return {{"m", set.m},
            {"n", set.n},
            {"request_count", set.requests.size()},
            {"contention_free", contentions.empty()},
            {"contentions", list}};
}

inline json to_json(const NonblockingReport& rep) {
    return {{"m", rep.m},
            {"n", rep.n},
            {"sets_tested", rep.sets_tested},
            {"violations", rep.violations}};
}

inline json to_json(const MetricsReport& rep) {
    return {{"port_count", rep.port_count},
            {"awg_count", rep.awg_count},
            {"awg_size", rep.awg_size},
            {"twc_count", rep.twc_count},
            {"twc_module_count", rep.twc_module_count},
            {"conversion_range", rep.conversion_range},
            {"wavelength_granularity", rep.wavelength_granularity},
            {"internal_fiber_count", rep.internal_fiber_count},
            {"classical_fiber_count", rep.classical_fiber_count},
            {"crosstalk_flag", rep.crosstalk_flag}};
}

// ---------------------------------------------------------------------------
// Plain-text reports
// ---------------------------------------------------------------------------

/// Per-hop trace of one route, one stage or boundary per line.
inline std::string route_to_text(const Request& req, const Route& route) {
    const int n = req.src.width();
    std::string out = "R(" + to_text(req.src) + "," + to_text(req.dst) + ") in S(" +
                      std::to_string(req.src.base()) + "," + std::to_string(n) + ")\n";
    for (int k = 0; k < n; ++k) {
        const RouteHop& hop = route.hops[static_cast<std::size_t>(k)];
        out += "  W" + std::to_string(k) + "  " + to_text(hop.in) + " -> " +
               to_text(hop.out) + "  [" + lambda_cell(hop.lambda) + "]\n";
        const FieldAddress& next = route.hops[static_cast<std::size_t>(k) + 1].in;
        out += "  b" + std::to_string(k) + "  " + to_text(hop.out) + " -> " +
               to_text(next) + "\n";
    }
    const RouteHop& last = route.hops.back();
    out += "  out " + to_text(last.in) + "  [" + lambda_cell(last.lambda) + "]\n";
    return out;
}

inline std::string contentions_to_text(const std::vector<Contention>& contentions,
                                       const RequestSet& set) {
    if (contentions.empty()) {
        return "contention-free: " + std::to_string(set.requests.size()) +
               " request(s) routed\n";
    }
    std::string out;
    for (const Contention& c : contentions) {
        std::string fiber =
            set.n >= 2 ? to_text(from_integer(c.channel.fiber, set.m, set.n - 1))
                       : std::string("0");
        out += "contention: stage " + std::to_string(c.channel.stage) +
               " input, fiber " + fiber + ", " + lambda_cell(c.channel.wavelength) +
               ": R(" + to_text(c.first.src) + "," + to_text(c.first.dst) + ") vs R(" +
               to_text(c.second.src) + "," + to_text(c.second.dst) + ")\n";
    }
    return out;
}

inline std::string nonblocking_report_to_text(const NonblockingReport& rep) {
    return "S(" + std::to_string(rep.m) + "," + std::to_string(rep.n) +
           "): " + std::to_string(rep.sets_tested) +
           " monotonic+concentrated sets tested, " + std::to_string(rep.violations) +
           " with contentions\n";
}

inline std::string metrics_to_text(const MetricsReport& rep) {
    std::string out;
    out += "ports:              " + std::to_string(rep.port_count) + "\n";
    out += "awg count:          " + std::to_string(rep.awg_count) + " (size " +
           std::to_string(rep.awg_size) + "x" + std::to_string(rep.awg_size) + ")\n";
    out += "twc modules:        " + std::to_string(rep.twc_module_count) + "\n";
    out += "twc count:          " + std::to_string(rep.twc_count) + "\n";
    out += "conversion range:   " + std::to_string(rep.conversion_range) + "\n";
    out += "wavelengths:        " + std::to_string(rep.wavelength_granularity) + "\n";
    out += "fibers per shuffle: " + std::to_string(rep.internal_fiber_count) +
           " (classical wiring: " + std::to_string(rep.classical_fiber_count) + ")\n";
    out += "crosstalk flag:     " + std::string(rep.crosstalk_flag ? "yes" : "no") +
           "\n";
    return out;
}

// ---------------------------------------------------------------------------
// DOT emission
// ---------------------------------------------------------------------------

/// All internal fibers of a modular shuffle carry the full shared set.
inline std::string fiber_wavelengths_label(int m) {
    std::string label;
    for (int i = 0; i < m; ++i) {
        if (i > 0) {
            label += ",";
        }
        label += lambda_cell(i);
    }
    return label;
}

/// AWGs as nodes, internal fibers as edges labeled with the wavelengths
/// they carry; input groups on the left, singleton output groups on the right.
inline std::string to_dot(const ModularShuffle& w) {
    std::string waves = fiber_wavelengths_label(w.m());
    std::string out = "digraph shuffle {\n  rankdir=LR;\n";
    for (int p = 0; p < w.m(); ++p) {
        out += "  in" + std::to_string(p) + " [shape=plaintext,label=\"group " +
               std::to_string(p) + "\"];\n";
    }
    for (int a = 0; a < w.r(); ++a) {
        out += "  awg" + std::to_string(a) + " [shape=box,label=\"AWG " +
               std::to_string(a) + "\"];\n";
    }
    for (int q = 0; q < w.fiber_count(); ++q) {
        out += "  out" + std::to_string(q) + " [shape=plaintext,label=\"out " +
               std::to_string(q) + "\"];\n";
    }
    for (const WInputLink& link : w.wiring()) {
        out += "  in" + std::to_string(link.group) + " -> awg" +
               std::to_string(link.awg) + " [label=\"" + waves + "\"];\n";
    }
    for (const WOutputLabel& label : w.output_labels()) {
        out += "  awg" + std::to_string(label.awg) + " -> out" +
               std::to_string(label.group) + " [label=\"" + waves + "\"];\n";
    }
    out += "}\n";
    return out;
}

/// Stages as clusters, converter columns between them, one edge per fiber.
inline std::string to_dot(const SenNetwork& net) {
    const std::uint64_t fibers = net.fibers_per_side();
    std::string waves = fiber_wavelengths_label(net.m());
    std::string out = "digraph sen {\n  rankdir=LR;\n";
    for (std::uint64_t f = 0; f < fibers; ++f) {
        out += "  in" + std::to_string(f) + " [shape=plaintext,label=\"in " +
               std::to_string(f) + "\"];\n";
    }
    for (int k = 0; k < net.stage_count(); ++k) {
        std::string sk = std::to_string(k);
        if (net.n() >= 2) {
            const ModularShuffle& w = net.stages()[static_cast<std::size_t>(k)];
            out += "  subgraph cluster_stage" + sk + " {\n    label=\"W" + sk +
                   "\";\n";
            for (int a = 0; a < w.r(); ++a) {
                out += "    awg" + sk + "_" + std::to_string(a) +
                       " [shape=box,label=\"AWG " + std::to_string(a) + "\"];\n";
            }
            out += "  }\n";
        }
        for (std::uint64_t q = 0; q < fibers; ++q) {
            out += "  twc" + sk + "_" + std::to_string(q) +
                   " [shape=diamond,label=\"TWC " + std::to_string(q) + "\"];\n";
        }
    }
    for (std::uint64_t f = 0; f < fibers; ++f) {
        out += "  out" + std::to_string(f) + " [shape=plaintext,label=\"out " +
               std::to_string(f) + "\"];\n";
    }
    for (int k = 0; k < net.stage_count(); ++k) {
        std::string sk = std::to_string(k);
        auto src_node = [&](std::uint64_t fiber) {
            return k == 0 ? "in" + std::to_string(fiber)
                          : "twc" + std::to_string(k - 1) + "_" + std::to_string(fiber);
        };
        if (net.n() >= 2) {
            const ModularShuffle& w = net.stages()[static_cast<std::size_t>(k)];
            for (const WInputLink& link : w.wiring()) {
                std::uint64_t fiber =
                    static_cast<std::uint64_t>(link.group) * w.r() + link.port;
                out += "  " + src_node(fiber) + " -> awg" + sk + "_" +
                       std::to_string(link.awg) + " [label=\"" + waves + "\"];\n";
            }
            for (const WOutputLabel& label : w.output_labels()) {
                out += "  awg" + sk + "_" + std::to_string(label.awg) + " -> twc" +
                       sk + "_" + std::to_string(label.group) + " [label=\"" + waves +
                       "\"];\n";
            }
        } else {
            out += "  " + src_node(0) + " -> twc" + sk + "_0 [label=\"" + waves +
                   "\"];\n";
        }
    }
    for (std::uint64_t f = 0; f < fibers; ++f) {
        out += "  twc" + std::to_string(net.stage_count() - 1) + "_" +
               std::to_string(f) + " -> out" + std::to_string(f) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace awgsen
