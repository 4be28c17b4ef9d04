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
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "awgsen/awgsen.hpp"

namespace {

// exit codes: 0 success / contention-free, 2 contentions or violations,
// 3 invalid input, 4 resource guard
constexpr int kOk = 0;
constexpr int kContention = 2;
constexpr int kInvalidInput = 3;
constexpr int kResourceGuard = 4;

struct TableOptions {
    int m = 0;
    int l = 0;
    int r = 0;
    std::string kind = "routing";
    std::string format = "csv";
};

struct BuildOptions {
    int m = 0;
    int n = 0;
    int r = 0;
    std::string format = "json";
    std::uint64_t limit = awgsen::kDefaultChannelLimit;
};

struct RouteOptions {
    int m = 0;
    int n = 0;
    std::string src;
    std::string dst;
    std::string format = "text";
    std::uint64_t limit = awgsen::kDefaultChannelLimit;
};

struct CheckOptions {
    std::string set_path;
    int m = 0;
    int n = 0;
    std::string format = "text";
    std::uint64_t limit = awgsen::kDefaultChannelLimit;
};

struct VerifyOptions {
    int m = 0;
    int n = 0;
    std::string format = "text";
    std::uint64_t limit = awgsen::kDefaultChannelLimit;
};

struct MetricsOptions {
    int m = 0;
    int n = 0;
    int r = 0;
    std::string format = "text";
    std::uint64_t limit = awgsen::kDefaultChannelLimit;
};

int run_table(const TableOptions& opt) {
    if ((opt.l > 0) == (opt.r > 0)) {
        throw std::invalid_argument("table needs exactly one of --l or --r");
    }
    awgsen::TableFormat format = awgsen::parse_table_format(opt.format);
    if (opt.kind != "routing" && opt.kind != "connectivity") {
        throw std::invalid_argument("unknown table kind '" + opt.kind + "'");
    }
    if (opt.l > 0) {
        awgsen::AwgSpec spec(opt.m, opt.l);
        if (opt.kind == "routing") {
            std::cout << awgsen::render_table(awgsen::build_routing_table(spec), format);
        } else {
            std::cout << awgsen::render_table(awgsen::build_connectivity_table(spec),
                                              format);
        }
    } else {
        if (opt.kind == "routing") {
            std::cout << awgsen::render_table(awgsen::build_modular_table(opt.m, opt.r),
                                              format);
        } else {
            std::cout << awgsen::render_table(
                awgsen::build_w_connectivity_table(awgsen::build_w(opt.m, opt.r)),
                format);
        }
    }
    return kOk;
}

int run_build(const BuildOptions& opt) {
    if ((opt.n > 0) == (opt.r > 0)) {
        throw std::invalid_argument("build needs exactly one of --n or --r");
    }
    if (opt.format != "json" && opt.format != "dot") {
        throw std::invalid_argument("unknown topology format '" + opt.format + "'");
    }
    if (opt.n > 0) {
        awgsen::SenNetwork net = awgsen::build_sen(opt.m, opt.n, opt.limit);
        if (opt.format == "json") {
            std::cout << awgsen::to_json(net).dump(2) << "\n";
        } else {
            std::cout << awgsen::to_dot(net);
        }
    } else {
        awgsen::ModularShuffle w = awgsen::build_w(opt.m, opt.r);
        if (opt.format == "json") {
            std::cout << awgsen::to_json(w).dump(2) << "\n";
        } else {
            std::cout << awgsen::to_dot(w);
        }
    }
    return kOk;
}

int run_route(const RouteOptions& opt) {
    awgsen::SenNetwork net = awgsen::build_sen(opt.m, opt.n, opt.limit);
    awgsen::Request req{awgsen::parse_address(opt.src, opt.m, opt.n),
                        awgsen::parse_address(opt.dst, opt.m, opt.n)};
    awgsen::Route route = awgsen::self_route(net, req);
    if (opt.format == "json") {
        std::cout << awgsen::to_json(req, route).dump(2) << "\n";
    } else if (opt.format == "text") {
        std::cout << awgsen::route_to_text(req, route);
    } else {
        throw std::invalid_argument("unknown route format '" + opt.format + "'");
    }
    return kOk;
}

awgsen::json read_json_stream(const std::string& path) {
    if (path == "-") {
        return awgsen::json::parse(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    return awgsen::json::parse(in);
}

int run_check(const CheckOptions& opt) {
    awgsen::RequestSet set = awgsen::request_set_from_json(read_json_stream(opt.set_path));
    if (opt.m > 0 && opt.m != set.m) {
        throw std::invalid_argument("--m does not match the request set");
    }
    if (opt.n > 0 && opt.n != set.n) {
        throw std::invalid_argument("--n does not match the request set");
    }
    awgsen::SenNetwork net = awgsen::build_sen(set.m, set.n, opt.limit);
    std::vector<awgsen::Contention> found = awgsen::detect_contentions(net, set);
    if (opt.format == "json") {
        std::cout << awgsen::to_json(found, set).dump(2) << "\n";
    } else if (opt.format == "text") {
        std::cout << awgsen::contentions_to_text(found, set);
    } else {
        throw std::invalid_argument("unknown report format '" + opt.format + "'");
    }
    return found.empty() ? kOk : kContention;
}

int run_verify(const VerifyOptions& opt) {
    awgsen::NonblockingReport report = awgsen::verify_nonblocking(opt.m, opt.n, opt.limit);
    if (opt.format == "json") {
        std::cout << awgsen::to_json(report).dump(2) << "\n";
    } else if (opt.format == "text") {
        std::cout << awgsen::nonblocking_report_to_text(report);
    } else {
        throw std::invalid_argument("unknown report format '" + opt.format + "'");
    }
    return report.violations == 0 ? kOk : kContention;
}

int run_metrics(const MetricsOptions& opt) {
    if ((opt.n > 0) == (opt.r > 0)) {
        throw std::invalid_argument("metrics needs exactly one of --n or --r");
    }
    awgsen::MetricsReport report =
        opt.n > 0 ? awgsen::compute_metrics(awgsen::build_sen(opt.m, opt.n, opt.limit))
                  : awgsen::compute_metrics(awgsen::build_w(opt.m, opt.r));
    if (opt.format == "json") {
        std::cout << awgsen::to_json(report).dump(2) << "\n";
    } else if (opt.format == "text") {
        std::cout << awgsen::metrics_to_text(report);
    } else {
        throw std::invalid_argument("unknown report format '" + opt.format + "'");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AWG-based WDM shuffle-exchange network toolkit"};
    app.require_subcommand(1);

    TableOptions table_opt;
    CLI::App* table = app.add_subcommand(
        "table", "Emit a wavelength routing or connectivity table");
    table->add_option("--m", table_opt.m, "AWG input count / wavelength set size")
        ->required();
    table->add_option("--l", table_opt.l, "output count of a single AWG");
    table->add_option("--r", table_opt.r, "AWG count of a modular shuffle");
    table->add_option("--kind", table_opt.kind, "routing | connectivity");
    table->add_option("--format", table_opt.format, "csv | text | markdown");

    BuildOptions build_opt;
    CLI::App* build =
        app.add_subcommand("build", "Construct a fabric and emit its topology");
    build->add_option("--m", build_opt.m, "wavelength set size")->required();
    build->add_option("--n", build_opt.n, "stage count of a shuffle-exchange network");
    build->add_option("--r", build_opt.r, "AWG count of a modular shuffle");
    build->add_option("--format", build_opt.format, "json | dot");
    build->add_option("--limit", build_opt.limit, "channel-count guard");

    RouteOptions route_opt;
    CLI::App* route = app.add_subcommand("route", "Trace one self-routed request");
    route->add_option("--m", route_opt.m, "wavelength set size")->required();
    route->add_option("--n", route_opt.n, "stage count")->required();
    route->add_option("--src", route_opt.src, "source channel address")->required();
    route->add_option("--dst", route_opt.dst, "destination channel address")
        ->required();
    route->add_option("--format", route_opt.format, "text | json");
    route->add_option("--limit", route_opt.limit, "channel-count guard");

    CheckOptions check_opt;
    CLI::App* check =
        app.add_subcommand("check", "Route a request set and report contentions");
    check->add_option("--set", check_opt.set_path, "request-set JSON file, - for stdin")
        ->required();
    check->add_option("--m", check_opt.m, "expected wavelength set size");
    check->add_option("--n", check_opt.n, "expected stage count");
    check->add_option("--format", check_opt.format, "text | json");
    check->add_option("--limit", check_opt.limit, "channel-count guard");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Exhaust all monotonic+concentrated request sets");
    verify->add_option("--m", verify_opt.m, "wavelength set size")->required();
    verify->add_option("--n", verify_opt.n, "stage count")->required();
    verify->add_option("--format", verify_opt.format, "text | json");
    verify->add_option("--limit", verify_opt.limit, "channel-count guard");

    MetricsOptions metrics_opt;
    CLI::App* metrics =
        app.add_subcommand("metrics", "Report device counts and scalability figures");
    metrics->add_option("--m", metrics_opt.m, "wavelength set size")->required();
    metrics->add_option("--n", metrics_opt.n, "stage count of a network");
    metrics->add_option("--r", metrics_opt.r, "AWG count of a modular shuffle");
    metrics->add_option("--format", metrics_opt.format, "text | json");
    metrics->add_option("--limit", metrics_opt.limit, "channel-count guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (table->parsed()) {
            return run_table(table_opt);
        }
        if (build->parsed()) {
            return run_build(build_opt);
        }
        if (route->parsed()) {
            return run_route(route_opt);
        }
        if (check->parsed()) {
            return run_check(check_opt);
        }
        if (verify->parsed()) {
            return run_verify(verify_opt);
        }
        if (metrics->parsed()) {
            return run_metrics(metrics_opt);
        }
    } catch (const awgsen::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const awgsen::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}
