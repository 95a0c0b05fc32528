// Copyright 2026 The hitwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hitwalk/io.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hitwalk/classical.h"
#include "hitwalk/errors.h"
#include "hitwalk/optimizer.h"
#include "hitwalk/parallel.h"
#include "hitwalk/reference.h"
#include "hitwalk/trajectories.h"

namespace hitwalk::cli {

using nlohmann::json;

namespace {

Complex parse_complex(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw InvalidArgument("empty coin amplitude");
    auto number = [](const std::string &t) {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception &) {
            throw InvalidArgument("cannot parse number '" + t + "'");
        }
        if (used != t.size()) throw InvalidArgument("cannot parse number '" + t + "'");
        return v;
    };
    if (s.back() != 'i') return {number(s), 0.0};
    s.pop_back();
    // Split "re+im" at the last sign that is not a leading sign or exponent sign.
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            const std::string im = s.substr(k);
            return {number(s.substr(0, k)), im == "+" ? 1.0 : im == "-" ? -1.0 : number(im)};
        }
    }
    if (s.empty() || s == "+") return {0.0, 1.0};
    if (s == "-") return {0.0, -1.0};
    return {0.0, number(s)};
}

MhtMethod parse_method(const std::string &name) {
    if (name == "resolvent") return MhtMethod::resolvent;
    if (name == "series") return MhtMethod::series;
    if (name == "mc") return MhtMethod::monte_carlo;
    throw InvalidArgument("unknown method '" + name + "'");
}

std::vector<std::size_t> parse_index_list(const std::string &spec) {
    std::vector<std::size_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception &) {
            throw InvalidArgument("bad time index '" + item + "'");
        }
    }
    return out;
}

json mht_input(const MhtRequest &r, double p, double q, MhtMethod method) {
    json in = {{"targets", {r.x_left, r.x_right}}, {"start", r.x_start}, {"coin", r.coin},
               {"reset_p", p}, {"noise_q", q}};
    if (method == MhtMethod::monte_carlo) {
        in["seed"] = r.seed;
        in["trajectories"] = r.trajectories;
        in["max_steps"] = r.max_steps;
    }
    if (method == MhtMethod::series) in["tail_epsilon"] = r.tail_epsilon;
    return in;
}

struct Output {
    std::optional<std::string> path;
    std::string format = "csv";
};

std::filesystem::path resolve_output(const Output &o, const std::string &command, const std::string &ext) {
    if (o.path) return *o.path;
    const char *dir = std::getenv("HITWALK_OUT_DIR");
    return std::filesystem::path(dir) / (command + "." + ext);
}

bool writes_to_stdout(const Output &o) { return !o.path && std::getenv("HITWALK_OUT_DIR") == nullptr; }

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f << text;
    if (!f) throw IoError("failed writing '" + path.string() + "'");
}

void emit(const Output &o, const std::string &command, const std::string &ext, const std::string &text,
          std::ostream &out) {
    if (writes_to_stdout(o)) {
        out << text;
        return;
    }
    write_text(resolve_output(o, command, ext), text);
}

std::string dump(const json &doc) { return doc.dump(2) + "\n"; }

std::string model_name(WalkModel m) { return m == WalkModel::classical ? "classical" : "quantum"; }

// ---------------------------------------------------------------------------

int cmd_mht(const MhtRequest &request, const Output &o, std::ostream &out) {
    const std::vector<MhtRow> rows = run_mht(request);
    if (o.format == "json") {
        std::vector<ResultRecord> records;
        for (const MhtRow &row : rows) {
            ResultRecord rec;
            rec.command = "mht";
            rec.input = mht_input(request, row.p, row.q, row.method);
            rec.method = to_string(row.method);
            rec.values = {{"mht", row.mht}};
            rec.diagnostics = {{row.diagnostic_name, row.diagnostic}};
            rec.timestamp = timestamp_now();
            records.push_back(std::move(rec));
        }
        emit(o, "mht", "json", dump(records_document(records)), out);
        return kExitOk;
    }
    std::string text = "p,q,method,mht,diagnostic\n";
    for (const MhtRow &row : rows) {
        text += csv_number(row.p) + "," + csv_number(row.q) + "," + csv_field(to_string(row.method)) + "," +
                csv_number(row.mht) + "," + csv_number(row.diagnostic) + "\n";
    }
    emit(o, "mht", "csv", text, out);
    return kExitOk;
}

int cmd_msd(const MsdRequest &request, const Output &o, std::ostream &out) {
    const CoinSpec coin = parse_coin(request.coin);
    std::vector<SpreadResult> results;
    std::vector<std::size_t> halfwidths;
    for (WalkModel model : request.models) {
        SpreadConfig config{model, request.steps, request.sigma, coin, request.halfwidth, request.distributions_at};
        halfwidths.push_back(request.halfwidth == 0 ? config.required_halfwidth() : request.halfwidth);
        results.push_back(evolve_distribution(config));
    }

    if (o.format == "json") {
        std::vector<ResultRecord> records;
        for (std::size_t m = 0; m < results.size(); ++m) {
            const SpreadResult &r = results[m];
            ResultRecord rec;
            rec.command = "msd";
            rec.input = {{"model", model_name(request.models[m])}, {"sigma", request.sigma},
                         {"steps", request.steps}, {"coin", request.coin}};
            rec.method = "exact_evolution";
            json dists = json::array();
            for (const Distribution &d : r.distributions) {
                dists.push_back({{"t", d.t}, {"x", d.positions}, {"probability", d.probability}});
            }
            rec.values = {{"msd", r.msd}, {"distributions", dists}};
            if (r.fitted_exponent) rec.values["fitted_exponent"] = *r.fitted_exponent;
            rec.diagnostics = {{"fit_window", {r.fit_begin, r.fit_end}}, {"lattice_halfwidth", halfwidths[m]}};
            rec.timestamp = timestamp_now();
            records.push_back(std::move(rec));
        }
        emit(o, "msd", "json", dump(records_document(records)), out);
        return kExitOk;
    }

    std::string table = "model,t,msd\n";
    std::string footer;
    std::string dist_table = "model,t,x,probability\n";
    bool any_distribution = false;
    for (std::size_t m = 0; m < results.size(); ++m) {
        const SpreadResult &r = results[m];
        const std::string name = model_name(request.models[m]);
        for (std::size_t t = 0; t < r.msd.size(); ++t) {
            table += name + "," + std::to_string(t) + "," + csv_number(r.msd[t]) + "\n";
        }
        footer += "# model=" + name + " fitted_exponent=" +
                  (r.fitted_exponent ? csv_number(*r.fitted_exponent) : std::string("nan")) +
                  " fit_window=" + std::to_string(r.fit_begin) + ":" + std::to_string(r.fit_end) + "\n";
        for (const Distribution &d : r.distributions) {
            any_distribution = true;
            for (std::size_t i = 0; i < d.positions.size(); ++i) {
                dist_table += name + "," + std::to_string(d.t) + "," + std::to_string(d.positions[i]) + "," +
                              csv_number(d.probability[i]) + "\n";
            }
        }
    }
    if (writes_to_stdout(o)) {
        out << table << footer;
        if (any_distribution) out << "\n" << dist_table;
        return kExitOk;
    }
    const std::filesystem::path path = resolve_output(o, "msd", "csv");
    write_text(path, table + footer);
    if (any_distribution) {
        std::filesystem::path dist_path = path;
        dist_path.replace_extension();
        dist_path += ".distributions.csv";
        write_text(dist_path, dist_table);
    }
    return kExitOk;
}

int cmd_optimize(const ChainGeometry &geometry, const std::string &coin, double q, std::size_t resolution,
                 const Output &o, std::ostream &out) {
    const OptimizationReport report = minimize_mht(geometry, parse_coin(coin), q, resolution);
    ResultRecord rec;
    rec.command = "optimize";
    rec.input = {{"targets", {geometry.x_left(), geometry.x_right()}}, {"start", geometry.x_start()},
                 {"coin", coin}, {"noise_q", q}, {"grid_resolution", resolution}};
    rec.method = "scan_then_golden_section";
    json scan = json::array(), refine = json::array();
    for (const auto &[p, m] : report.scan) scan.push_back({p, m});
    for (const auto &[p, m] : report.refinement) refine.push_back({p, m});
    rec.values = {{"p_star", report.p_star}, {"mht_star", report.mht_star}, {"scan", scan}, {"refinement", refine}};
    rec.diagnostics = {{"evaluations", report.evaluations}};
    rec.timestamp = timestamp_now();
    emit(o, "optimize", "json", dump(records_document({rec})), out);
    return kExitOk;
}

int cmd_reference(bool emit_coefficients, const std::vector<double> &p_values, bool argmin, int resolution,
                  const Output &o, std::ostream &out) {
    std::vector<ResultRecord> records;
    const json input = {{"targets", {-reference::kTargetHalfwidth, reference::kTargetHalfwidth}},
                        {"start", 0}, {"coin", "plus"}};
    if (emit_coefficients) {
        ResultRecord rec;
        rec.command = "reference";
        rec.input = input;
        rec.method = "coefficients";
        rec.values = {{"a", reference::kNumerator}, {"b", reference::kDenominator}};
        rec.diagnostics = {{"numerator_degree", reference::kNumerator.size() - 1},
                           {"denominator_degree", reference::kDenominator.size() - 1}};
        rec.timestamp = timestamp_now();
        records.push_back(std::move(rec));
    }
    for (double p : p_values) {
        ResultRecord rec;
        rec.command = "reference";
        rec.input = input;
        rec.input["reset_p"] = p;
        rec.method = "rational";
        rec.values = {{"mht", reference::evaluate(p)}};
        rec.timestamp = timestamp_now();
        records.push_back(std::move(rec));
    }
    if (argmin) {
        const reference::GridMinimum m = reference::argmin_on_grid(resolution);
        ResultRecord rec;
        rec.command = "reference";
        rec.input = input;
        rec.input["resolution"] = resolution;
        rec.method = "rational_argmin";
        rec.values = {{"p_star", m.p_star}, {"mht_star", m.mht_star}};
        rec.timestamp = timestamp_now();
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw InvalidArgument("reference: nothing requested (use --emit-coefficients, --p or --argmin)");
    emit(o, "reference", "json", dump(records_document(records)), out);
    return kExitOk;
}

int exit_code_for(const Error &e) {
    switch (e.kind()) {
        case ErrorKind::usage:
            return kExitUsage;
        case ErrorKind::numerical:
            return kExitNumerical;
        case ErrorKind::io:
            return kExitIo;
    }
    return kExitInternal;
}

}  // namespace

// ---------------------------------------------------------------------------

json ResultRecord::to_json() const {
    return {{"command", command},       {"input", input},
            {"method", method},         {"values", values},
            {"diagnostics", diagnostics}, {"software_version", software_version},
            {"timestamp", timestamp}};
}

ResultRecord ResultRecord::from_json(const json &j) {
    auto field = [&](const char *key, json::value_t type) -> const json & {
        if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("record lacks '") + key + "'");
        const json &v = j.at(key);
        if (v.type() != type) throw InvalidArgument(std::string("record field '") + key + "' has the wrong type");
        return v;
    };
    ResultRecord r;
    r.command = field("command", json::value_t::string).get<std::string>();
    r.input = field("input", json::value_t::object);
    r.method = field("method", json::value_t::string).get<std::string>();
    r.values = field("values", json::value_t::object);
    r.diagnostics = field("diagnostics", json::value_t::object);
    r.software_version = field("software_version", json::value_t::string).get<std::string>();
    r.timestamp = field("timestamp", json::value_t::string).get<std::string>();
    for (const auto &[key, _] : j.items()) {
        static const std::vector<std::string> known = {"command", "input", "method", "values", "diagnostics",
                                                       "software_version", "timestamp"};
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw InvalidArgument("record has unknown field '" + key + "'");
        }
    }
    return r;
}

json records_document(const std::vector<ResultRecord> &records) {
    json list = json::array();
    for (const auto &r : records) list.push_back(r.to_json());
    return {{"format", kRecordFormat}, {"version", 1}, {"records", list}};
}

std::string timestamp_now() {
    std::time_t seconds;
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
        seconds = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    } else {
        seconds = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    }
    std::tm utc{};
    gmtime_r(&seconds, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string csv_field(const std::string &value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string csv_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return buf;
}

std::vector<double> parse_grid(const std::string &spec) {
    double lo, hi, step;
    char c1, c2;
    std::istringstream ss(spec);
    if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !ss.eof()) {
        throw InvalidArgument("grid '" + spec + "' is not lo:hi:step");
    }
    if (!(step > 0.0) || !(hi >= lo)) throw InvalidArgument("grid '" + spec + "' needs step > 0 and hi >= lo");
    std::vector<double> out;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t k = 0; k < count; ++k) {
        // Round to 12 decimals so 0:0.98:0.02 yields 0.02, 0.04, ... exactly as typed.
        out.push_back(std::round((lo + static_cast<double>(k) * step) * 1e12) / 1e12);
    }
    return out;
}

CoinSpec parse_coin(const std::string &spec) {
    if (spec == "plus") return CoinSpec::plus();
    if (spec == "symmetric") return CoinSpec::symmetric();
    const auto comma = spec.find(',');
    if (comma == std::string::npos) throw InvalidArgument("coin must be plus, symmetric or a,b; got '" + spec + "'");
    return CoinSpec::explicit_coin(parse_complex(spec.substr(0, comma)), parse_complex(spec.substr(comma + 1)));
}

std::vector<MhtRow> run_mht(const MhtRequest &request) {
    const ChainGeometry geometry = ChainGeometry::build(request.x_start, request.x_left, request.x_right);
    const CoinSpec coin = parse_coin(request.coin);
    if (request.methods.empty()) throw InvalidArgument("no method requested");
    for (double p : request.p_values) {
        if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("reset p = " + std::to_string(p) + " outside [0, 1)");
    }
    for (double q : request.q_values) {
        if (!(q >= 0.0 && q <= 1.0)) throw InvalidArgument("noise q = " + std::to_string(q) + " outside [0, 1]");
    }

    const std::size_t per_point = request.methods.size();
    const std::size_t points = request.p_values.size() * request.q_values.size();
    std::vector<MhtRow> rows(points * per_point);
    parallel_for(points, [&](std::size_t g) {
        const double p = request.p_values[g / request.q_values.size()];
        const double q = request.q_values[g % request.q_values.size()];
        const WalkSetup setup{geometry, coin, p, q};
        std::optional<HittingSuperoperators> supers;
        for (std::size_t m = 0; m < per_point; ++m) {
            MhtRow &row = rows[g * per_point + m];
            row.p = p;
            row.q = q;
            row.method = request.methods[m];
            if (row.method == MhtMethod::monte_carlo) {
                TrajectoryConfig config{request.trajectories, request.seed, request.max_steps, p, q};
                const MhtEstimate est = run_trajectories(config, geometry, coin);
                row.mht = est.mean;
                row.diagnostic_name = "standard_error";
                row.diagnostic = est.standard_error;
                continue;
            }
            if (!supers) supers = walk_superoperators(setup);
            if (row.method == MhtMethod::resolvent) {
                const HittingResult r = mht_resolvent(*supers, walk_initial_density(setup));
                row.mht = r.mht;
                row.diagnostic_name = "condition_estimate";
                row.diagnostic = r.diagnostics.condition_estimate.value_or(0.0);
            } else {
                const HittingResult r = mht_series(*supers, walk_initial_density(setup), request.tail_epsilon);
                row.mht = r.mht;
                row.diagnostic_name = "horizon";
                row.diagnostic = static_cast<double>(r.diagnostics.horizon.value_or(0));
            }
        }
    });
    return rows;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mean hitting times and spreading of classical and quantum walks on a chain", "hitwalk"};
    app.set_version_flag("--version", kSoftwareVersion);
    app.require_subcommand(1);

    Output mht_output, msd_output, optimize_output{std::nullopt, "json"}, ref_output{std::nullopt, "json"};
    auto add_output = [](CLI::App *sub, Output &output, bool csv_allowed) {
        sub->add_option("--out", output.path, "Output file (default: stdout, or $HITWALK_OUT_DIR/<command>.<ext>)");
        if (csv_allowed) {
            sub->add_option("--format", output.format, "csv or json")
                ->check(CLI::IsMember({"csv", "json"}))
                ->capture_default_str();
        }
    };

    std::vector<int> targets;
    int start = 0;
    std::string coin = "plus";
    auto add_geometry = [&](CLI::App *sub) {
        sub->add_option("--targets", targets, "Left and right detector positions")->expected(2)->required();
        sub->add_option("--start", start, "Initial position")->capture_default_str();
    };

    // mht
    CLI::App *mht = app.add_subcommand("mht", "Mean hitting time over a (p, q) grid");
    add_geometry(mht);
    mht->add_option("--coin", coin, "plus | symmetric | a,b")->capture_default_str();
    std::optional<double> reset_p, noise_q;
    std::string p_grid, q_grid, method = "resolvent";
    MhtRequest request;
    auto *p_opt = mht->add_option("--reset-p", reset_p, "Reset probability");
    mht->add_option("--p-grid", p_grid, "Reset grid lo:hi:step")->excludes(p_opt);
    auto *q_opt = mht->add_option("--noise-q", noise_q, "Coin bit-flip probability");
    mht->add_option("--q-grid", q_grid, "Noise grid lo:hi:step")->excludes(q_opt);
    mht->add_option("--method", method, "resolvent | series | mc | all")
        ->check(CLI::IsMember({"resolvent", "series", "mc", "all"}))
        ->capture_default_str();
    mht->add_option("--seed", request.seed, "Monte Carlo seed")->capture_default_str();
    mht->add_option("--trajectories", request.trajectories, "Monte Carlo trajectories")->capture_default_str();
    mht->add_option("--max-steps", request.max_steps, "Monte Carlo step cap")->capture_default_str();
    mht->add_option("--tail-epsilon", request.tail_epsilon, "Series stopping survival")->capture_default_str();
    add_output(mht, mht_output, true);

    // msd
    CLI::App *msd = app.add_subcommand("msd", "Mean squared displacement of the unmeasured walk");
    std::string model = "both", distributions;
    MsdRequest msd_request;
    std::string msd_coin = "symmetric";
    msd->add_option("--model", model, "classical | quantum | both")
        ->check(CLI::IsMember({"classical", "quantum", "both"}))
        ->capture_default_str();
    msd->add_option("--sigma", msd_request.sigma, "Initial Gaussian width")->capture_default_str();
    msd->add_option("--steps", msd_request.steps, "Number of steps")->capture_default_str();
    msd->add_option("--coin", msd_coin, "plus | symmetric | a,b")->capture_default_str();
    msd->add_option("--halfwidth", msd_request.halfwidth, "Lattice halfwidth (0 = automatic)")
        ->capture_default_str();
    msd->add_option("--distributions-at", distributions, "Comma-separated times for distribution snapshots");
    add_output(msd, msd_output, true);

    // optimize
    CLI::App *optimize = app.add_subcommand("optimize", "Reset probability minimizing the MHT");
    add_geometry(optimize);
    optimize->add_option("--coin", coin, "plus | symmetric | a,b")->capture_default_str();
    double opt_q = 0.0;
    std::size_t resolution = 99;
    optimize->add_option("--noise-q", opt_q, "Coin bit-flip probability")->capture_default_str();
    optimize->add_option("--grid-resolution", resolution, "Coarse scan intervals on [0, 0.99]")
        ->capture_default_str();
    add_output(optimize, optimize_output, false);

    // reference
    CLI::App *ref = app.add_subcommand("reference", "Closed-form MHT(p) for targets -5, +5");
    bool emit_coefficients = false, argmin = false;
    std::vector<double> ref_p;
    int ref_resolution = 1000;
    ref->add_flag("--emit-coefficients", emit_coefficients, "Emit the integer coefficient table");
    ref->add_option("--p", ref_p, "Evaluate MHT(p) at these points");
    ref->add_flag("--argmin", argmin, "Locate the minimizing p");
    ref->add_option("--resolution", ref_resolution, "Coarse grid points for --argmin")->capture_default_str();
    add_output(ref, ref_output, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (mht->parsed()) {
            request.x_left = targets[0];
            request.x_right = targets[1];
            request.x_start = start;
            request.coin = coin;
            request.p_values = p_grid.empty() ? std::vector<double>{reset_p.value_or(0.0)} : parse_grid(p_grid);
            request.q_values = q_grid.empty() ? std::vector<double>{noise_q.value_or(0.0)} : parse_grid(q_grid);
            request.methods = method == "all" ? std::vector<MhtMethod>{MhtMethod::resolvent, MhtMethod::series,
                                                                       MhtMethod::monte_carlo}
                                              : std::vector<MhtMethod>{parse_method(method)};
            return cmd_mht(request, mht_output, out);
        }
        if (msd->parsed()) {
            msd_request.models = model == "both" ? std::vector<WalkModel>{WalkModel::classical, WalkModel::quantum}
                                 : model == "classical" ? std::vector<WalkModel>{WalkModel::classical}
                                                        : std::vector<WalkModel>{WalkModel::quantum};
            msd_request.coin = msd_coin;
            msd_request.distributions_at = parse_index_list(distributions);
            return cmd_msd(msd_request, msd_output, out);
        }
        if (optimize->parsed()) {
            return cmd_optimize(ChainGeometry::build(start, targets[0], targets[1]), coin, opt_q, resolution,
                                optimize_output, out);
        }
        if (ref->parsed()) return cmd_reference(emit_coefficients, ref_p, argmin, ref_resolution, ref_output, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace hitwalk::cli
