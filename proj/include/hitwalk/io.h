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

#ifndef HITWALK_IO_H
#define HITWALK_IO_H

// Command-line front end: experiment configuration, result records and the
// CSV / JSON emitters behind the `hitwalk` tool.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hitwalk/hitting.h"
#include "hitwalk/spread.h"
#include "hitwalk/walk.h"

namespace hitwalk::cli {

inline constexpr const char *kSoftwareVersion = "1.0.0";
inline constexpr const char *kRecordFormat = "hitwalk-records";

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitIo = 4,
};

struct ResultRecord {
    std::string command;
    nlohmann::json input = nlohmann::json::object();
    std::string method;
    nlohmann::json values = nlohmann::json::object();
    nlohmann::json diagnostics = nlohmann::json::object();
    std::string software_version = kSoftwareVersion;
    std::string timestamp;

    nlohmann::json to_json() const;
    /// Throws InvalidArgument on missing or mistyped fields.
    static ResultRecord from_json(const nlohmann::json &j);
};

/// {"format": ..., "version": 1, "records": [...]}
nlohmann::json records_document(const std::vector<ResultRecord> &records);

/// UTC ISO-8601; SOURCE_DATE_EPOCH (seconds) overrides the clock so repeated
/// runs can be byte-identical.
std::string timestamp_now();

/// RFC 4180 field quoting.
std::string csv_field(const std::string &value);
std::string csv_number(double value);

/// "lo:hi:step", inclusive of hi up to rounding. Throws InvalidArgument.
std::vector<double> parse_grid(const std::string &spec);

/// "plus", "symmetric" or "a,b" with complex parts written as re[+-]im i
/// (e.g. "0.6,0.8i"). Throws InvalidCoin / InvalidArgument.
CoinSpec parse_coin(const std::string &spec);

struct MhtRequest {
    int x_left = -5;
    int x_right = 5;
    int x_start = 0;
    std::string coin = "plus";
    std::vector<double> p_values{0.0};
    std::vector<double> q_values{0.0};
    std::vector<MhtMethod> methods{MhtMethod::resolvent};
    std::uint64_t seed = 1;
    std::size_t trajectories = 100'000;
    std::size_t max_steps = 100'000;
    double tail_epsilon = 1e-10;
};

struct MhtRow {
    double p = 0.0;
    double q = 0.0;
    MhtMethod method = MhtMethod::resolvent;
    double mht = 0.0;
    std::string diagnostic_name;
    double diagnostic = 0.0;
};

/// Rows ordered by (p, q, method) in request order.
std::vector<MhtRow> run_mht(const MhtRequest &request);

struct MsdRequest {
    std::vector<WalkModel> models{WalkModel::quantum};
    double sigma = 0.0;
    std::size_t steps = 100;
    std::string coin = "symmetric";
    std::size_t halfwidth = 0;
    std::vector<std::size_t> distributions_at;
};

/// Runs the CLI. argv[0] is the program name.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace hitwalk::cli

#endif  // HITWALK_IO_H
