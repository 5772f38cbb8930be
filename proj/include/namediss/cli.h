// Copyright 2026 The NameDiss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NAMEDISS_CLI_H_
#define NAMEDISS_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace namediss {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitData = 2;

// Settings assembled from the NAMEDISS_CONFIG file and command-line flags
// (flags win).
struct RunConfig {
  std::string input;
  std::string query;
  std::string venue_map;
  std::string stopwords;
  std::string affiliations;
  std::string search_fixture;
  // oracle | script | interactive-serve
  std::string provider = "oracle";
  std::string script;
  std::string gold_key;
  std::optional<double> threshold_affiliation;
  std::optional<double> threshold_title;
  std::string output;
  int port = 8080;
  // Config-file only.
  std::string snapshot_dir;
  std::string cors_origin = "*";
};

// Applies `key = value` settings from a TOML-style file. Keys use the flag
// names without dashes ("venue-map" or "venue_map"). Throws ConfigError.
void ApplyConfigFile(const std::string &path, RunConfig &config);

// Entry point of the namediss tool. Diagnostics go to `err`, reports to
// `out`.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace namediss

#endif  // NAMEDISS_CLI_H_
