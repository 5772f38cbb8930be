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

#include "namediss/cli.h"

#include <signal.h>
#include <sys/socket.h>
#include <unistd.h>
#include <spdlog/spdlog.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "httplib.h"
#include "namediss/error.h"
#include "namediss/evaluation.h"
#include "namediss/serialization.h"
#include "namediss/service.h"
#include "namediss/session.h"

namespace namediss {

namespace {

std::string KeyOf(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  return name;
}

double ParseDouble(const std::string &key, const std::string &value) {
  try {
    std::size_t used = 0;
    double d = std::stod(value, &used);
    if (used == value.size()) return d;
  } catch (const std::exception &) {
  }
  throw ConfigError("config key " + key + ": not a number: " + value);
}

}  // namespace

void ApplyConfigFile(const std::string &path, RunConfig &config) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_file(path);
  } catch (const CLI::Error &e) {
    throw ConfigError("cannot read config file " + path + ": " + e.what());
  }
  for (const CLI::ConfigItem &item : items) {
    if (item.name == "++" || item.name == "--") continue;
    const std::string key = KeyOf(item.name);
    if (item.inputs.size() != 1) {
      throw ConfigError("config key " + key + " needs exactly one value");
    }
    const std::string &value = item.inputs.front();
    if (key == "input") {
      config.input = value;
    } else if (key == "query") {
      config.query = value;
    } else if (key == "venue-map") {
      config.venue_map = value;
    } else if (key == "stopwords") {
      config.stopwords = value;
    } else if (key == "affiliations") {
      config.affiliations = value;
    } else if (key == "search-fixture") {
      config.search_fixture = value;
    } else if (key == "provider") {
      config.provider = value;
    } else if (key == "script") {
      config.script = value;
    } else if (key == "gold-key") {
      config.gold_key = value;
    } else if (key == "threshold-affiliation") {
      config.threshold_affiliation = ParseDouble(key, value);
    } else if (key == "threshold-title") {
      config.threshold_title = ParseDouble(key, value);
    } else if (key == "output") {
      config.output = value;
    } else if (key == "port") {
      config.port = static_cast<int>(ParseDouble(key, value));
    } else if (key == "snapshot-dir") {
      config.snapshot_dir = value;
    } else if (key == "cors-origin") {
      config.cors_origin = value;
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
}

namespace {

struct Loaded {
  std::shared_ptr<const Corpus> corpus;
  SessionConfig session;
};

// Reads every file the config names. Missing or malformed configuration
// files raise ConfigError; a malformed corpus raises DataError.
Loaded LoadInputs(const RunConfig &config) {
  if (config.input.empty()) throw ConfigError("--input is required");
  Loaded loaded;
  {
    std::ifstream probe(config.input);
    if (!probe) throw ConfigError("cannot open input file: " + config.input);
  }
  loaded.corpus = std::make_shared<const Corpus>(LoadCorpusFile(config.input));

  SessionConfig &s = loaded.session;
  if (config.threshold_affiliation) {
    s.thresholds.affiliation_similarity = *config.threshold_affiliation;
  }
  if (config.threshold_title) s.thresholds.title_similarity = *config.threshold_title;
  s.thresholds.Validate();
  if (!config.venue_map.empty()) s.venues = VenueMap::LoadFile(config.venue_map);
  if (!config.stopwords.empty()) s.stopwords = StopWordList::LoadFile(config.stopwords);
  if (!config.affiliations.empty()) {
    s.affiliations = std::make_shared<FixtureAffiliationResolver>(
        FixtureAffiliationResolver::LoadFile(config.affiliations));
  }
  if (!config.search_fixture.empty()) {
    s.search = std::make_shared<FixtureSearchProvider>(
        FixtureSearchProvider::LoadFile(config.search_fixture));
  }
  return loaded;
}

void WriteOutput(const std::string &path, const std::string &text, std::ostream &out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write output file: " + path);
  file << text;
  if (!file) throw ConfigError("cannot write output file: " + path);
}

int Serve(const RunConfig &config, std::ostream &err);

int CmdRun(const RunConfig &config, std::ostream &out, std::ostream &err) {
  if (config.provider == "interactive-serve") return Serve(config, err);
  if (config.provider != "oracle" && config.provider != "script") {
    throw ConfigError("--provider must be oracle, script or interactive-serve");
  }
  if (config.query.empty()) throw ConfigError("--query is required");
  if (config.provider == "oracle" && config.gold_key.empty()) {
    throw ConfigError("--provider oracle needs --gold-key");
  }
  if (config.provider == "script" && config.script.empty()) {
    throw ConfigError("--provider script needs --script");
  }
  Loaded loaded = LoadInputs(config);
  std::optional<NameVariant> query = TryParseName(config.query);
  if (!query) throw ConfigError("--query is not a parseable name: " + config.query);

  std::unique_ptr<FeedbackProvider> provider;
  if (config.provider == "oracle") {
    provider = std::make_unique<OracleFeedbackProvider>(loaded.corpus, config.gold_key);
  } else {
    provider = std::make_unique<ScriptedFeedbackProvider>(
        ScriptedFeedbackProvider::LoadFile(config.script));
  }
  Session session = RunWithProvider(loaded.corpus, std::move(*query),
                                    std::move(loaded.session), *provider);
  if (session.state() == SessionState::kFailed) {
    err << "error: " << session.failure() << "\n";
    return kExitData;
  }
  WriteOutput(config.output.empty() ? "clusters.json" : config.output,
              DumpStable(FinalOutputJson(session)), out);
  return kExitOk;
}

int CmdEval(const RunConfig &config, const std::string &predicted_path,
            std::ostream &out) {
  Loaded loaded = LoadInputs(config);
  std::ifstream in(predicted_path);
  if (!in) throw ConfigError("cannot open predicted clusters: " + predicted_path);
  nlohmann::json predicted;
  try {
    predicted = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw DataError(std::string("malformed predicted clusters: ") + e.what());
  }
  const Partition partition =
      Partition::FromPredicted(ParsePredictedClusters(predicted));
  const GoldLabeling gold = GoldFromCorpus(*loaded.corpus);
  const PairwiseScores scores = ScorePairwise(partition, gold);
  const ConfusionReport report = BuildConfusionReport(partition, gold);
  out << FormatReport(scores, report);
  if (!config.output.empty()) {
    WriteOutput(config.output, DumpStable(ReportJson(scores, report)), out);
  }
  return kExitOk;
}

int CmdIngest(const RunConfig &config, std::ostream &out) {
  if (config.input.empty()) throw ConfigError("--input is required");
  std::ifstream probe(config.input);
  if (!probe) throw ConfigError("cannot open input file: " + config.input);
  const Corpus corpus = LoadCorpusFile(config.input);
  std::ostringstream jsonl;
  WriteJsonl(corpus, jsonl);
  WriteOutput(config.output.empty() ? "-" : config.output, jsonl.str(), out);
  return kExitOk;
}

int Serve(const RunConfig &config, std::ostream &err) {
  if (config.port <= 0 || config.port > 65535) {
    throw ConfigError("--port must be in 1..65535");
  }
  Loaded loaded = LoadInputs(config);
  ServiceOptions options;
  options.cors_origin = config.cors_origin;
  options.snapshot_dir = config.snapshot_dir;
  ReviewService service(loaded.corpus, std::move(loaded.session), options);
  if (const std::size_t n = service.LoadSnapshots(); n > 0) {
    err << "resumed " << n << " session(s)\n";
  }

  // SIGTERM/SIGINT are consumed by a waiter thread; block them before the
  // server spawns its workers so they inherit the mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGTERM);
  sigaddset(&signals, SIGINT);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  httplib::Server server;
  // httplib's default sets SO_REUSEPORT, which would let a second server
  // share a busy port instead of failing.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  service.Mount(server);
  if (!server.bind_to_port("127.0.0.1", config.port)) {
    pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
    throw ConfigError("cannot bind port " + std::to_string(config.port));
  }
  err << "listening on http://127.0.0.1:" << config.port << "\n" << std::flush;

  std::atomic<bool> signalled{false};
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    signalled = true;
    server.stop();
  });
  const bool clean = server.listen_after_bind();
  // Wake the waiter if the server stopped on its own.
  if (!signalled) kill(getpid(), SIGTERM);
  waiter.join();
  pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
  if (!clean && !signalled) {
    err << "error: server stopped unexpectedly\n";
    return kExitConfig;
  }
  err << "shutting down\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  RunConfig config;
  if (const char *path = std::getenv("NAMEDISS_CONFIG"); path && *path) {
    try {
      ApplyConfigFile(path, config);
    } catch (const ConfigError &e) {
      err << "error: " << e.what() << "\n";
      return kExitConfig;
    }
  }

  CLI::App app{"namediss: author name disambiguation over citation records"};
  app.require_subcommand(1);
  std::string predicted_path;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--input", config.input, "Corpus file (.jsonl or DBLP .xml)");
    cmd->add_option("--venue-map", config.venue_map, "CSV venue,discipline");
    cmd->add_option("--stopwords", config.stopwords, "Stop-word list file");
    cmd->add_option("--affiliations", config.affiliations,
                    "CSV publisher_url,affiliation");
    cmd->add_option("--search-fixture", config.search_fixture,
                    "JSON search results fixture");
    cmd->add_option("--threshold-affiliation", config.threshold_affiliation,
                    "Affiliation similarity threshold (default 0.75)");
    cmd->add_option("--threshold-title", config.threshold_title,
                    "Title vector similarity threshold (default 0.50)");
  };

  CLI::App *run = app.add_subcommand("run", "Disambiguate one query in batch");
  add_common(run);
  run->add_option("--query", config.query, "Author name to disambiguate");
  run->add_option("--provider", config.provider, "oracle | script | interactive-serve");
  run->add_option("--script", config.script, "Decision script (JSON)");
  run->add_option("--gold-key", config.gold_key, "Target author_key for the oracle");
  run->add_option("--output", config.output, "Cluster output file ('-' for stdout)");
  run->add_option("--port", config.port, "Port for interactive-serve");

  CLI::App *eval = app.add_subcommand("eval", "Score predicted clusters against gold labels");
  add_common(eval);
  eval->add_option("predicted", predicted_path, "Cluster output JSON")->required();
  eval->add_option("--output", config.output, "Also write the report as JSON");

  CLI::App *serve = app.add_subcommand("serve", "Serve the review HTTP API");
  add_common(serve);
  serve->add_option("--port", config.port, "TCP port");

  CLI::App *ingest = app.add_subcommand("ingest", "Convert a corpus to JSONL");
  ingest->add_option("--input", config.input, "Corpus file (.jsonl or DBLP .xml)");
  ingest->add_option("--output", config.output, "JSONL output ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (run->parsed()) return CmdRun(config, out, err);
    if (eval->parsed()) return CmdEval(config, predicted_path, out);
    if (serve->parsed()) return Serve(config, err);
    if (ingest->parsed()) return CmdIngest(config, out);
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitConfig;
}

}  // namespace namediss
