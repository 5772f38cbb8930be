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

#include "namediss/session.h"

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "namediss/error.h"
#include "namediss/serialization.h"

namespace namediss {

using json = nlohmann::json;

const char *StateName(SessionState state) {
  switch (state) {
    case SessionState::kCreated:
      return "Created";
    case SessionState::kAwaitingDisciplineChoice:
      return "AwaitingDisciplineChoice";
    case SessionState::kAwaitingPrincipalEndorsement:
      return "AwaitingPrincipalEndorsement";
    case SessionState::kCompleted:
      return "Completed";
    case SessionState::kFailed:
      return "Failed";
  }
  return "Failed";
}

SessionState ParseStateName(std::string_view name) {
  for (SessionState s :
       {SessionState::kCreated, SessionState::kAwaitingDisciplineChoice,
        SessionState::kAwaitingPrincipalEndorsement, SessionState::kCompleted,
        SessionState::kFailed}) {
    if (name == StateName(s)) return s;
  }
  throw DataError("unknown session state: " + std::string(name));
}

const char *CheckpointName(Checkpoint checkpoint) {
  return checkpoint == Checkpoint::kDiscipline ? "discipline" : "principal";
}

Checkpoint ParseCheckpointName(std::string_view name) {
  if (name == "discipline") return Checkpoint::kDiscipline;
  if (name == "principal") return Checkpoint::kPrincipal;
  throw DataError("unknown checkpoint: " + std::string(name));
}

namespace {

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

}  // namespace

Session Session::Start(std::shared_ptr<const Corpus> corpus, NameVariant query,
                       SessionConfig config, std::string id) {
  Session s;
  s.id_ = std::move(id);
  s.query_ = std::move(query);
  s.config_ = std::move(config);
  s.corpus_ = std::move(corpus);
  s.clock_ = UtcNow;
  try {
    s.config_.thresholds.Validate();
    if (!s.config_.affiliations || !s.config_.search) {
      throw ConfigError("provider bindings missing");
    }
    s.clusters_ = Layer1DisciplineClusters(*s.corpus_, s.query_, s.config_.venues);
  } catch (const std::exception &e) {
    s.Fail(e.what());
    return s;
  }
  s.state_ = s.clusters_.empty() ? SessionState::kCompleted
                                 : SessionState::kAwaitingDisciplineChoice;
  return s;
}

bool Session::awaiting() const {
  return state_ == SessionState::kAwaitingDisciplineChoice ||
         state_ == SessionState::kAwaitingPrincipalEndorsement;
}

bool Session::terminal() const {
  return state_ == SessionState::kCompleted || state_ == SessionState::kFailed;
}

Checkpoint Session::checkpoint() const {
  return state_ == SessionState::kAwaitingPrincipalEndorsement
             ? Checkpoint::kPrincipal
             : Checkpoint::kDiscipline;
}

void Session::Fail(std::string reason) {
  spdlog::warn("session {} failed: {}", id_, reason);
  state_ = SessionState::kFailed;
  failure_ = std::move(reason);
}

void Session::SubmitDecision(const std::string &cluster_id) {
  if (!awaiting()) {
    throw DecisionError(std::string("session is ") + StateName(state_) +
                        "; no decision pending");
  }
  auto chosen = std::find_if(clusters_.begin(), clusters_.end(),
                             [&](const Cluster &c) { return c.id == cluster_id; });
  if (chosen == clusters_.end()) {
    throw DecisionError("cluster " + cluster_id + " is not among the options");
  }
  const Checkpoint at = checkpoint();
  decisions_.push_back(Decision{at, cluster_id, clock_ ? clock_() : UtcNow()});
  const Cluster picked = *chosen;
  try {
    if (at == Checkpoint::kDiscipline) {
      AdvanceFromDiscipline(picked);
    } else {
      AdvanceFromPrincipal(picked);
    }
  } catch (const std::exception &e) {
    Fail(e.what());
  }
}

void Session::AdvanceFromDiscipline(const Cluster &chosen) {
  std::vector<Cluster> rest;
  for (Cluster &c : clusters_) {
    if (c.id != chosen.id) rest.push_back(std::move(c));
  }
  std::vector<Cluster> split = Layer2CoauthorSplit(chosen, *corpus_);
  std::vector<Cluster> merged = Layer3AffiliationMerge(
      std::move(split), *corpus_, *config_.affiliations, config_.thresholds);
  set_aside_ = std::move(rest);
  clusters_ = std::move(merged);
  state_ = SessionState::kAwaitingPrincipalEndorsement;
}

void Session::AdvanceFromPrincipal(const Cluster &chosen) {
  std::vector<Cluster> prepared =
      PrepareVectors(clusters_, *corpus_, config_.stopwords);
  Cluster principal;
  std::vector<Cluster> others;
  for (Cluster &c : prepared) {
    if (c.id == chosen.id) {
      principal = std::move(c);
      principal.principal = true;
    } else {
      others.push_back(std::move(c));
    }
  }
  MergeResult by_title =
      Layer4TitleMerge(std::move(principal), std::move(others), *corpus_,
                       config_.stopwords, config_.thresholds);
  MergeResult by_homepage = Layer4HomepageMerge(
      std::move(by_title.principal), std::move(by_title.others), *corpus_,
      *config_.search, config_.stopwords, config_.thresholds);
  clusters_.clear();
  clusters_.push_back(std::move(by_homepage.principal));
  for (Cluster &c : by_homepage.others) clusters_.push_back(std::move(c));
  state_ = SessionState::kCompleted;
}

std::vector<Cluster> Session::FinalClusters() const {
  std::vector<Cluster> out = clusters_;
  out.insert(out.end(), set_aside_.begin(), set_aside_.end());
  return out;
}

std::optional<std::string> Session::principal_cluster_id() const {
  for (const Cluster &c : clusters_) {
    if (c.principal) return c.id;
  }
  return std::nullopt;
}

// Snapshots.

json Session::ToJson() const {
  json clusters = json::array();
  for (const Cluster &c : clusters_) clusters.push_back(ClusterToJson(c));
  json set_aside = json::array();
  for (const Cluster &c : set_aside_) set_aside.push_back(ClusterToJson(c));
  json decisions = json::array();
  for (const Decision &d : decisions_) {
    decisions.push_back(json{{"checkpoint", CheckpointName(d.checkpoint)},
                             {"cluster_id", d.cluster_id},
                             {"timestamp", d.timestamp}});
  }
  json venues = json::object();
  for (const auto &[venue, label] : config_.venues.entries()) venues[venue] = label;
  const Thresholds &t = config_.thresholds;
  return json{
      {"id", id_},
      {"query", query_.raw},
      {"state", StateName(state_)},
      {"checkpoint", awaiting() ? json(CheckpointName(checkpoint())) : json(nullptr)},
      {"clusters", clusters},
      {"set_aside", set_aside},
      {"decisions", decisions},
      {"failure", failure_},
      {"config",
       {{"thresholds",
         {{"affiliation_similarity", t.affiliation_similarity},
          {"title_similarity", t.title_similarity},
          {"homepage_keyword_fraction", t.homepage_keyword_fraction},
          {"homepage_top_keywords", t.homepage_top_keywords}}},
        {"venue_map", venues},
        {"venue_default", config_.venues.default_label()},
        {"stopwords", config_.stopwords.words()}}}};
}

Session Session::FromJson(const json &snapshot,
                          std::shared_ptr<const Corpus> corpus,
                          std::shared_ptr<const AffiliationResolver> affiliations,
                          std::shared_ptr<const SearchProvider> search) {
  Session s;
  try {
    s.id_ = snapshot.at("id").get<std::string>();
    s.query_ = ParseName(snapshot.at("query").get<std::string>());
    s.state_ = ParseStateName(snapshot.at("state").get<std::string>());
    for (const json &c : snapshot.at("clusters")) {
      s.clusters_.push_back(ClusterFromJson(c));
    }
    for (const json &c : snapshot.at("set_aside")) {
      s.set_aside_.push_back(ClusterFromJson(c));
    }
    for (const json &d : snapshot.at("decisions")) {
      s.decisions_.push_back(
          Decision{ParseCheckpointName(d.at("checkpoint").get<std::string>()),
                   d.at("cluster_id").get<std::string>(),
                   d.at("timestamp").get<std::string>()});
    }
    s.failure_ = snapshot.at("failure").get<std::string>();
    const json &config = snapshot.at("config");
    const json &t = config.at("thresholds");
    s.config_.thresholds.affiliation_similarity =
        t.at("affiliation_similarity").get<double>();
    s.config_.thresholds.title_similarity = t.at("title_similarity").get<double>();
    s.config_.thresholds.homepage_keyword_fraction =
        t.at("homepage_keyword_fraction").get<double>();
    s.config_.thresholds.homepage_top_keywords =
        t.at("homepage_top_keywords").get<int>();
    for (const auto &[venue, label] : config.at("venue_map").items()) {
      s.config_.venues.Add(venue, label.get<std::string>());
    }
    s.config_.venues.set_default_label(config.at("venue_default").get<std::string>());
    s.config_.stopwords =
        StopWordList(config.at("stopwords").get<StopWordList::Words>());
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed session snapshot: ") + e.what());
  } catch (const ConfigError &e) {
    throw DataError(std::string("malformed session snapshot: ") + e.what());
  }
  s.config_.affiliations = std::move(affiliations);
  s.config_.search = std::move(search);
  s.corpus_ = std::move(corpus);
  s.clock_ = UtcNow;
  for (const auto *list : {&s.clusters_, &s.set_aside_}) {
    for (const Cluster &c : *list) {
      for (const std::string &id : c.record_ids) {
        if (s.corpus_->Find(id) == nullptr) {
          throw DataError("snapshot references unknown record " + id);
        }
      }
    }
  }
  return s;
}

// Feedback providers.

std::string OracleFeedbackProvider::Decide(Checkpoint /*checkpoint*/,
                                           std::span<const Cluster> options) {
  if (options.empty()) throw DecisionError("no options to choose from");
  const Cluster *best = nullptr;
  std::size_t best_count = 0;
  std::vector<const Cluster *> ordered;
  for (const Cluster &c : options) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(),
            [](const Cluster *a, const Cluster *b) { return a->id < b->id; });
  for (const Cluster *c : ordered) {
    std::size_t count = 0;
    for (const std::string &id : c->record_ids) {
      const CitationRecord *r = corpus_->Find(id);
      if (r != nullptr && r->author_key == author_key_) ++count;
    }
    if (best == nullptr || count > best_count) {
      best = c;
      best_count = count;
    }
  }
  return best->id;
}

ScriptedFeedbackProvider ScriptedFeedbackProvider::Parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw DataError(std::string("malformed decision script: ") + e.what());
  }
  if (!doc.is_array()) throw DataError("decision script must be a JSON array");
  std::vector<Decision> script;
  try {
    for (const json &entry : doc) {
      script.push_back(Decision{
          ParseCheckpointName(entry.at("checkpoint").get<std::string>()),
          entry.at("cluster_id").get<std::string>(), ""});
    }
  } catch (const json::exception &e) {
    throw DataError(std::string("bad decision script entry: ") + e.what());
  }
  return ScriptedFeedbackProvider(std::move(script));
}

ScriptedFeedbackProvider ScriptedFeedbackProvider::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open decision script: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

std::string ScriptedFeedbackProvider::Decide(Checkpoint checkpoint,
                                             std::span<const Cluster> /*options*/) {
  if (next_ >= script_.size()) {
    throw DecisionError(std::string("decision script has no entry for the ") +
                        CheckpointName(checkpoint) + " checkpoint");
  }
  const Decision &d = script_[next_++];
  if (d.checkpoint != checkpoint) {
    throw DecisionError(std::string("decision script expected the ") +
                        CheckpointName(d.checkpoint) + " checkpoint, session is at " +
                        CheckpointName(checkpoint));
  }
  return d.cluster_id;
}

Session RunWithProvider(std::shared_ptr<const Corpus> corpus, NameVariant query,
                        SessionConfig config, FeedbackProvider &provider,
                        std::string id) {
  Session session =
      Session::Start(std::move(corpus), std::move(query), std::move(config), std::move(id));
  while (session.awaiting()) {
    try {
      session.SubmitDecision(provider.Decide(session.checkpoint(), session.clusters()));
    } catch (const DecisionError &e) {
      session.Fail(e.what());
    }
  }
  return session;
}

json DecisionScriptJson(std::span<const Decision> decisions) {
  json out = json::array();
  for (const Decision &d : decisions) {
    out.push_back(json{{"checkpoint", CheckpointName(d.checkpoint)},
                       {"cluster_id", d.cluster_id}});
  }
  return out;
}

}  // namespace namediss
