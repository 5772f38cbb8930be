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

#ifndef NAMEDISS_SESSION_H_
#define NAMEDISS_SESSION_H_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "namediss/clustering.h"
#include "namediss/names.h"
#include "namediss/providers.h"
#include "namediss/records.h"
#include "namediss/textmetrics.h"

namespace namediss {

enum class SessionState {
  kCreated,
  kAwaitingDisciplineChoice,
  kAwaitingPrincipalEndorsement,
  kCompleted,
  kFailed,
};

enum class Checkpoint { kDiscipline, kPrincipal };

const char *StateName(SessionState state);
const char *CheckpointName(Checkpoint checkpoint);
SessionState ParseStateName(std::string_view name);
// Accepts "discipline" and "principal"; throws DataError otherwise.
Checkpoint ParseCheckpointName(std::string_view name);

struct Decision {
  Checkpoint checkpoint = Checkpoint::kDiscipline;
  std::string cluster_id;
  // ISO 8601 UTC.
  std::string timestamp;
};

struct SessionConfig {
  Thresholds thresholds;
  VenueMap venues;
  StopWordList stopwords = StopWordList::English();
  std::shared_ptr<const AffiliationResolver> affiliations =
      std::make_shared<NullAffiliationResolver>();
  std::shared_ptr<const SearchProvider> search =
      std::make_shared<NullSearchProvider>();
};

// The four-layer pipeline with its two user checkpoints:
//
//   start             layer 1, present disciplines  -> AwaitingDisciplineChoice
//   first decision    layers 2 and 3, present them  -> AwaitingPrincipalEndorsement
//   second decision   layer 4 around the principal  -> Completed
//
// Any error inside a layer moves the session to Failed. Mutations must be
// serialized by the caller; a Session value can be moved between threads.
class Session {
 public:
  using Clock = std::function<std::string()>;

  // Runs layer 1. Invalid configuration yields a Failed session carrying the
  // diagnostic rather than an exception.
  static Session Start(std::shared_ptr<const Corpus> corpus, NameVariant query,
                       SessionConfig config, std::string id);

  // Advances past the current checkpoint. Throws DecisionError and leaves the
  // session untouched when the state is not awaiting or the id is not among
  // the options.
  void SubmitDecision(const std::string &cluster_id);

  // Marks the session Failed with a diagnostic.
  void Fail(std::string reason);

  const std::string &id() const { return id_; }
  const NameVariant &query() const { return query_; }
  SessionState state() const { return state_; }
  bool awaiting() const;
  bool terminal() const;
  // Only meaningful while awaiting.
  Checkpoint checkpoint() const;

  // While awaiting: the options presented at the checkpoint. When completed:
  // the principal cluster and the residual clusters of its discipline.
  const std::vector<Cluster> &clusters() const { return clusters_; }
  // Layer-1 clusters not chosen at the first checkpoint.
  const std::vector<Cluster> &set_aside() const { return set_aside_; }
  // Completed clusters followed by set-aside clusters.
  std::vector<Cluster> FinalClusters() const;
  std::optional<std::string> principal_cluster_id() const;

  const std::vector<Decision> &decisions() const { return decisions_; }
  const std::string &failure() const { return failure_; }
  const SessionConfig &config() const { return config_; }
  const Corpus &corpus() const { return *corpus_; }

  // Replaces the timestamp source (tests, replay).
  void set_clock(Clock clock) { clock_ = std::move(clock); }

  // Snapshot of every field except provider bindings.
  nlohmann::json ToJson() const;
  // Rebinds a snapshot to a corpus and providers. Throws DataError on a
  // malformed snapshot.
  static Session FromJson(const nlohmann::json &snapshot,
                          std::shared_ptr<const Corpus> corpus,
                          std::shared_ptr<const AffiliationResolver> affiliations,
                          std::shared_ptr<const SearchProvider> search);

 private:
  Session() = default;

  void AdvanceFromDiscipline(const Cluster &chosen);
  void AdvanceFromPrincipal(const Cluster &chosen);

  std::string id_;
  NameVariant query_;
  SessionState state_ = SessionState::kCreated;
  std::vector<Cluster> clusters_;
  std::vector<Cluster> set_aside_;
  std::vector<Decision> decisions_;
  std::string failure_;
  SessionConfig config_;
  std::shared_ptr<const Corpus> corpus_;
  Clock clock_;
};

// Supplies checkpoint decisions: a human through the service, a script, or a
// gold-label oracle.
class FeedbackProvider {
 public:
  virtual ~FeedbackProvider() = default;
  virtual std::string Decide(Checkpoint checkpoint,
                             std::span<const Cluster> options) = 0;
};

// Chooses the option holding the most records labeled `author_key`; ties go
// to the smaller cluster id.
class OracleFeedbackProvider : public FeedbackProvider {
 public:
  OracleFeedbackProvider(std::shared_ptr<const Corpus> corpus,
                         std::string author_key)
      : corpus_(std::move(corpus)), author_key_(std::move(author_key)) {}

  std::string Decide(Checkpoint checkpoint,
                     std::span<const Cluster> options) override;

 private:
  std::shared_ptr<const Corpus> corpus_;
  std::string author_key_;
};

// Replays recorded decisions in order. Throws DecisionError when the script
// runs out or names a different checkpoint.
class ScriptedFeedbackProvider : public FeedbackProvider {
 public:
  explicit ScriptedFeedbackProvider(std::vector<Decision> script)
      : script_(std::move(script)) {}

  // JSON array of {checkpoint: "discipline"|"principal", cluster_id}.
  static ScriptedFeedbackProvider Parse(std::string_view json_text);
  static ScriptedFeedbackProvider LoadFile(const std::string &path);

  std::string Decide(Checkpoint checkpoint,
                     std::span<const Cluster> options) override;

 private:
  std::vector<Decision> script_;
  std::size_t next_ = 0;
};

// Drives Start + SubmitDecision with `provider` until the session is
// terminal. An invalid decision fails the session instead of throwing.
Session RunWithProvider(std::shared_ptr<const Corpus> corpus, NameVariant query,
                        SessionConfig config, FeedbackProvider &provider,
                        std::string id = "batch");

// Serializes a decision log as a decision script.
nlohmann::json DecisionScriptJson(std::span<const Decision> decisions);

}  // namespace namediss

#endif  // NAMEDISS_SESSION_H_
