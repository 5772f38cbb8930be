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
#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "support/fixtures.h"

namespace namediss {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return Result{code, out.str(), err.str()};
}

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void Spit(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Asks the kernel for an unused loopback port and releases it.
int FreePort() {
  const int sock = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  socklen_t len = sizeof(addr);
  int port = -1;
  if (::bind(sock, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) == 0 &&
      ::getsockname(sock, reinterpret_cast<sockaddr *>(&addr), &len) == 0) {
    port = ntohs(addr.sin_port);
  }
  ::close(sock);
  return port;
}

// A scratch directory with the mixed fixture and its venue map.
class Workspace {
 public:
  Workspace() {
    dir_ = fs::temp_directory_path() /
           ("namediss_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(dir_);
    std::ofstream corpus(Path("mixed.jsonl"));
    WriteJsonl(testing::MixedCitationCorpus(), corpus);
    std::ofstream venues(Path("venues.csv"));
    venues << "venue,discipline\n";
    const VenueMap venue_map = testing::FixtureVenues();
    for (const auto &[venue, label] : venue_map.entries()) {
      venues << '"' << venue << "\"," << label << "\n";
    }
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const { return (dir_ / name).string(); }

  std::vector<std::string> RunArgs(const std::string &output) const {
    return {"run",          "--input",    Path("mixed.jsonl"), "--venue-map",
            Path("venues.csv"), "--query", "M. Imran",          "--provider",
            "oracle",       "--gold-key", "imran_a",           "--output",
            output};
  }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

TEST_CASE("run writes the cluster file") {
  Workspace ws;
  const Result r = Run(ws.RunArgs(ws.Path("out.json")));
  REQUIRE(r.code == kExitOk);
  const nlohmann::json out = nlohmann::json::parse(Slurp(ws.Path("out.json")));
  CHECK(out.at("session_id") == "batch");
  CHECK(out.at("query") == "M. Imran");
  CHECK(out.at("principal_cluster_id") == "c:a0");
  CHECK(out.at("clusters").size() == 2);
  CHECK(out.at("clusters")[0].at("record_ids").size() == 10);
}

TEST_CASE("run is byte-for-byte repeatable") {
  Workspace ws;
  REQUIRE(Run(ws.RunArgs(ws.Path("one.json"))).code == kExitOk);
  REQUIRE(Run(ws.RunArgs(ws.Path("two.json"))).code == kExitOk);
  CHECK(Slurp(ws.Path("one.json")) == Slurp(ws.Path("two.json")));
  const Result stdout_run = Run(ws.RunArgs("-"));
  CHECK(stdout_run.out == Slurp(ws.Path("one.json")));
}

TEST_CASE("run with a script") {
  Workspace ws;
  Spit(ws.Path("script.json"),
       R"([{"checkpoint":"discipline","cluster_id":"c:b0"},
           {"checkpoint":"principal","cluster_id":"c:b0"}])");
  std::vector<std::string> args = {"run", "--input", ws.Path("mixed.jsonl"),
                                   "--venue-map", ws.Path("venues.csv"),
                                   "--query", "M. Imran", "--provider", "script",
                                   "--script", ws.Path("script.json"),
                                   "--output", ws.Path("out.json")};
  CHECK(Run(args).code == kExitOk);
  CHECK(nlohmann::json::parse(Slurp(ws.Path("out.json"))).at("principal_cluster_id") ==
        "c:b0");

  Spit(ws.Path("script.json"), R"([{"checkpoint":"discipline","cluster_id":"c:zz"}])");
  const Result bad = Run(args);
  CHECK(bad.code == kExitData);
  CHECK(bad.err.find("c:zz") != std::string::npos);
}

TEST_CASE("run configuration errors exit 1") {
  Workspace ws;
  std::vector<std::string> args = ws.RunArgs(ws.Path("out.json"));
  args[2] = ws.Path("missing.jsonl");
  CHECK(Run(args).code == kExitConfig);

  CHECK(Run({"run", "--input", ws.Path("mixed.jsonl"), "--query", "M. Imran",
             "--provider", "telepathy"})
            .code == kExitConfig);
  CHECK(Run({"run", "--input", ws.Path("mixed.jsonl"), "--query", "M. Imran"}).code ==
        kExitConfig);

  std::vector<std::string> threshold = ws.RunArgs(ws.Path("out.json"));
  threshold.insert(threshold.end(), {"--threshold-affiliation", "1.5"});
  CHECK(Run(threshold).code == kExitConfig);

  CHECK(Run({"frobnicate"}).code == kExitConfig);
  CHECK(Run({}).code == kExitConfig);
  CHECK(Run({"--help"}).code == kExitOk);
}

TEST_CASE("malformed corpus exits 2") {
  Workspace ws;
  Spit(ws.Path("broken.jsonl"), "{\"id\":\"x\",\"title\":\"T\",\"authors\":[]}\n");
  std::vector<std::string> args = ws.RunArgs(ws.Path("out.json"));
  args[2] = ws.Path("broken.jsonl");
  const Result r = Run(args);
  CHECK(r.code == kExitData);
  CHECK(r.err.find("line 1") != std::string::npos);
}

TEST_CASE("NAMEDISS_CONFIG supplies defaults that flags override") {
  Workspace ws;
  Spit(ws.Path("namediss.toml"), "# batch settings\ninput = \"" + ws.Path("mixed.jsonl") +
                                     "\"\nvenue-map = \"" + ws.Path("venues.csv") +
                                     "\"\ngold_key = \"imran_b\"\nprovider = \"oracle\"\n");
  ::setenv("NAMEDISS_CONFIG", ws.Path("namediss.toml").c_str(), 1);
  const Result from_file =
      Run({"run", "--query", "M. Imran", "--output", ws.Path("out.json")});
  CHECK(from_file.code == kExitOk);
  CHECK(nlohmann::json::parse(Slurp(ws.Path("out.json"))).at("principal_cluster_id") ==
        "c:b0");
  CHECK(Run({"run", "--query", "M. Imran", "--gold-key", "imran_a", "--output",
             ws.Path("out.json")})
            .code == kExitOk);
  CHECK(nlohmann::json::parse(Slurp(ws.Path("out.json"))).at("principal_cluster_id") ==
        "c:a0");

  Spit(ws.Path("namediss.toml"), "colour = \"blue\"\n");
  CHECK(Run({"run", "--query", "M. Imran"}).code == kExitConfig);
  ::unsetenv("NAMEDISS_CONFIG");
}

TEST_CASE("eval prints scores") {
  Workspace ws;
  REQUIRE(Run(ws.RunArgs(ws.Path("out.json"))).code == kExitOk);
  const Result r = Run({"eval", "--input", ws.Path("mixed.jsonl"), ws.Path("out.json"),
                        "--output", ws.Path("report.json")});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("precision  1.0000") != std::string::npos);
  CHECK(r.out.find("f1         1.0000") != std::string::npos);
  const nlohmann::json report = nlohmann::json::parse(Slurp(ws.Path("report.json")));
  CHECK(report.at("pairwise").at("f1") == 1.0);

  // All twenty records in one cluster: two authors of ten records each.
  nlohmann::json all = {{"clusters", nlohmann::json::array()}};
  nlohmann::json ids = nlohmann::json::array();
  for (const char *prefix : {"a", "b"}) {
    for (int i = 0; i < 10; ++i) ids.push_back(prefix + std::to_string(i));
  }
  all["clusters"].push_back({{"id", "c:a0"}, {"record_ids", ids}});
  Spit(ws.Path("all.json"), all.dump());
  const Result merged = Run({"eval", "--input", ws.Path("mixed.jsonl"), ws.Path("all.json")});
  REQUIRE(merged.code == kExitOk);
  // 2 * C(10,2) = 90 correct pairs out of C(20,2) = 190.
  CHECK(merged.out.find("precision  0.4737") != std::string::npos);
  CHECK(merged.out.find("recall     1.0000") != std::string::npos);

  Spit(ws.Path("stray.json"), R"({"clusters":[{"id":"c:x","record_ids":["zz"]}]})");
  CHECK(Run({"eval", "--input", ws.Path("mixed.jsonl"), ws.Path("stray.json")}).code ==
        kExitData);
  Spit(ws.Path("junk.json"), "[");
  CHECK(Run({"eval", "--input", ws.Path("mixed.jsonl"), ws.Path("junk.json")}).code ==
        kExitData);
  CHECK(Run({"eval", "--input", ws.Path("mixed.jsonl"), ws.Path("nothing.json")}).code ==
        kExitConfig);
}

TEST_CASE("ingest converts DBLP XML to JSONL") {
  Workspace ws;
  Spit(ws.Path("dblp.xml"),
       "<dblp><inproceedings key=\"conf/x/Imran12\"><author>M. Imran</author>"
       "<author>F. Daniel</author><title>T</title><booktitle>ICWE</booktitle>"
       "</inproceedings></dblp>");
  const Result r = Run({"ingest", "--input", ws.Path("dblp.xml")});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out ==
        "{\"authors\":[\"M. Imran\",\"F. Daniel\"],\"id\":\"conf/x/Imran12\","
        "\"title\":\"T\",\"venue\":\"ICWE\"}\n");

  Spit(ws.Path("bad.xml"), "<dblp><article key=\"k\">");
  const Result bad = Run({"ingest", "--input", ws.Path("bad.xml")});
  CHECK(bad.code == kExitData);
  CHECK(bad.err.find("byte offset") != std::string::npos);
  CHECK(Run({"ingest", "--input", ws.Path("none.xml")}).code == kExitConfig);
}

TEST_CASE("serve rejects unusable ports") {
  Workspace ws;
  CHECK(Run({"serve", "--input", ws.Path("mixed.jsonl"), "--port", "0"}).code == kExitConfig);
  CHECK(Run({"serve", "--input", ws.Path("mixed.jsonl"), "--port", "70000"}).code ==
        kExitConfig);

  httplib::Server occupant;
  const int port = occupant.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  CHECK(Run({"serve", "--input", ws.Path("mixed.jsonl"), "--port", std::to_string(port)})
            .code == kExitConfig);
}

TEST_CASE("serve answers requests and exits 0 on SIGTERM") {
  Workspace ws;
  const int port = FreePort();
  REQUIRE(port > 0);
  const std::string input = ws.Path("mixed.jsonl");
  const std::string port_text = std::to_string(port);
  const pid_t child = ::fork();
  REQUIRE(child >= 0);
  if (child == 0) {
    const int devnull = ::open("/dev/null", O_WRONLY);
    ::dup2(devnull, STDERR_FILENO);
    ::execl(NAMEDISS_CLI_BINARY, "namediss", "serve", "--input", input.c_str(), "--port",
            port_text.c_str(), static_cast<char *>(nullptr));
    ::_exit(127);
  }

  httplib::Client client("127.0.0.1", port);
  bool up = false;
  for (int attempt = 0; attempt < 100 && !up; ++attempt) {
    auto res = client.Get("/api/health");
    up = res && res->status == 200 && res->body == "ok";
    if (!up) std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
  CHECK(up);
  auto created = client.Post("/api/sessions", R"({"query":"M. Imran"})", "application/json");
  CHECK((created && created->status == 201));

  ::kill(child, SIGTERM);
  int status = 0;
  REQUIRE(::waitpid(child, &status, 0) == child);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
}

}  // namespace
}  // namespace namediss
