#include "abacus/serialization.hpp"
#include "abacus/service.hpp"

#include "httplib.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <thread>

using namespace abacus;

namespace {

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("abacus-service-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir_);
    ServiceConfig config;
    config.port = 0;
    config.data_dir = dir_;
    config.rod_count = 2;
    service_ = std::make_unique<Service>(config);
    port_ = service_->bind();
    thread_ = std::thread([this] { service_->run(); });
    service_->wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void TearDown() override {
    service_->stop();
    thread_.join();
    std::filesystem::remove_all(dir_);
  }

  json post(const std::string& path, const json& body, int expected = 200) {
    auto res = client_->Post(path, body.dump(), "application/json");
    EXPECT_TRUE(res);
    if (!res) return {};
    EXPECT_EQ(res->status, expected) << path << " " << res->body;
    return json::parse(res->body);
  }

  json get(const std::string& path, int expected = 200) {
    auto res = client_->Get(path);
    EXPECT_TRUE(res);
    if (!res) return {};
    EXPECT_EQ(res->status, expected) << path << " " << res->body;
    return json::parse(res->body);
  }

  std::filesystem::path dir_;
  std::unique_ptr<Service> service_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

const json kT1Eight = json::parse(R"({"register": "MATERIAL_ABACUS",
  "gestures": [{"type": "MoveUpper", "rod": 0, "delta": 1}, {"type": "MoveLower", "rod": 0, "delta": 3}]})");

}  // namespace

TEST_F(ServiceTest, Health) { EXPECT_EQ(get("/health")["status"], "ok"); }

TEST_F(ServiceTest, Economical) {
  EXPECT_EQ(get("/abacus/economical?n=25").get<AbacusConfig>(), set_economical(25, 2));
  EXPECT_EQ(get("/abacus/economical?n=25&rods=3").get<AbacusConfig>(), set_economical(25, 3));
  const json err = get("/abacus/economical?n=100", 400);
  EXPECT_EQ(err["error"], "Overflow");
  EXPECT_TRUE(err.contains("message"));
  EXPECT_EQ(get("/abacus/economical?n=abc", 400)["error"], "InvalidArgument");
  EXPECT_EQ(get("/abacus/economical", 400)["error"], "InvalidArgument");
}

TEST_F(ServiceTest, Normalize) {
  const json b = {{"config", AbacusConfig(std::vector<RodState>{{5, 0}, {2, 0}})}};
  EXPECT_EQ(post("/abacus/normalize", b).get<AbacusConfig>(), set_economical(25, 2));
  EXPECT_EQ(post("/abacus/normalize", json::parse(R"({"config": {"rods": [{"lower": 9, "upper": 0}]}})"), 400)["error"],
            "InvalidConfig");
}

TEST_F(ServiceTest, Inscriptions) {
  EXPECT_EQ(get("/abacus/inscriptions?n=25&rods=2").size(), 3u);
}

TEST_F(ServiceTest, Verbalize) {
  const json form = get("/verbalize?n=73&lang=fr");
  EXPECT_EQ(form["words"], "soixante-treize");
  EXPECT_EQ(form["formula"], "73=60+13");
  EXPECT_EQ(get("/verbalize?n=100&lang=en", 400)["error"], "OutOfSupportedRange");
}

TEST_F(ServiceTest, Classify) {
  const json report = post("/classify", {{"trace", kT1Eight}, {"target", 8}});
  EXPECT_EQ(report["technique_id"], "RA_T1");
  EXPECT_EQ(report["formula"], "8=5+3");
  const json bad = post("/classify", {{"trace", json::parse(R"([{"type":"CompoundMove","rod":0,"lower_delta":3,
      "upper_delta":1}])")}, {"target", 8}, {"rod_count", 1}});
  EXPECT_EQ(bad["technique_id"], "RMA_T5");
  EXPECT_EQ(post("/classify", {{"target", 8}}, 400)["error"], "InvalidJson");
}

TEST_F(ServiceTest, MalformedBody) {
  auto res = client_->Post("/classify", "{not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(json::parse(res->body)["error"], "InvalidJson");
}

TEST_F(ServiceTest, Worksheets) {
  const json spec = json::parse(R"({"rod_count": 2, "seed": 3, "items": [{"kind": "SET", "target": 8}]})");
  const json doc = post("/worksheets", {{"spec", spec}});
  ASSERT_EQ(doc["svg"].size(), 1u);
  EXPECT_NE(doc["svg"][0].get<std::string>().find("<svg"), std::string::npos);
  EXPECT_EQ(doc["key"]["0"]["value"], 8);
}

TEST_F(ServiceTest, SessionLifecycle) {
  const json created = post("/sessions", {{"participant", "pupil-1"}}, 201);
  const std::string id = created["id"];
  const json task = {{"kind", "SET_NUMBER"}, {"target", 8}, {"register", "MATERIAL_ABACUS"}};

  const json first = post("/sessions/" + id + "/attempts", {{"task", task}, {"trace", kT1Eight}, {"attempt_id", "x1"}});
  EXPECT_EQ(first["correct"], true);
  EXPECT_EQ(first["report"]["technique_id"], "RA_T1");
  // A client retry with the same attempt id is not recorded twice.
  EXPECT_EQ(post("/sessions/" + id + "/attempts", {{"task", task}, {"trace", kT1Eight}, {"attempt_id", "x1"}}), first);

  const json read_task = {{"kind", "READ_NUMBER"},
                          {"config", AbacusConfig(std::vector<RodState>{{5, 2}, {1, 0}})},
                          {"register", "VIRTUAL_ABACUS"}};
  const json read = post("/sessions/" + id + "/attempts", {{"task", read_task}, {"trace", json::array()}, {"answer", "25"}});
  EXPECT_EQ(read["correct"], true);

  const json session = get("/sessions/" + id);
  EXPECT_EQ(session["participant"], "pupil-1");
  EXPECT_EQ(session["attempts"].size(), 2u);
  EXPECT_EQ(session["summary"]["correct"], 2);
  EXPECT_EQ(session["summary"]["tag_frequencies"]["CALCULATING"], 1);
}

TEST_F(ServiceTest, SessionErrors) {
  EXPECT_EQ(get("/sessions/s-nothere", 404)["error"], "NotFound");
  EXPECT_EQ(post("/sessions", {{"participant", "Jane Doe"}}, 400)["error"], "InvalidArgument");
  const std::string id = post("/sessions", json::object(), 201)["id"];
  const json task = {{"kind", "SET_NUMBER"}, {"target", 8}, {"register", "VIRTUAL_ABACUS"}};
  const json err = post("/sessions/" + id + "/attempts", {{"task", task}, {"trace", kT1Eight}}, 400);
  EXPECT_EQ(err["error"], "UnreplayableTrace");
  const json say_task = {{"kind", "SET_AND_SAY"}, {"target", 73}, {"language", "FRENCH"}};
  EXPECT_EQ(post("/sessions/" + id + "/attempts",
                 {{"task", say_task}, {"trace", json::array()}, {"answer", "blah"}}, 400)["error"],
            "UnparsableWords");
}

TEST_F(ServiceTest, UnknownRoute) { EXPECT_EQ(get("/nowhere", 404)["error"], "NotFound"); }

TEST(ServiceConfig, EnvironmentFallback) {
  ::setenv("ABACUS_PORT", "9123", 1);
  ::setenv("ABACUS_RODS", "4", 1);
  ::setenv("ABACUS_DATA_DIR", "/tmp/abacus-env", 1);
  const auto c = config_from_env();
  EXPECT_EQ(c.port, 9123);
  EXPECT_EQ(c.rod_count, 4u);
  EXPECT_EQ(c.data_dir, "/tmp/abacus-env");
  ::unsetenv("ABACUS_PORT");
  ::unsetenv("ABACUS_RODS");
  ::unsetenv("ABACUS_DATA_DIR");
  EXPECT_EQ(config_from_env().port, 8080);
}
