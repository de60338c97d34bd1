#pragma once

// Local HTTP+JSON API over the session store and the abacus engine.

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>

namespace abacus {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = "abacus-data";
  std::size_t rod_count = 6;
};

/// Overrides fields of `base` from ABACUS_PORT, ABACUS_DATA_DIR and
/// ABACUS_RODS when they are set. Command-line flags are applied afterwards.
ServiceConfig config_from_env(ServiceConfig base = {});

class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds the configured port, or any free port when it is 0, and returns
  /// the bound port. Throws std::runtime_error when binding fails.
  int bind();
  /// Serves until stop(). Call bind() first.
  void run();
  /// Blocks until run() is accepting connections.
  void wait_until_ready() const;
  void stop();

  const ServiceConfig& config() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace abacus
