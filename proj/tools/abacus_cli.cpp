// Command-line front end. JSON goes to stdout; errors go to stderr as
// {"error", "message"}. Exit status: 0 ok, 1 domain error, 2 usage error.

#include "abacus/error.hpp"
#include "abacus/fingers.hpp"
#include "abacus/serialization.hpp"
#include "abacus/service.hpp"
#include "abacus/worksheet.hpp"

#include "CLI11.hpp"

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using abacus::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return json::parse(in);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

abacus::Service* running_service = nullptr;

void on_signal(int) {
  if (running_service) running_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chinese abacus (suan-pan) model"};
  app.require_subcommand(1);

  std::string number, path, text, lang = "en", target, out_dir, style = "FULL_BEADS", system = "CHAMBAA";
  std::size_t rods = abacus::kDefaultRodCount;

  auto* set_cmd = app.add_subcommand("set", "Economical inscription of n");
  set_cmd->add_option("n", number)->required();
  set_cmd->add_option("--rods", rods);

  auto* read_cmd = app.add_subcommand("read", "Value shown by a config file");
  read_cmd->add_option("config", path, "config JSON, - for stdin")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Economical form of a config file");
  normalize_cmd->add_option("config", path)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Every inscription of n");
  enumerate_cmd->add_option("n", number)->required();
  enumerate_cmd->add_option("--rods", rods);

  auto* say_cmd = app.add_subcommand("say", "Numeral words and decomposition of n");
  say_cmd->add_option("n", number)->required();
  say_cmd->add_option("--lang", lang);

  auto* parse_cmd = app.add_subcommand("parse-words", "Value named by numeral words");
  parse_cmd->add_option("text", text)->required();
  parse_cmd->add_option("--lang", lang);

  auto* classify_cmd = app.add_subcommand("classify", "Technique report for a trace file");
  classify_cmd->add_option("trace", path)->required();
  classify_cmd->add_option("--target", target)->required();
  classify_cmd->add_option("--rods", rods);

  auto* worksheet_cmd = app.add_subcommand("worksheet", "Printable worksheet from a spec file");
  worksheet_cmd->add_option("spec", path)->required();
  worksheet_cmd->add_option("--out-dir", out_dir, "write page-N.svg and key.json here");

  auto* render_cmd = app.add_subcommand("render", "Drawing of a config file");
  render_cmd->add_option("config", path)->required();
  render_cmd->add_option("--style", style);

  auto* fingers_cmd = app.add_subcommand("fingers", "Hand decompositions of n");
  fingers_cmd->add_option("n", number)->required();
  fingers_cmd->add_option("--system", system, "FRENCH_STANDARD, CHAMBAA or MAKONDE");

  abacus::ServiceConfig service_config = abacus::config_from_env();
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP+JSON service");
  serve_cmd->add_option("--host", service_config.host);
  serve_cmd->add_option("--port", service_config.port);
  serve_cmd->add_option("--data-dir", service_config.data_dir);
  serve_cmd->add_option("--rods", service_config.rod_count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*set_cmd) {
      print(abacus::set_economical(abacus::parse_natural(number), rods));
    } else if (*read_cmd) {
      const auto config = read_json(path).get<abacus::AbacusConfig>();
      print({{"value", abacus::read_value(config)}, {"economical", abacus::is_economical(config)}});
    } else if (*normalize_cmd) {
      print(abacus::normalize(read_json(path).get<abacus::AbacusConfig>()));
    } else if (*enumerate_cmd) {
      print(abacus::enumerate_inscriptions(abacus::parse_natural(number), rods));
    } else if (*say_cmd) {
      print(abacus::say(abacus::parse_natural(number), abacus::parse_language(lang)));
    } else if (*parse_cmd) {
      const auto l = abacus::parse_language(lang);
      const std::int64_t value = abacus::parse_words(text, l);
      print({{"value", value}, {"language", l}});
    } else if (*classify_cmd) {
      const auto trace = read_json(path).get<abacus::Trace>();
      print(abacus::classify(trace, abacus::parse_natural(target), rods));
    } else if (*worksheet_cmd) {
      const auto spec = read_json(path).get<abacus::WorksheetSpec>();
      const auto doc = abacus::worksheet_generate(spec);
      if (out_dir.empty()) {
        print({{"svg", doc.pages}, {"key", doc.key}});
      } else {
        std::filesystem::create_directories(out_dir);
        json files = json::array();
        for (std::size_t i = 0; i < doc.pages.size(); ++i) {
          const auto file = std::filesystem::path(out_dir) / ("page-" + std::to_string(i + 1) + ".svg");
          std::ofstream(file, std::ios::binary) << doc.pages[i];
          files.push_back(file.string());
        }
        const auto key_file = std::filesystem::path(out_dir) / "key.json";
        std::ofstream(key_file, std::ios::binary) << doc.key.dump(2) << '\n';
        print({{"pages", files}, {"key", key_file.string()}});
      }
    } else if (*render_cmd) {
      const auto config = read_json(path).get<abacus::AbacusConfig>();
      const auto drawing = abacus::render(config, abacus::parse_drawing_style(style));
      print({{"svg", drawing.svg}, {"structure", drawing.structure}});
    } else if (*fingers_cmd) {
      const int n = abacus::parse_natural(number) > 10 ? 11 : abacus::parse_natural(number).convert_to<int>();
      json pairs = json::array();
      for (const auto& [left, right] : abacus::enumerate_hand_decompositions(n)) pairs.push_back({left, right});
      json out = {{"value", n}, {"hands", pairs}};
      const auto s = abacus::parse_finger_system(system);
      if (abacus::finger_system(s).supported_values.contains(n)) out["cultural"] = abacus::cultural_decomposition(n, s);
      print(out);
    } else if (*serve_cmd) {
      abacus::Service service(service_config);
      const int port = service.bind();
      running_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cout << json{{"listening", service_config.host}, {"port", port}}.dump() << std::endl;
      service.run();
      running_service = nullptr;
    }
  } catch (const abacus::DomainError& e) {
    std::cerr << json{{"error", abacus::to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "InvalidJson"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const UsageError& e) {
    std::cerr << json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
