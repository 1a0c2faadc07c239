// Command-line front end: run | verify | play | serve.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "baker/banach_mazur.hpp"
#include "baker/http.hpp"
#include "baker/io.hpp"
#include "baker/run.hpp"
#include "baker/session.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace baker;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kFault = 2;
constexpr int kConfig = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError(path + " is not valid JSON");
  return j;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

struct Overrides {
  std::optional<std::size_t> rounds;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

void apply(json& config, const Overrides& o) {
  if (o.rounds) {
    config.erase("N");
    config["rounds"] = *o.rounds;
  }
  if (o.seed) config["seed"] = *o.seed;
  if (o.out) config["out"] = *o.out;
}

int run_compare(const json& config) {
  const std::size_t rounds = config.value("rounds", std::size_t{10});
  const fs::path out = config.value("out", std::string("."));
  if (rounds == 0) throw ConfigError("compare-cantor needs at least one round");
  CantorComparison cmp = compare_on_cantor(rounds);
  fs::create_directories(out);
  write_file(out / "bm_transcript.jsonl", bm_transcript_jsonl(cmp.bm));
  CertificateBundle bm;
  bm.bm.push_back(cmp.bm_certificate);
  write_file(out / "bm_certificates.json", to_json(bm).dump(2) + "\n");
  write_file(out / "comparison.json", to_json(cmp).dump(2) + "\n");
  std::cout << "banach-mazur: final interval " << cmp.bm.current().str()
            << (cmp.bm_check ? " misses the Cantor set" : " INVALID: " + cmp.bm_check.reason) << "\n";
  for (const auto& r : cmp.baker)
    std::cout << "baker vs " << r.bob << ": " << (r.check ? "core chain valid" : "INVALID: " + r.check.reason) << "\n";
  return cmp.valid() ? kOk : kInvalid;
}

int cmd_run(const std::string& config_path, const Overrides& o) {
  RunSetup setup;
  json config;
  try {
    config = read_json_file(config_path);
    apply(config, o);
    if (config.is_object() && config.value("game", "") == "compare-cantor") return run_compare(config);
    setup = resolve(run_config_from_json(config));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }

  RunOutput result;
  try {
    result = execute(setup);
  } catch (const StrategyFault& e) {
    std::cerr << "strategy fault: " << e.what() << "\n";
    return kFault;
  }

  const fs::path out = setup.config.out;
  fs::create_directories(out);
  write_file(out / "transcript.jsonl", transcript_jsonl(result.transcript, result.alice_name, result.bob_name));
  write_file(out / "certificates.json", to_json(result.certificates).dump(2) + "\n");

  const auto& tr = result.transcript;
  std::cout << result.alice_name << " vs " << result.bob_name << ": " << tr.completed_rounds() << " rounds";
  if (tr.verdict == Verdict::AliceLosesImmediately) std::cout << ", alice loses immediately (mover stuck)";
  std::cout << "\n" << result.certificates.baker.size() << " certificates written to " << out.string() << "\n";
  return kOk;
}

int cmd_verify(const std::string& transcript_path, const std::string& cert_path) {
  VerifyReport rep;
  try {
    std::ifstream tin(transcript_path);
    if (!tin) throw ParseError("cannot read " + transcript_path);
    std::stringstream buf;
    buf << tin.rdbuf();
    const std::string text = buf.str();
    std::ifstream cin_(cert_path);
    if (!cin_) throw ParseError("cannot read " + cert_path);
    json cj = json::parse(cin_, nullptr, false);
    if (cj.is_discarded()) throw ParseError(cert_path + " is not valid JSON");
    CertificateBundle certs = bundle_from_json(cj);

    std::istringstream first(text);
    std::string header;
    std::getline(first, header);
    json h = json::parse(header, nullptr, false);
    std::istringstream in(text);
    if (h.is_object() && h.value("game", "") == "banach-mazur")
      rep = verify_bm(parse_bm_transcript_jsonl(in), certs);
    else
      rep = verify_baker(parse_transcript_jsonl(in), certs);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kConfig;
  }
  for (const auto& f : rep.failures) std::cout << "INVALID " << f << "\n";
  std::cout << (rep.ok ? "valid" : "invalid") << ": " << rep.checked << " certificates checked\n";
  return rep.ok ? kOk : kInvalid;
}

int cmd_play(const std::string& config_path, const Overrides& o) {
  std::unique_ptr<GameSession> session;
  try {
    json config = config_path.empty() ? json{{"bob", "midpoint"}} : read_json_file(config_path);
    apply(config, o);
    session = std::make_unique<GameSession>(config);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }
  auto show = [](const json& s) {
    std::cout << "round " << s["round"].get<std::size_t>() << "  legal (" << s["bounds"]["lo"].get<std::string>()
              << ", " << s["bounds"]["hi"].get<std::string>() << ")  status " << s["status"].get<std::string>();
    if (s.contains("fault")) std::cout << " (" << s["fault"].get<std::string>() << ")";
    std::cout << "\n";
  };
  std::size_t seen = 0;
  auto show_moves = [&](const json& s) {
    const auto& h = s["history"];
    for (; seen < h.size(); ++seen)
      std::cout << "  " << h[seen]["player"].get<std::string>() << h[seen]["round"].get<std::size_t>() << " = "
                << h[seen]["value"].get<std::string>() << "\n";
  };
  json s = session->state();
  show_moves(s);
  show(s);
  std::string line;
  while (s["status"] == "ongoing") {
    std::cout << (session->human() == Player::Alice ? "alice> " : "bob> ") << std::flush;
    if (!std::getline(std::cin, line) || line == "quit") break;
    if (line.empty()) continue;
    auto reply = session->submit(line);
    if (reply.status != 200) {
      std::cout << "rejected: " << reply.body["error"].get<std::string>() << "\n";
      continue;
    }
    s = reply.body;
    show_moves(s);
    show(s);
  }
  return kOk;
}

httplib::Server* g_server = nullptr;

int cmd_serve(int port, const std::string& config_path, int idle_seconds) {
  json defaults = json::object();
  try {
    if (!config_path.empty()) defaults = read_json_file(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }
  GameService service(std::chrono::seconds(idle_seconds), defaults);
  httplib::Server server;
  mount(server, service);
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  if (!server.bind_to_port("0.0.0.0", port)) {
    std::cerr << "cannot bind port " << port << "\n";
    return 1;
  }
  std::cout << "serving on port " << port << "\n" << std::flush;
  server.listen_after_bind();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cantor, Baker and Banach-Mazur game workbench"};
  app.require_subcommand(1);

  std::string config;
  Overrides o;
  auto add_overrides = [&](CLI::App* sub) {
    sub->add_option("--rounds", o.rounds, "Truncation N");
    sub->add_option("--seed", o.seed, "Seed");
    sub->add_option("--out", o.out, "Output directory");
  };

  auto* run = app.add_subcommand("run", "Play a configured game and write transcript and certificates");
  run->add_option("--config", config, "Run config (JSON)")->required();
  add_overrides(run);

  std::string transcript, certs;
  auto* verify = app.add_subcommand("verify", "Re-check certificates against a transcript");
  verify->add_option("transcript", transcript, "Transcript JSONL")->required();
  verify->add_option("certificates", certs, "Certificates JSON")->required();

  auto* play = app.add_subcommand("play", "Play interactively in the terminal");
  play->add_option("--config", config, "Game config (JSON)");
  add_overrides(play);

  int port = 8080;
  int idle = 1800;
  auto* serve = app.add_subcommand("serve", "Host the HTTP/JSON game service");
  serve->add_option("--port", port, "Port");
  serve->add_option("--config", config, "Default config merged into created games");
  serve->add_option("--idle", idle, "Session idle expiry in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kConfig;
  }

  try {
    if (*run) return cmd_run(config, o);
    if (*verify) return cmd_verify(transcript, certs);
    if (*play) return cmd_play(config, o);
    if (*serve) return cmd_serve(port, config, idle);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
