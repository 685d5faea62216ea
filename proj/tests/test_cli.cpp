#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "qmc/io.hpp"
#include "qmc/report.hpp"

using namespace qmc;
using json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(QMC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Workdir {
 public:
  Workdir() : dir_(std::filesystem::temp_directory_path() / "qmc_cli_test") {
    std::filesystem::create_directories(dir_);
  }
  ~Workdir() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    io::write_text(path, text);
    return path.string();
  }
  std::string channel(const KrausSet& k) const { return write(k.label() + ".json", io::channel_to_json(k).dump()); }

 private:
  std::filesystem::path dir_;
};

const char* kGoldenState = R"({"rho": [[[0.6,0],[0.2,0.1]],[[0.2,-0.1],[0.4,0]]]})";

}  // namespace

TEST_CASE("catalog output feeds the analysis commands") {
  Workdir w;
  const Run cat = cli("catalog phase_flip");
  REQUIRE(cat.status == 0);
  const auto ch = w.write("pf.json", cat.out);
  CHECK(io::channel_from_json(json::parse(cat.out)).label() == "phase_flip");

  const Run v = cli("validate " + ch);
  CHECK(v.status == 0);
  CHECK(json::parse(v.out).at("bistochastic") == true);

  const Run c = cli("classify " + ch);
  CHECK(c.status == 0);
  CHECK(json::parse(c.out).at("category") == 2);

  const Run s = cli("spectrum " + ch);
  CHECK(s.status == 0);
  CHECK(json::parse(s.out).at("g1") == 2);

  const auto state = w.write("rho.json", kGoldenState);
  const Run lim = cli("limit " + ch + " --state " + state);
  CHECK(lim.status == 0);
  const ComplexMatrix rho = io::matrix_from_json(json::parse(lim.out).at("rho"));
  CHECK((rho - test::diag({0.6, 0.4})).norm() < 1e-12);

  const Run ev = cli("evolve " + ch + " --state " + state + " --steps 3");
  CHECK(ev.status == 0);
  CHECK(ev.out == "t,distance\n1,0.158113883008\n2,0.0790569415042\n3,0.0395284707521\n");
}

TEST_CASE("catalog parameters") {
  const Run r = cli("catalog depolarizing --param p=0.75");
  REQUIRE(r.status == 0);
  const auto k = io::channel_from_json(json::parse(r.out));
  CHECK(std::abs(k.operators()[0](0, 0) - 0.5) < 1e-15);
  CHECK(cli("catalog depolarizing --param q=0.1").status == 1);
  CHECK(cli("catalog depolarizing --param p=abc").status == 1);
  CHECK(cli("catalog no_such_channel").status == 1);
}

TEST_CASE("exit codes for mathematical obstructions") {
  Workdir w;
  const auto state = w.write("rho.json", kGoldenState);
  const auto zc = w.channel(test::z_conjugation());
  CHECK(cli("limit " + zc + " --state " + state).status == 2);
  const Run ces = cli("cesaro " + zc + " --state " + state);
  CHECK(ces.status == 0);
  CHECK((io::matrix_from_json(json::parse(ces.out).at("rho")) - test::diag({0.6, 0.4})).norm() < 1e-12);

  const KrausSet ad({test::mat2(1, 0, 0, std::sqrt(0.7)), test::mat2(0, std::sqrt(0.3), 0, 0)}, "ad");
  const auto adp = w.channel(ad);
  const Run v = cli("validate " + adp);
  CHECK(v.status == 2);
  CHECK(json::parse(v.out).at("unital") == false);
  CHECK(cli("classify " + adp).status == 2);
  CHECK(cli("check " + adp).status == 2);
}

TEST_CASE("exit codes for malformed input") {
  Workdir w;
  CHECK(cli("validate " + w.write("bad.json", "{not json")).status == 1);
  CHECK(cli("validate /nonexistent/channel.json").status == 1);
  CHECK(cli("validate " + w.write("shape.json", R"({"dim": 2, "kraus": [[[[1,0]]]]})")).status == 1);
  const auto pf = w.channel(catalog::make_phase_flip(0.75));
  CHECK(cli("limit " + pf + " --state " + w.write("s.json", R"({"rho": [[[2,0],[0,0]],[[0,0],[0,0]]]})")).status == 1);
  CHECK(cli("frobnicate").status == 1);
  CHECK(cli("evolve " + pf).status == 1);
}

TEST_CASE("walk command") {
  Workdir w;
  const WalkSpec spec(PortGraph::cycle(4), catalog::hadamard());
  const auto file = w.write("walk.json", io::walk_to_json(spec, WalkState::basis(spec, 0, 0)).dump());
  const Run r = cli("walk " + file + " --steps 1000 --limit");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("nodes") == 4);
  CHECK(j.at("limit").size() == 4);
  CHECK(j.at("l1_gap").get<double>() <= 5e-3);

  const WalkSpec noisy(PortGraph::cycle(4), catalog::hadamard(), 0.3);
  const auto nfile = w.write("noisy.json", io::walk_to_json(noisy, WalkState::basis(noisy, 0, 0)).dump());
  const Run n = cli("walk " + nfile + " --steps 2000 --limit");
  REQUIRE(n.status == 0);
  CHECK(json::parse(n.out).at("l1_gap").get<double>() <= 1e-2);
}

TEST_CASE("check is deterministic and matches the library") {
  const std::string args = "check --catalog --random 6 --seed 7";
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);

  std::vector<KrausSet> channels;
  for (const auto& e : catalog::entries()) channels.push_back(catalog::build(e.name));
  for (auto& k : test::random_mixtures(6, 7)) channels.push_back(std::move(k));
  CHECK(a.out == report::dump(report::check_suite(channels, {}, 7).report));

  CHECK(cli("check").status == 1);
}
