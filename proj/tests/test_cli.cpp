#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sigdim/cli.hpp"
#include "sigdim/serialize.hpp"

using namespace sigdim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("sigdim_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string emit(const std::string& name) {
  const auto path = (scratch() / (name + ".json")).string();
  RunConfig c;
  c.command = "model";
  c.name = name;
  c.output_path = path;
  REQUIRE(call(c).code == kOk);
  return path;
}

std::string distribution_file(const std::string& stem, const std::string& probs) {
  const auto path = (scratch() / (stem + ".json")).string();
  put(path, R"({"format": 1, "probs": )" + probs + "}");
  return path;
}

int shell(const std::string& args) {
  const std::string cmd = std::string(SIGDIM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("vertices") {
    RunConfig c;
    c.command = "vertices";
    c.m = 16, c.n = 9, c.d = 5;
    const auto r = call(c);
    CHECK(r.code == kOk);
    CHECK(r.out == "17097522761601\n");
  }

  TEST_CASE("model and measurements") {
    const auto squit = emit("squit");
    RunConfig c;
    c.command = "measurements";
    c.system_path = squit;
    c.output_path = (scratch() / "squit_orbits.json").string();
    const auto r = call(c);
    CHECK(r.code == kOk);
    CHECK(r.out == "2 measurements, 1 orbits\n");
    const auto doc = read_json_file(c.output_path);
    CHECK(doc["format"] == 1);
    CHECK(doc["orbits"][0]["size"] == 2);
    CHECK(doc["orbits"][0]["weights_x240"] == Json::parse("[0,120,0,120]"));

    // round trip of the system file
    const auto system = system_from_json(read_json_file(squit));
    CHECK(system_to_json(system) == read_json_file(squit));
  }

  TEST_CASE("signaling of the squit and of HS") {
    RunConfig c;
    c.command = "signaling";
    c.system_path = emit("squit");
    CHECK(call(c).out == "2\n");

    c.system_path = emit("HS");
    c.report_path = (scratch() / "hs_report_1.json").string();
    c.csv_path = (scratch() / "hs_report_1.csv").string();
    const auto r = call(c);
    CHECK(r.code == kOk);
    CHECK(r.out == "5\n");
    const auto csv = file(c.csv_path);
    CHECK(csv.starts_with("M,#,d,witness value,v,V\n"));
    CHECK(csv.find(",9,5,8/5,488092,") != std::string::npos);

    // identical artifacts with more threads
    c.threads = 2;
    c.report_path = (scratch() / "hs_report_2.json").string();
    c.csv_path = (scratch() / "hs_report_2.csv").string();
    CHECK(call(c).code == kOk);
    CHECK(file(scratch() / "hs_report_1.json") == file(scratch() / "hs_report_2.json"));
    CHECK(file(scratch() / "hs_report_1.csv") == file(scratch() / "hs_report_2.csv"));
  }

  TEST_CASE("classify") {
    RunConfig c;
    c.command = "classify";
    const auto r = call(c);
    CHECK(r.code == kOk);
    CHECK(r.out.starts_with("PR states {16,17,18,19,20,21,22,23} effects {}\nHS states {}"));
    CHECK(r.out.find("JANOTTA rejected") != std::string::npos);
  }

  TEST_CASE("effective, dimension and witness") {
    const auto p = distribution_file("p", R"([["1/2","1/2","0"],["0","1/2","1/2"],["1/2","0","1/2"]])");
    RunConfig c;
    c.command = "effective";
    c.input_path = p;
    c.d = 2;
    auto r = call(c);
    CHECK(r.code == kOk);
    CHECK(r.out == "[0,1,0]\n[0,2,0]\n[0,2,2]\n[1,1,0]\n[1,1,2]\n[1,2,2]\n");

    c.command = "dimension";
    c.d.reset();
    c.output_path = (scratch() / "p_report.json").string();
    r = call(c);
    CHECK(r.code == kOk);
    CHECK(r.out == "2\n");
    CHECK(read_json_file(c.output_path)["minimal_d"] == 2);

    c.command = "witness";
    c.d = 1;
    c.output_path = (scratch() / "p_witness.json").string();
    r = call(c);
    CHECK(r.code == kOk);
    const auto w = read_json_file(c.output_path);
    CHECK(w["type"] == "witness");
    CHECK(w["value"] == r.out.substr(0, r.out.size() - 1));

    c.d = 2;
    c.output_path.clear();
    r = call(c);
    CHECK(r.code == kNegative);
  }

  TEST_CASE("input errors name the field") {
    RunConfig c;
    c.command = "dimension";
    c.input_path = distribution_file("bad_row", R"([["1/2","1/3"]])");
    auto r = call(c);
    CHECK(r.code == kInputError);
    CHECK(r.err.find("probs[0]") != std::string::npos);

    put(scratch() / "broken.json", "{\"format\": 1, ");
    c.input_path = (scratch() / "broken.json").string();
    r = call(c);
    CHECK(r.code == kInputError);
    CHECK(r.err.find("malformed JSON") != std::string::npos);

    put(scratch() / "nostates.json", R"({"format": 1, "linear_dimension": 3, "effects": [], "unit_effect": []})");
    c.command = "signaling";
    c.system_path = (scratch() / "nostates.json").string();
    r = call(c);
    CHECK(r.code == kInputError);
    CHECK(r.err.find("system.states") != std::string::npos);

    c.command = "vertices";
    c.m = 3, c.n = 3, c.d = 0;
    r = call(c);
    CHECK(r.code == kInputError);
    CHECK(r.err.find("--d") != std::string::npos);

    c.d = 2;
    c.box = "-1";
    r = call(c);
    CHECK(r.code == kInputError);
    CHECK(r.err.find("--box") != std::string::npos);

    c.box = "1";
    c.threads = 0;
    r = call(c);
    CHECK(r.code == kInputError);
    CHECK(r.err.find("--threads") != std::string::npos);

    // each diagnostic is a single line
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }

  TEST_CASE("executable exit codes") {
    CHECK(shell("vertices --m 2 --n 2 --d 2") == 0);
    CHECK(shell("vertices --m 2 --n 2 --d 0") == 2);
    CHECK(shell("frobnicate") == 2);
    const auto vertex = distribution_file("vertex", R"([["1","0"],["0","1"]])");
    CHECK(shell("witness --input " + vertex + " --d 2") == 1);
    CHECK(shell("witness --input " + vertex + " --d 1") == 0);
  }
}
