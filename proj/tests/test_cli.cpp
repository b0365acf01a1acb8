#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sphere_chroma/chromatic.hpp"
#include "sphere_chroma/cli.hpp"
#include "sphere_chroma/formats.hpp"
#include "sphere_chroma/spheres.hpp"

using namespace sphere_chroma;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("cli examples") {
  auto lemma = run({"verify", "lemma2", "--n", "5"});
  CHECK(lemma.status == cli::kExitOk);
  CHECK(lemma.out == "{\"lemma\":\"sphere-kneser\",\"n\":5,\"ok\":true}\n");

  auto graph = run({"generate", "sphere", "--n", "5"});
  REQUIRE(graph.status == cli::kExitOk);
  auto chi = run({"chi", "--exact"}, graph.out);
  CHECK(chi.status == cli::kExitOk);
  CHECK(chi.out == "{\"chi\":3}\n");

  auto count = run({"count", "--r", "3", "--rank-mode", "paper"});
  CHECK(count.status == cli::kExitOk);
  CHECK(count.out == "{\"t\":7,\"x\":3673600,\"log2_f\":152.66,\"bound_9r2r\":216,\"ok\":true}\n");

  auto computed = json::parse(run({"count", "--r", "3", "--rank-mode", "computed"}).out);
  CHECK(computed["x"] == 3696);
}

TEST_CASE("cli count keeps big integers exact") {
  auto count = json::parse(run({"count", "--r", "16", "--rank-mode", "paper"}).out);
  CHECK(count["t"] == 65535);
  CHECK(count["x"].is_string());
  CHECK(count["ok"] == true);
}

TEST_CASE("cli generate and chi") {
  auto kneser = json::parse(run({"generate", "kneser", "--n", "5", "--k", "2"}).out);
  CHECK(kneser["vertex_labels"].size() == 10);
  CHECK(kneser["edges"].size() == 15);

  auto farey = json::parse(run({"generate", "farey", "--depth", "2", "--fins"}).out);
  CHECK(farey["vertex_labels"].size() == 12);

  auto glued = json::parse(run({"generate", "glued", "--r", "3", "--with-cut-spheres"}).out);
  CHECK(glued["vertex_labels"].size() == 28);

  auto bounds = run({"chi", "--bounds"}, run({"generate", "sphere", "--n", "6"}).out);
  CHECK(bounds.out == "{\"lower\":3,\"upper\":" +
                          std::to_string(greedy_dsatur(sphere_graph_holed(6)).size()) + "}\n");
}

TEST_CASE("cli verifiers") {
  auto petersen = run({"verify", "petersen"});
  CHECK(petersen.status == cli::kExitOk);
  CHECK(json::parse(petersen.out)["figure_colors"] == 3);

  auto proper = json::parse(run({"verify", "proper", "--r", "3"}).out);
  CHECK(proper["vertices"] == 25);
  CHECK(proper["violations"].empty());
  CHECK(proper["homologous_pairs"][0]["witness_phi"] == "011");

  auto control = run({"verify", "proper", "--r", "3", "--homology-only"});
  CHECK(control.status == cli::kExitVerificationFailed);
  CHECK(json::parse(control.out)["ok"] == false);

  auto farey = run({"verify", "farey-parity", "--depth", "8"});
  CHECK(farey.status == cli::kExitOk);
  CHECK(json::parse(farey.out)["chi_with_fins"] == 3);

  auto table = json::parse(run({"color", "--r", "3"}).out);
  CHECK(table["covers"].size() == 7);
  CHECK(table["vertices"].size() == 25);
  CHECK(table["vertices"][0]["class"] == "0");
}

TEST_CASE("cli export") {
  const auto k3 = run({"generate", "kneser", "--n", "2", "--k", "1"}).out;
  CHECK(run({"export", "dimacs", "--k", "1"}, k3).out == "p cnf 2 3\n1 0\n2 0\n-1 -2 0\n");
  CHECK(run({"export", "dot"}, k3).out == "graph G {\n\"1\";\n\"2\";\n\"1\" -- \"2\";\n}\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).status == cli::kExitUsage);
  CHECK(run({"generate", "kneser", "--n", "3", "--k", "2"}).status == cli::kExitUsage);
  CHECK(run({"count", "--r", "3", "--rank-mode", "other"}).status == cli::kExitUsage);
  CHECK(run({"verify", "lemma2", "--n", "40"}).status == cli::kExitUsage);
  CHECK(run({"export", "dimacs", "--k", "0"}, "").status == cli::kExitUsage);

  auto malformed = run({"chi"}, "{\"format\":\"sphere-chroma-graph-v1\"");
  CHECK(malformed.status == cli::kExitDataError);
  CHECK_FALSE(malformed.err.empty());

  CHECK(run({"chi", "--input", "/nonexistent/graph.json"}).status == cli::kExitIoError);
  CHECK(run({"verify", "petersen", "--coloring", "/nonexistent/c.json"}).status ==
        cli::kExitIoError);

  auto undecided = run({"chi", "--budget", "1"}, run({"generate", "sphere", "--n", "7"}).out);
  CHECK(undecided.status == cli::kExitUndecided);
  CHECK(json::parse(undecided.out)["undecided"] == true);

  // Two colors on the Petersen graph: parseable, complete, improper.
  std::string two = "[";
  const char* labels[] = {"1 2|3 4 5", "1 3|2 4 5", "1 4|2 3 5", "1 5|2 3 4", "1 4 5|2 3",
                          "1 2 5|3 4", "1 3 5|2 4", "1 2 4|3 5", "1 3 4|2 5", "1 2 3|4 5"};
  for (int i = 0; i < 10; ++i) {
    two += std::string(i ? "," : "") + "{\"partition\":\"" + labels[i] + "\",\"color\":\"" +
           (i % 2 ? "a" : "b") + "\"}";
  }
  two += "]";
  const auto path = temp_file("sphere_chroma_two_colors.json", two);
  auto bad = run({"verify", "petersen", "--coloring", path.string()});
  CHECK(bad.status == cli::kExitVerificationFailed);
  CHECK(json::parse(bad.out)["figure_coloring_valid"] == false);
  std::filesystem::remove(path);
}

TEST_CASE("cli writes to an output file") {
  const auto path = std::filesystem::temp_directory_path() / "sphere_chroma_out.json";
  auto r = run({"-o", path.string(), "verify", "lemma2", "--n", "4"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "{\"lemma\":\"sphere-kneser\",\"n\":4,\"ok\":true}\n");
  std::filesystem::remove(path);
  CHECK(run({"-o", "/nonexistent/dir/out.json", "count", "--r", "2"}).status == cli::kExitIoError);
}

TEST_CASE("property: piped generate | chi equals in-process computation") {
  const std::vector<std::vector<std::string>> generators{
      {"generate", "kneser", "--n", "6", "--k", "2"},
      {"generate", "total-kneser", "--n", "5"},
      {"generate", "sphere", "--n", "6"},
      {"generate", "glued", "--r", "3"},
      {"generate", "farey", "--depth", "4", "--fins"}};
  for (const auto& args : generators) {
    const auto text = run(args).out;
    const Graph g = graph_from_json(text);
    CHECK(graph_to_json(g) == text);
    const auto cert = std::get<ChiCertificate>(chromatic_number_exact(g));
    CHECK(run({"chi"}, text).out == "{\"chi\":" + std::to_string(cert.chi) + "}\n");
  }
}

TEST_CASE("property: output is byte-identical across thread counts") {
  const auto sphere7 = run({"generate", "sphere", "--n", "7"}).out;
  const auto one = run({"--threads", "1", "chi"}, sphere7);
  const auto four = run({"--threads", "4", "chi"}, sphere7);
  CHECK(one.out == four.out);
  CHECK(one.out == "{\"chi\":7}\n");
  CHECK(run({"--threads", "1", "verify", "proper", "--r", "4"}).out ==
        run({"--threads", "3", "verify", "proper", "--r", "4"}).out);
  CHECK(run({"--threads", "1", "color", "--r", "3"}).out ==
        run({"--threads", "2", "color", "--r", "3"}).out);
}
