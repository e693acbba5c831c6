#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dcx/cli.hpp"
#include "dcx/errors.hpp"
#include "dcx/io.hpp"
#include "dcx/render.hpp"
#include "support/random_complexes.hpp"

using namespace dcx;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("dcx_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string save(const std::string& name, const Json& doc) {
  const fs::path p = scratch() / name;
  write_json_file(p.string(), doc);
  return p.string();
}

std::string save(const std::string& name, const DoubleComplex& a) { return save(name, complex_to_json(a)); }

std::string data(const std::string& name) { return (fs::path(DCX_DATA_DIR) / name).string(); }

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

const FieldSpec Q = FieldSpec::rationals();

}  // namespace

TEST_CASE("complex documents round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec& f = dcx::testing::test_fields()[trial % dcx::testing::test_fields().size()];
    const DoubleComplex a = dcx::testing::random_complex(rng, f).complex;
    const Json doc = complex_to_json(a);
    const DoubleComplex b = complex_from_json(doc);
    CHECK(b.field() == a.field());
    CHECK(b.dims() == a.dims());
    CHECK(complex_to_json(b) == doc);
    CHECK(complex_from_json(Json::parse(doc.dump())).dims() == a.dims());
  }
}

TEST_CASE("document errors") {
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"field": "Z", "components": []})")), ParseError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"multiplicities": []})")), ParseError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(
                      R"({"components": [{"p":0,"q":0,"dim":1},{"p":1,"q":0,"dim":1}],
                          "d1": [{"p":0,"q":0,"matrix":[["1","2"]]}]})")),
                  DimensionMismatch);
  CHECK_THROWS_AS(complex_from_json(Json::parse(
                      R"({"components": [{"p":0,"q":0,"dim":1},{"p":1,"q":0,"dim":1}],
                          "d1": [{"p":0,"q":0,"matrix":[["x"]]}]})")),
                  ParseError);
  CHECK_THROWS_AS(multiplicities_from_json(Json::parse(R"({"multiplicities": [{"shape": "bad", "count": 1}]})")),
                  ParseError);
  const Json dot = complex_to_json(elementary(Shape::dot(0, 0), Q));
  CHECK(complex_from_json(dot).total_dim() == 1);
}

TEST_CASE("multiplicity and Lie documents round trip") {
  const MultiplicityVector m = multiplicities(calabi_eckmann_model(1, 2));
  CHECK(multiplicities_from_json(multiplicities_to_json(m)) == m);
  const LieData g = lie_data_from_json(read_json_file(data("h9_lie.json")));
  CHECK(lie_data_to_json(g) == lie_data_to_json(h9_data()));
  CHECK(lie_complex(g).total_dim() == 64);
}

TEST_CASE("validate command") {
  const Run ok = run({"validate", data("hopf.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");
  DoubleComplex bad = elementary(Square{1, 1}, Q);
  bad.set_d1(0, 1, identity(1, Q));
  const Run fail = run({"validate", save("bad.json", bad)});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("(0,0)") != std::string::npos);
  CHECK(run({"validate", (scratch() / "missing.json").string()}).code == 1);
}

TEST_CASE("mults, delta, cohomology, predicates") {
  const Run m = run({"mults", data("hopf.json")});
  CHECK(m.code == 0);
  CHECK(lines(m.out) == 4);
  const Run d = run({"delta", data("hopf.json")});
  CHECK(d.out == "Δ^2 = 2\n");
  CHECK(run({"delta", data("p2.json")}).out == "Δ^k = 0 for all k\n");
  const Run c = run({"cohomology", data("calabi_eckmann_1_2.json"), "--theory", "derham"});
  CHECK(c.out == "H^0: 1\nH^3: 1\nH^5: 1\nH^8: 1\n");
  const Run bc = run({"--format", "json", "cohomology", data("calabi_eckmann_1_2.json"), "--theory", "bc"});
  const Json j = Json::parse(bc.out);
  CHECK(j["dims"].size() == 8);
  const Run d1 = run({"cohomology", data("even_zigzag.json"), "--theory", "dolbeault1"});
  CHECK(d1.out == "(0,1): 1\n(2,0): 1\n");
  const Run p = run({"predicates", data("calabi_eckmann_1_2.json")});
  CHECK(p.out.find("side 1 degenerates at E_2") != std::string::npos);
  CHECK(run({"cohomology", data("hopf.json"), "--theory", "nope"}).code == 2);
}

TEST_CASE("pages command") {
  const Run r = run({"pages", data("even_zigzag.json"), "--max-page", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d_2 (0,1) -> (2,0): rank 1") != std::string::npos);
  const Json j = Json::parse(run({"pages", data("even_zigzag.json"), "--side", "2", "--format", "json"}).out);
  CHECK(j["side"] == 2);
  CHECK(j["pages"].size() >= 1);
}

TEST_CASE("compare command") {
  const std::string a = save("dot.json", elementary(Shape::dot(0, 0), Q));
  const std::string b = save("dot_square.json", elementary_sum({{Shape::dot(0, 0), 1}, {Square{2, 2}, 1}}, Q));
  const Run eq = run({"compare", a, b, "--r", "1"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "equivalent\n");
  const std::string e = save("even.json", multiplicities_to_json({{Even{1, 1, 0, 0}, 1}, {Shape::dot(0, 0), 1}}));
  const Run ne = run({"compare", a, e, "--r", "1"});
  CHECK(ne.code == 1);
  CHECK(ne.out == "not equivalent\n");
  CHECK(run({"compare", a, e, "--r", "2"}).code == 0);
  CHECK(run({"compare", a, e, "--r", "inf"}).code == 0);
  CHECK(run({"compare", a, e, "--r", "0"}).code == 1);
}

TEST_CASE("ring command") {
  const Run r = run({"ring", "X_2*X_1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("class: S_{1,1}^{0,0} + S_{1,1}^{2,-1}") != std::string::npos);
  const Json j = Json::parse(run({"--format", "json", "ring", "S^{1,1}*S^{1,1}", "--level", "R0"}).out);
  CHECK(j["terms"].size() == 4);
  CHECK_FALSE(j.contains("normal_form"));
  CHECK(run({"ring", "S_1^{0,0"}).code == 1);
  CHECK(run({"ring", "R", "--level", "R7"}).code == 2);
}

TEST_CASE("build commands") {
  const std::string out = (scratch() / "built.json").string();
  CHECK(run({"build", "square", "--p", "1", "--q", "1", "-o", out}).code == 0);
  CHECK(complex_from_json(read_json_file(out)).total_dim() == 4);
  const Run z = run({"build", "zigzag", "S_1^{0,0}", "--field", "F_3"});
  CHECK(complex_from_json(Json::parse(z.out)).field() == FieldSpec::prime_field(3));
  const std::string sq = out;
  const std::string dot = save("dot00.json", elementary(Shape::dot(0, 0), Q));
  CHECK(complex_from_json(Json::parse(run({"build", "tensor", sq, sq}).out)).total_dim() == 16);
  CHECK(complex_from_json(Json::parse(run({"build", "sum", sq, dot}).out)).total_dim() == 5);
  CHECK(complex_from_json(Json::parse(run({"build", "dual", dot, "--n", "2"}).out)).dim(2, 2) == 1);
  CHECK(complex_from_json(Json::parse(run({"build", "shift", dot, "--k", "1"}).out)).dim(1, 1) == 1);
  CHECK(complex_from_json(Json::parse(run({"build", "transpose", data("even_zigzag.json")}).out)).dim(1, 0) == 1);
  CHECK(complex_from_json(Json::parse(run({"build", "conjugate", data("even_zigzag.json")}).out)).dim(0, 2) == 1);
  const Run lie = run({"build", "lie", data("h9_lie.json")});
  CHECK(lie.code == 0);
  CHECK(complex_from_json(Json::parse(lie.out)).total_dim() == 64);
  CHECK(complex_from_json(Json::parse(run({"build", "hodge", data("p2_hodge.json")}).out)).total_dim() == 3);
  CHECK(complex_from_json(Json::parse(run({"build", "hopf"}).out)).total_dim() == 8);
  CHECK(run({"build", "calabi-eckmann", "--u", "1", "--v", "1"}).code == 1);
  const std::string hp2 = save("hp2.json", Json::parse(run({"build", "pb-class", data("hopf.json"), "--m", "2"}).out));
  CHECK(run({"delta", hp2}).out == "Δ^2 = 2\nΔ^4 = 2\nΔ^6 = 2\n");
  CHECK(run({"validate", hp2}).code == 1);
  const Run blown = run({"build", "blowup-class", hp2, data("hopf.json"), "--r", "2"});
  const MultiplicityVector b = multiplicities_from_json(Json::parse(blown.out));
  CHECK(delta_from_zigzags(b).at(4) == 4);
  CHECK(run({"build"}).code == 2);
  CHECK(run({"build", "square", "--p", "1"}).code == 2);
}

TEST_CASE("render command") {
  const Run r = run({"render", data("hopf.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("2 | . 1 1\n1 | 1 2 1\n0 | 1 1 .\n", 0) == 0);
  CHECK(r.out == run({"render", data("hopf.json")}).out);
  const Run dot = run({"render", save("dot_r.json", elementary(Shape::dot(0, 0), Q))});
  CHECK(dot.out.rfind("0 | 1\n", 0) == 0);
  CHECK(run({"render", save("empty.json", DoubleComplex(Q))}).out.rfind("(empty complex)", 0) == 0);
}

TEST_CASE("svg rendering") {
  const auto count = [](const std::string& s, const std::string& needle) {
    int n = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
    return n;
  };
  const std::string even = render_svg({{Even{1, 2, 0, 1}, 1}});
  CHECK(count(even, "<circle") == 4);
  CHECK(count(even, "class=\"arrow\"") == 3);
  const std::string hopf = render_svg(hopf_multiplicities());
  CHECK(count(hopf, "<circle") == 8);
  CHECK(count(hopf, "class=\"shape\"") == 4);
  const std::string sq = render_svg({{Square{1, 1}, 1}});
  CHECK(count(sq, "<circle") == 4);
  CHECK(count(sq, "class=\"arrow\"") == 4);
  CHECK(even.rfind("<?xml", 0) == 0);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Subcommands") != std::string::npos);
  CHECK(run({"--format", "xml", "delta", data("hopf.json")}).code == 2);
}
