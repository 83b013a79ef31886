// verify <suite> [options]: runs one verification suite and prints its report.
// Exit codes: 0 all theorem checks pass, 1 a theorem check failed, 2 usage
// error, 3 the report could not be written.

#include "dupont/collapse.hpp"
#include "dupont/compat.hpp"
#include "dupont/cube_dupont.hpp"
#include "dupont/dupont_homotopy.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace dupont;

namespace {

struct Options {
  std::string suite;
  int n = 2;
  std::string face;
  int k = -1;  // unset: k = n
  int probes = 25;
  int degree = 3;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  bool timing = false;
  bool mutate = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSuites = {"dupont", "cubical", "stellar", "compat", "cubical-compat", "collapse"};

int max_n(const std::string& suite) { return suite == "stellar" || suite == "collapse" ? 4 : 3; }

VertexSet face_of(const Options& o) {
  if (o.face.empty()) {
    VertexSet all(o.n + 1);
    for (int v = 0; v <= o.n; ++v) all[v] = v;
    return all;
  }
  VertexSet I;
  try {
    I = parse_vertex_set(o.face);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--face: ") + e.what());
  }
  if (I.empty() || I.front() < 0 || I.back() > o.n) throw UsageError("--face must be a nonempty subset of 0.." + std::to_string(o.n));
  return I;
}

void validate(const Options& o) {
  const auto suites = o.suite == "all" ? kSuites : std::vector<std::string>{o.suite};
  for (const auto& s : suites)
    if (o.n < 1 || o.n > max_n(s))
      throw UsageError("--n must be in 1.." + std::to_string(max_n(s)) + " for " + s);
  if (o.k != -1 && (o.k < 1 || o.k > o.n)) throw UsageError("--k must be in 1..n");
  if (o.probes < 0 || o.probes > 1000) throw UsageError("--probes must be in 0..1000");
  if (o.degree < 0 || o.degree > 6) throw UsageError("--degree must be in 0..6");
  if (o.mutate && o.suite != "dupont" && o.suite != "cubical")
    throw UsageError("--mutate applies to the dupont and cubical suites only");
  face_of(o);
}

Report run_one(const std::string& suite, const Options& o) {
  const int k = o.k == -1 ? o.n : o.k;
  if (suite == "dupont") return verify_dupont({o.n, o.probes, o.degree, o.seed, o.mutate});
  if (suite == "cubical") return verify_cubical({o.n, o.probes, o.degree, o.seed, o.mutate});
  if (suite == "stellar") {
    StellarParams p;
    p.n = o.n;
    if (!o.face.empty()) p.faces = {face_of(o)};
    p.k = o.k;
    return verify_stellar(p);
  }
  if (suite == "compat") return verify_compat({o.n, face_of(o), o.probes, o.degree, o.seed});
  if (suite == "cubical-compat") return verify_cubical_compat({o.n, k, o.probes, o.degree, o.seed});
  if (suite == "collapse") {
    CollapseParams p;
    p.n = o.n;
    // without --face the claim runs for every proper face
    p.faces = o.face.empty() ? all_faces(o.n) : std::vector<VertexSet>{face_of(o)};
    return verify_collapse(p);
  }
  throw UsageError("unknown suite " + suite);
}

Report run(const Options& o) {
  if (o.suite != "all") return run_one(o.suite, o);
  Report all;
  all.suite = "all";
  for (const auto& s : kSuites) {
    Report r = run_one(s, o);
    all.params[s] = r.params;
    all.merge(r, s + ": ");
  }
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact verification of Dupont homotopies, stellar welding and collapse retractions"};
  app.add_option("suite", o.suite, "dupont, cubical, stellar, compat, cubical-compat, collapse or all")
      ->required()
      ->check(CLI::IsMember({"dupont", "cubical", "stellar", "compat", "cubical-compat", "collapse", "all"}));
  app.add_option("--n", o.n, "dimension");
  app.add_option("--face", o.face, "face I as a comma list, e.g. 0,1 (default: all of 0..n)");
  app.add_option("--k", o.k, "number of subdivided cube slots (default: n)");
  app.add_option("--probes", o.probes, "random probe forms per degree");
  app.add_option("--degree", o.degree, "maximum polynomial degree of probes");
  app.add_option("--seed", o.seed, "probe seed");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_flag("--timing", o.timing, "record elapsed_ms (makes output nondeterministic)");
  app.add_flag("--mutate", o.mutate, "test mode: perturb the homotopy so checks must fail");
  try {
    app.parse(argc, argv);
    validate(o);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report rep = run(o);
  if (o.timing)
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string text = o.format == "json" ? to_json(rep).dump(2) + "\n" : to_text(rep);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 3;
    }
  }
  return rep.theorems_passed() ? 0 : 1;
}
