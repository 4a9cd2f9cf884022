#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ehrstab/agor.hpp"
#include "ehrstab/canonical.hpp"
#include "ehrstab/ehrhart.hpp"
#include "ehrstab/graphs.hpp"
#include "ehrstab/lattice.hpp"
#include "ehrstab/numeric.hpp"
#include "ehrstab/trace.hpp"

namespace {

using ehrstab::BigInt;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitResourceGuard = 2;
constexpr int kExitUsage = 64;

// big integers are emitted as JSON numbers only inside the exact double
// range; larger values become decimal strings
json big_to_json(const BigInt& v) {
  static const BigInt lim = BigInt(1) << 53;
  if (v > -lim && v < lim) return static_cast<std::int64_t>(v);
  return v.str();
}

json bigs_to_json(const std::vector<BigInt>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(big_to_json(v));
  return arr;
}

struct GraphSource {
  std::optional<int> cycle;
  std::string path;

  ehrstab::Graph load() const {
    if (cycle && !path.empty())
      throw CLI::ValidationError("use exactly one of --cycle and --graph");
    if (cycle) return ehrstab::make_cycle(*cycle);
    if (path.empty())
      throw CLI::ValidationError("a graph source (--cycle or --graph) is required");
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open graph file: " + path);
    json j;
    in >> j;
    return ehrstab::graph_from_json(j);
  }
};

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (const auto& [key, value] : j.items()) {
      if (!value.is_array()) {
        std::cout << key << "," << value.dump() << "\n";
        continue;
      }
      std::cout << key;
      for (const auto& item : value)
        std::cout << "," << (item.is_string() ? item.get<std::string>() : item.dump());
      std::cout << "\n";
    }
    return;
  }
  for (const auto& [key, value] : j.items())
    std::cout << key << ": " << value.dump() << "\n";
}

ehrstab::LatticeVector parse_vector(const std::string& text) {
  return ehrstab::LatticeVector::from_json(json::parse(text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ehrhart and canonical-module invariants of stable set "
               "polytopes of cycle graphs"};
  app.require_subcommand(1);
  std::string format = "json";
  int jobs = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", jobs, "worker pool width")->check(CLI::PositiveNumber);

  GraphSource source;
  int level = 0, degree = 0, ell = 3;
  int max_degree = -1, max_dilation = -1;
  std::string vector_text;

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--cycle", source.cycle, "built-in cycle graph length");
    cmd->add_option("--graph", source.path, "graph JSON file");
  };

  auto* cmd_hstar = app.add_subcommand("hstar", "Ehrhart counts, h*, a-invariant");
  add_source(cmd_hstar);
  cmd_hstar->add_option("--max-dilation", max_dilation, "count dilations 0..T");

  auto* cmd_enum = app.add_subcommand("enumerate", "degree slice of a level system");
  add_source(cmd_enum);
  cmd_enum->add_option("--level", level, "system level n")->required();
  cmd_enum->add_option("--degree", degree, "slice degree d")->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification pipeline");
  cmd_verify->require_subcommand(1);
  auto* v_locus = cmd_verify->add_subcommand("locus", "non-Gorenstein locus check");
  v_locus->add_option("--ell", ell)->required();
  v_locus->add_option("--max-degree", max_degree);
  auto* v_agor = cmd_verify->add_subcommand("agor", "almost-Gorenstein / Ulrich check");
  v_agor->add_option("--ell", ell)->required();
  v_agor->add_option("--max-degree", max_degree);
  auto* v_ht = cmd_verify->add_subcommand("ht", "h-vector identity check");
  v_ht->add_option("--ell", ell)->required();
  auto* v_gor = cmd_verify->add_subcommand("gorenstein", "criterion vs h* palindromicity");
  add_source(v_gor);

  auto* cmd_decomp = app.add_subcommand("decompose", "face-subring decomposition");
  cmd_decomp->add_option("--ell", ell)->required();
  cmd_decomp->add_option("--vector", vector_text, "lattice vector JSON")->required();

  auto* cmd_trace = app.add_subcommand("trace-member", "trace ideal membership");
  add_source(cmd_trace);
  cmd_trace->add_option("--vector", vector_text, "lattice vector JSON")->required();

  // let --format and --jobs appear after the subcommand name
  for (auto* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_hstar) {
      auto g = source.load();
      const int d = g.size();
      const int top = max_dilation < 0 ? d : std::max(max_dilation, d);
      auto counts = ehrstab::ehrhart_profile(g, top, jobs);
      auto hv = ehrstab::hstar_from_counts(counts.closed, d);
      json out{{"L", bigs_to_json(counts.closed)},
               {"Linterior", bigs_to_json(counts.interior)},
               {"hstar", bigs_to_json(hv.h)},
               {"a_invariant", ehrstab::a_invariant(g)},
               {"s", hv.s()}};
      emit(out, format);
      return kExitPass;
    }
    if (*cmd_enum) {
      auto g = source.load();
      auto vectors = ehrstab::InequalitySystem(g, level).enumerate(degree);
      json arr = json::array();
      for (const auto& v : vectors) arr.push_back(v.to_json());
      emit(json{{"level", level},
                {"degree", degree},
                {"count", vectors.size()},
                {"vectors", arr}},
           format);
      return kExitPass;
    }
    if (*v_locus) {
      const int bound = max_degree > 0 ? max_degree : (ell == 3 ? 4 : 3);
      auto report = ehrstab::verify_nongorenstein_locus(ell, bound);
      emit(report.to_json(), format);
      return report.pass ? kExitPass : kExitMathFailure;
    }
    if (*v_agor) {
      const int bound = max_degree > 0 ? max_degree : (ell <= 4 ? 4 : 3);
      auto ht = ehrstab::check_h_identity(ell);
      auto verdict = ehrstab::almost_gorenstein_verdict(ell, bound);
      json out = verdict.to_json();
      out["hstar"] = ht.to_json()["hstar"];
      out["ht_identity"] = ht.pass ? "pass" : "fail";
      emit(out, format);
      return (verdict.almost_gorenstein && ht.pass) ? kExitPass : kExitMathFailure;
    }
    if (*v_ht) {
      auto report = ehrstab::check_h_identity(ell);
      emit(report.to_json(), format);
      return report.pass ? kExitPass : kExitMathFailure;
    }
    if (*v_gor) {
      auto g = source.load();
      auto verdict = ehrstab::is_gorenstein_tperfect(g);
      bool palin = ehrstab::hstar(g).palindromic();
      emit(json{{"gorenstein", verdict.gorenstein},
                {"criterion", verdict.tag()},
                {"hstar_palindromic", palin}},
           format);
      return verdict.gorenstein == palin ? kExitPass : kExitMathFailure;
    }
    if (*cmd_decomp) {
      auto mu = parse_vector(vector_text);
      auto indices = ehrstab::face_decompose(mu, ell);
      emit(json{{"degree", mu.degree}, {"indices", indices}}, format);
      return kExitPass;
    }
    if (*cmd_trace) {
      auto g = source.load();
      auto mu = parse_vector(vector_text);
      auto witness = ehrstab::in_trace(mu, g);
      json out{{"member", witness.has_value()}};
      if (witness)
        out["witness"] = json{{"eta", witness->eta.to_json()},
                              {"zeta", witness->zeta.to_json()}};
      emit(out, format);
      return kExitPass;
    }
  } catch (const ehrstab::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitUsage;
}
