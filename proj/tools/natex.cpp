#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "natex/choice.hpp"
#include "natex/io.hpp"
#include "natex/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // inconsistent assessment / failed selftest
constexpr int kExitUsage = 2;      // parse errors, dimension errors, cap limits

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw natex::ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Format {
  bool json = true;
};

void emit_check(const Format& fmt, const natex::Assessment& a, const natex::Verdict& v) {
  if (fmt.json) {
    natex::io::Json j;
    j["op"] = "consistent";
    j.update(natex::io::to_json(v, a));
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << (v.answer ? "consistent" : "inconsistent") << "\n";
}

int run_check(const std::string& path, const natex::EngineOptions& opts, const Format& fmt) {
  const auto assessment = natex::io::parse_assessment(slurp(path));
  natex::Engine engine(assessment, opts);
  const natex::Verdict v = engine.consistent();
  emit_check(fmt, assessment, v);
  return v.answer ? kExitOk : kExitNegative;
}

int run_query(const std::string& path, const natex::EngineOptions& opts, const Format& fmt,
              bool verify) {
  using natex::io::Json;
  using Op = natex::io::Query::Op;
  const auto qf = natex::io::parse_query_file(slurp(path));
  natex::Engine engine(qf.assessment, opts);

  const auto verified = [&](const std::optional<natex::GambleSet>& b,
                            const natex::Verdict& v) {
    if (!verify) return true;
    const auto r = natex::verify_verdict(qf.assessment, b, v);
    if (!r.ok) {
      throw natex::CertificateError("internal: evidence failed verification: " + r.reason);
    }
    return true;
  };

  for (const auto& q : qf.queries) {
    Json j;
    j["op"] = natex::io::query_op_name(q.op);
    switch (q.op) {
      case Op::Consistent: {
        const auto v = engine.consistent();
        verified(std::nullopt, v);
        j.update(natex::io::to_json(v, qf.assessment));
        break;
      }
      case Op::Member: {
        const auto v = engine.natex_contains(*q.set);
        verified(*q.set, v);
        j["set"] = natex::io::to_json(*q.set);
        j.update(natex::io::to_json(v, qf.assessment));
        break;
      }
      case Op::Reject: {
        const auto v = engine.reject(*q.set, *q.gamble);
        verified(natex::shift_set(*q.set, *q.gamble), v);
        j["set"] = natex::io::to_json(*q.set);
        j["gamble"] = natex::io::to_json(*q.gamble);
        j.update(natex::io::to_json(v, qf.assessment));
        break;
      }
      case Op::Choose: {
        const auto part = engine.choose(*q.set);
        if (verify) {
          for (const auto& [u, v] : part.option_verdicts) {
            verified(natex::shift_set(*q.set, u), v);
          }
        }
        j["set"] = natex::io::to_json(*q.set);
        j.update(natex::io::to_json(part));
        break;
      }
      case Op::Singleton: {
        const auto v = engine.singleton_verdict(*q.gamble);
        verified(natex::GambleSet(qf.assessment.dim(), {*q.gamble}), v);
        j["gamble"] = natex::io::to_json(*q.gamble);
        j.update(natex::io::to_json(v, qf.assessment));
        break;
      }
      case Op::Binarity: {
        const auto report = engine.binarity_evidence(*q.set);
        if (verify) {
          verified(*q.set, report.membership);
          for (const auto& [u, v] : report.singleton_refutations) {
            verified(natex::GambleSet(qf.assessment.dim(), {u}), v);
          }
        }
        j["set"] = natex::io::to_json(*q.set);
        j.update(natex::io::to_json(report, qf.assessment));
        break;
      }
    }
    if (fmt.json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << j["op"].get<std::string>() << ": ";
      if (j.contains("answer")) std::cout << (j["answer"].get<bool>() ? "yes" : "no");
      else if (j.contains("case")) std::cout << j["case"].get<std::string>();
      else std::cout << "chosen " << j["chosen"].dump();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact inference for coherent choice functions over finite option sets"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t cap = 1'000'000;
  unsigned jobs = 1;
  std::string format = "json";
  app.add_option("--cap", cap, "selection enumeration limit")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for selection evaluation")
      ->capture_default_str();
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string check_path;
  auto* check = app.add_subcommand("check", "decide consistency of an assessment file");
  check->add_option("file", check_path, "assessment JSON file")->required();

  std::string query_path;
  bool verify = false;
  auto* query = app.add_subcommand("query", "run the queries in an assessment file");
  query->add_option("file", query_path, "query JSON file")->required();
  query->add_flag("--verify", verify, "re-check every evidence object before output");

  std::uint64_t seed = 1;
  auto* selftest = app.add_subcommand("selftest", "run the built-in corpus and suites");
  selftest->add_option("--seed", seed, "seed for the randomized suites")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;  // --help is 0, bad usage is 2
  }

  natex::EngineOptions opts;
  opts.selection_cap = cap;
  opts.threads = jobs;
  const Format fmt{format == "json"};

  try {
    if (check->parsed()) return run_check(check_path, opts, fmt);
    if (query->parsed()) return run_query(query_path, opts, fmt, verify);
    natex::selftest::SelftestOptions st;
    st.seed = seed;
    st.engine = opts;
    return natex::selftest::run(std::cout, st) == 0 ? kExitOk : kExitNegative;
  } catch (const natex::InconsistentAssessment& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
