#include "shadow/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "shadow/errors.hpp"
#include "shadow/parser.hpp"
#include "shadow/proof/checker.hpp"

namespace shadow::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<Verdict> verdict_from(std::string_view word) {
  if (word == "proved") return Verdict::kProved;
  if (word == "failed") return Verdict::kFailed;
  if (word == "exhausted") return Verdict::kExhausted;
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string bindings_text(const Substitution& answer) {
  std::string out;
  for (const auto& [var, value] : answer) {
    if (!out.empty()) out += ", ";
    out += "?" + var + " = " + render(value);
  }
  return out;
}

Json stats_json(const modal::Outcome& outcome, std::optional<std::int64_t> wall_ms) {
  Json stats{{"iterations", outcome.stats.iterations},
             {"clauses_generated", outcome.stats.clauses_generated},
             {"kb_size", outcome.stats.kb_size}};
  if (wall_ms) stats["wall_time_ms"] = *wall_ms;
  return stats;
}

proof::Proof with_wall(proof::Proof p, std::optional<std::int64_t> wall_ms) {
  p.stats.wall_time_ms = wall_ms;
  return p;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

int exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::kProved: return kProved;
    case Verdict::kFailed: return kFailed;
    case Verdict::kExhausted: return kExhausted;
  }
  return kFailed;
}

std::optional<Expectation> read_expectation(std::string_view text) {
  std::optional<Expectation> out;
  std::optional<std::size_t> answers;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = trim(line);
    if (l.empty()) continue;
    if (l.front() != ';') break;
    l = trim(l.substr(l.find_first_not_of(';')));
    if (l.rfind("expect-answers:", 0) == 0) {
      answers = std::stoul(std::string(trim(l.substr(15))));
    } else if (l.rfind("expect:", 0) == 0) {
      auto v = verdict_from(trim(l.substr(7)));
      if (!v) return std::nullopt;
      out = Expectation{*v, {}};
    }
  }
  if (out) out->answers = answers;
  return out;
}

std::string result_json(const modal::Outcome& outcome, bool answer_mode, std::optional<std::int64_t> wall_ms) {
  Json out{{"verdict", fo::to_string(outcome.verdict)}, {"reason", outcome.reason}};
  if (answer_mode) {
    Json answers = Json::array();
    for (const proof::Proof& p : outcome.answers) {
      Json bindings = Json::object();
      for (const auto& [var, value] : *p.answer) bindings["?" + var] = render(value);
      answers.push_back(Json{{"bindings", bindings}, {"proof", Json::parse(proof::render_json(with_wall(p, wall_ms)))}});
    }
    out["answers"] = answers;
  } else {
    out["proof"] = outcome.proof ? Json::parse(proof::render_json(with_wall(*outcome.proof, wall_ms))) : Json(nullptr);
  }
  out["stats"] = stats_json(outcome, wall_ms);
  return out.dump(2) + "\n";
}

std::string result_text(const modal::Outcome& outcome, bool answer_mode, std::optional<std::int64_t> wall_ms) {
  std::string out = "verdict: " + fo::to_string(outcome.verdict) + "\n";
  if (!outcome.reason.empty()) out += "reason: " + outcome.reason + "\n";
  out += "iterations: " + std::to_string(outcome.stats.iterations) + "\n";
  out += "clauses generated: " + std::to_string(outcome.stats.clauses_generated) + "\n";
  if (wall_ms) out += "wall time: " + std::to_string(*wall_ms) + " ms\n";
  if (answer_mode) {
    out += "answers: " + std::to_string(outcome.answers.size()) + "\n";
    for (std::size_t i = 0; i < outcome.answers.size(); ++i) {
      out += "\nanswer " + std::to_string(i + 1) + ": " + bindings_text(*outcome.answers[i].answer) + "\n";
      out += proof::render_text(outcome.answers[i]);
    }
  } else if (outcome.proof) {
    out += "\n" + proof::render_text(*outcome.proof);
  }
  return out;
}

std::vector<CorpusRow> run_corpus(const std::filesystem::path& dir, const RunOptions& options) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".prob") files.push_back(e.path());
    }
  }
  if (files.empty()) throw std::runtime_error("no .prob files in " + dir.string());
  std::sort(files.begin(), files.end());

  std::vector<CorpusRow> rows;
  for (const auto& path : files) {
    CorpusRow row;
    row.file = path.filename().string();
    std::string text = read_file(path);
    row.expected = read_expectation(text);
    try {
      Problem problem = parse_problem(text);
      modal::Outcome outcome =
          problem.is_query() ? modal::answer(problem, options.limits) : modal::prove(problem, options.limits);
      row.got = outcome.verdict;
      row.answers = outcome.answers.size();
      std::vector<const proof::Proof*> proofs;
      if (outcome.proof) proofs.push_back(&*outcome.proof);
      for (const proof::Proof& p : outcome.answers) proofs.push_back(&p);
      for (const proof::Proof* p : proofs) {
        proof::CheckResult r = proof::check(*p, problem);
        if (!r) {
          row.problem = "proof rejected at step " + std::to_string(r.step) + ": " + r.reason;
          break;
        }
        ++row.proofs_checked;
      }
    } catch (const Error& e) {
      row.problem = std::string("input error: ") + e.what();
    }
    if (row.problem.empty()) {
      if (!row.expected) {
        row.problem = "missing '; expect:' header";
      } else if (row.expected->verdict != row.got) {
        row.problem = "expected " + fo::to_string(row.expected->verdict) + ", got " + fo::to_string(row.got);
      } else if (row.expected->answers && *row.expected->answers != row.answers) {
        row.problem = "expected " + std::to_string(*row.expected->answers) + " answers, got " +
                      std::to_string(row.answers);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string corpus_report(const std::vector<CorpusRow>& rows) {
  std::size_t width = 4;
  for (const CorpusRow& r : rows) width = std::max(width, r.file.size());
  std::string out = pad("file", width + 2) + pad("expect", 11) + pad("got", 11) + pad("answers", 9) +
                    pad("checked", 9) + "result\n";
  std::size_t passed = 0;
  for (const CorpusRow& r : rows) {
    std::string expect = r.expected ? fo::to_string(r.expected->verdict) : "?";
    out += pad(r.file, width + 2) + pad(expect, 11) + pad(fo::to_string(r.got), 11) +
           pad(std::to_string(r.answers), 9) + pad(std::to_string(r.proofs_checked), 9);
    out += r.pass() ? "PASS" : "FAIL  " + r.problem;
    out += "\n";
    if (r.pass()) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(rows.size()) + " passed\n";
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reasoner for beliefs, obligations and goals over time"};
  app.require_subcommand(1);

  RunOptions options;
  std::string format = "text";
  std::uint64_t seed = 0;
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--max-iterations", options.limits.max_iterations, "Outer loop iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-clauses", options.limits.fo.max_generated, "Clauses generated per first-order call")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--timeout-ms", options.limits.fo.timeout_ms, "Time limit per first-order call")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-depth", options.limits.max_depth, "Belief nesting explored by expansion")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--max-answers", options.limits.max_answers, "Answers to collect")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed", seed, "Reserved; the search is deterministic")->capture_default_str();
    sub->add_flag("--timings", options.timings, "Report wall-clock times");
  };

  std::string problem_path;
  std::string proof_path;
  std::string corpus_dir;
  CLI::App* prove = app.add_subcommand("prove", "Prove the goal of a problem file");
  prove->add_option("problem", problem_path, "Problem file")->required();
  add_limits(prove);
  CLI::App* answer = app.add_subcommand("answer", "Find bindings for the query variables of a problem file");
  answer->add_option("problem", problem_path, "Problem file")->required();
  add_limits(answer);
  CLI::App* check = app.add_subcommand("check", "Check a JSON proof against a problem file");
  check->add_option("proof", proof_path, "Proof file (JSON)")->required();
  check->add_option("problem", problem_path, "Problem file")->required();
  CLI::App* corpus = app.add_subcommand("corpus", "Run every .prob file in a directory against its expect header");
  corpus->add_option("dir", corpus_dir, "Corpus directory")->required();
  add_limits(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }
  options.json = format == "json";

  try {
    if (*prove || *answer) {
      std::string text = read_file(problem_path);
      Problem problem = parse_problem(text);
      bool answer_mode = static_cast<bool>(*answer);
      if (answer_mode && !problem.is_query()) {
        err << problem_path << ": no (answer ...) section\n";
        return kInputError;
      }
      if (!answer_mode && problem.is_query()) {
        err << problem_path << ": problem has query variables; use 'answer'\n";
        return kInputError;
      }
      auto start = std::chrono::steady_clock::now();
      modal::Outcome outcome =
          answer_mode ? modal::answer(problem, options.limits) : modal::prove(problem, options.limits);
      std::optional<std::int64_t> wall;
      if (options.timings) {
        wall = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      }
      out << (options.json ? result_json(outcome, answer_mode, wall) : result_text(outcome, answer_mode, wall));
      return exit_code(outcome.verdict);
    }
    if (*check) {
      Problem problem = parse_problem(read_file(problem_path));
      proof::Proof p = proof::parse_json(read_file(proof_path), problem.decls);
      proof::CheckResult r = proof::check(p, problem);
      if (r) {
        out << "valid\n";
        return 0;
      }
      out << "invalid: step " << r.step << ": " << r.reason << "\n";
      return 1;
    }
    std::vector<CorpusRow> rows = run_corpus(corpus_dir, options);
    out << corpus_report(rows);
    return std::all_of(rows.begin(), rows.end(), [](const CorpusRow& r) { return r.pass(); }) ? 0 : 1;
  } catch (const InputError& e) {
    err << problem_path << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace shadow::cli
