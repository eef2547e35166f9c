#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "shadow/modal/engine.hpp"

namespace shadow::cli {

using fo::Verdict;

/// Process exit codes.
enum ExitCode : int { kProved = 0, kFailed = 1, kExhausted = 2, kInputError = 3 };

int exit_code(Verdict verdict);

/// What a corpus file declares about itself in `; expect:` header lines.
struct Expectation {
  Verdict verdict = Verdict::kProved;
  std::optional<std::size_t> answers;
};

/// Reads `; expect: proved|failed|exhausted` and the optional
/// `; expect-answers: N` from the leading comment block.
std::optional<Expectation> read_expectation(std::string_view text);

struct RunOptions {
  modal::Limits limits;
  bool json = false;
  bool timings = false;
};

/// Result record printed by `prove` and `answer` in JSON mode:
/// `{"verdict", "reason", "proof" | "answers", "stats"}`.
std::string result_json(const modal::Outcome& outcome, bool answer_mode, std::optional<std::int64_t> wall_ms);
std::string result_text(const modal::Outcome& outcome, bool answer_mode, std::optional<std::int64_t> wall_ms);

struct CorpusRow {
  std::string file;
  std::optional<Expectation> expected;
  Verdict got = Verdict::kFailed;
  std::size_t answers = 0;
  /// Proofs produced for the file that the checker accepted / rejected.
  std::size_t proofs_checked = 0;
  std::string problem;  // empty when the row passes
  bool pass() const { return problem.empty(); }
};

/// Runs every `.prob` file of `dir` (sorted by name). Throws
/// std::runtime_error when the directory has no problem files.
std::vector<CorpusRow> run_corpus(const std::filesystem::path& dir, const RunOptions& options);
std::string corpus_report(const std::vector<CorpusRow>& rows);

/// Full command-line entry point; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shadow::cli
