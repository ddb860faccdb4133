// Copyright 2026 The dqprog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqprog/bench.h"
#include "dqprog/csv_store.h"
#include "dqprog/error.h"
#include "dqprog/program_io.h"
#include "dqprog/runner.h"
#include "dqprog/synthesis.h"

namespace dqprog::cli {
namespace {

namespace fs = std::filesystem;

FitOptions ToFitOptions(const FitFlags& flags) {
  FitOptions options;
  options.single_dist_only = flags.single_dist_only;
  options.max_clauses = flags.max_clauses == 0 ? kNoClauseLimit : flags.max_clauses;
  options.master_seed = flags.seed;
  options.beta_grid.k_max = flags.beta_max;
  options.beta_grid.step = flags.beta_step;
  if (!(flags.beta_step > 0.0) || flags.beta_max < options.beta_grid.k_min) {
    throw DqError(ErrorCode::kInvalidArgument,
                  "--beta-step must be positive and --beta-max at least 1");
  }
  return options;
}

// Next column of the same dtype after `column`, wrapping around.
const std::string* DonorColumn(const Schema& schema, const std::string& column) {
  const std::size_t n = schema.columns.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (schema.columns[i].first != column) continue;
    for (std::size_t k = 1; k < n; ++k) {
      const auto& other = schema.columns[(i + k) % n];
      if (other.second == schema.columns[i].second) return &other.first;
    }
  }
  return nullptr;
}

std::string FileSafe(std::string s) {
  for (char& c : s) {
    if (c == '/' || c == '\\' || c == ' ') c = '-';
  }
  return s;
}

template <typename F>
int Guard(std::ostream& err, F body) {
  try {
    return body();
  } catch (const DqError& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

void AddFitFlags(CLI::App* cmd, FitFlags& flags) {
  cmd->add_flag("--single-dist-only", flags.single_dist_only,
                "Use single-distribution metrics only");
  cmd->add_option("--max-clauses", flags.max_clauses, "Clause limit (0 = none)");
  cmd->add_option("--beta-max", flags.beta_max, "Largest beta, in standard deviations")
      ->capture_default_str();
  cmd->add_option("--beta-step", flags.beta_step, "Beta grid step, in standard deviations")
      ->capture_default_str();
  cmd->add_option("--seed", flags.seed, "Master seed")->capture_default_str();
}

}  // namespace

int CmdFit(const FitArgs& args, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const SnapshotStore store = Ingest(args.store, args.schema);
    if (store.parse_warnings > 0) {
      err << "warning: " << store.parse_warnings << " unparseable numeric cells read as null\n";
    }
    const auto& history = store.history(args.column);
    FitOptions options = ToFitOptions(args.flags);
    if (const std::string* donor = DonorColumn(store.schema, args.column)) {
      const auto& donor_history = store.history(*donor);
      if (!donor_history.empty()) options.donor = &donor_history.back();
    }
    const FitResult result = FitDetailed(history, args.delta, options);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    SaveProgram(result.program, args.out);
    out << "fitted " << result.program.constraints.size() << " constraints for column '"
        << args.column << "' from " << history.size() << " snapshots (fpr_total "
        << result.program.fpr_total << ", covered " << result.program.recall_covered << " of "
        << result.corpus_size << " variants) -> " << args.out << "\n";
    return kExitOk;
  });
}

int CmdCheck(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const DqProgram program = LoadProgram(args.program);
    std::size_t warnings = 0;
    const ColumnSnapshot batch = ParseColumn(ReadFile(args.batch), program.column_id,
                                             program.dtype, 1, &warnings);
    const ColumnSnapshot baseline =
        ParseColumn(ReadFile(args.baseline), program.column_id, program.dtype, 0);
    if (warnings > 0) {
      err << "warning: " << warnings << " unparseable numeric cells read as null\n";
    }
    const ValidationReport report = Check(program, batch, baseline);
    const std::string text = RenderReport(report);
    out << text;
    if (!args.report.empty()) WriteFileAtomic(args.report, text);
    return report.verdict == Verdict::kPass ? kExitOk : kExitViolation;
  });
}

int CmdInject(const InjectArgs& args, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const Schema schema = LoadSchema(args.schema);
    const Batch batch = ReadBatch(args.batch, schema);
    fs::create_directories(args.out_dir);
    nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
    std::size_t written = 0;
    for (std::size_t c = 0; c < batch.columns.size(); ++c) {
      const ColumnSnapshot& column = batch.columns[c];
      const std::string* donor_name = DonorColumn(schema, column.column_id);
      const ColumnSnapshot* donor = donor_name ? batch.find(*donor_name) : nullptr;
      const VariantCorpus corpus = BuildCorpus(column, donor, args.seed + c);
      for (const auto& w : corpus.warnings) err << "warning: " << w << "\n";
      const fs::path dir = fs::path(args.out_dir) / FileSafe(column.column_id);
      fs::create_directories(dir);
      for (std::size_t v = 0; v < corpus.variants.size(); ++v) {
        const Variant& variant = corpus.variants[v];
        std::ostringstream name;
        name << std::setw(3) << std::setfill('0') << v << "_"
             << IssueTypeName(variant.spec.type) << "_"
             << FileSafe(DescribeParameter(variant.spec)) << ".csv";
        const fs::path file = dir / name.str();
        WriteFileAtomic(file, FormatColumnCsv(variant.column));
        manifest.push_back({{"column_id", column.column_id},
                            {"file", fs::relative(file, args.out_dir).generic_string()},
                            {"issue_type", std::string(IssueTypeName(variant.spec.type))},
                            {"parameter", DescribeParameter(variant.spec)},
                            {"seed", variant.spec.seed},
                            {"rows", variant.column.rows()}});
        ++written;
      }
    }
    WriteFileAtomic(fs::path(args.out_dir) / "manifest.json", manifest.dump(2) + "\n");
    out << "wrote " << written << " variants for " << batch.columns.size() << " columns to "
        << args.out_dir << "\n";
    return kExitOk;
  });
}

int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const SnapshotStore store = Ingest(args.store, args.schema);
    BenchOptions options;
    options.window = args.window;
    options.delta = args.delta;
    options.seed = args.seed;
    options.fit = ToFitOptions(args.flags);
    const BenchResult result = RunBench(store, options);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    WriteFileAtomic(args.report + ".csv", BenchCsv(result));
    WriteFileAtomic(args.report + ".json", BenchJson(result));
    const Counts& a = result.aggregate;
    out << "bench: " << result.rows.size() << " tests, TP " << a.tp << " FP " << a.fp
        << " FN " << a.fn << " TN " << a.tn;
    if (a.precision()) out << ", precision " << *a.precision();
    if (a.recall()) out << ", recall " << *a.recall();
    out << " -> " << args.report << ".{csv,json}\n";
    return kExitOk;
  });
}

int Main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fit and check column data-quality programs"};
  app.require_subcommand(1);

  FitArgs fit;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Fit a program from a column's history");
  fit_cmd->add_option("--store", fit.store, "Directory of snapshot CSV files")->required();
  fit_cmd->add_option("--schema", fit.schema, "Schema JSON")->required();
  fit_cmd->add_option("--column", fit.column, "Column to fit")->required();
  fit_cmd->add_option("--delta", fit.delta, "False-positive budget")->capture_default_str();
  fit_cmd->add_option("--out", fit.out, "Program JSON output path")->required();
  AddFitFlags(fit_cmd, fit.flags);

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "Validate a batch against a program");
  check_cmd->add_option("--program", check.program, "Program JSON")->required();
  check_cmd->add_option("--batch", check.batch, "New batch CSV")->required();
  check_cmd->add_option("--baseline", check.baseline, "Last accepted batch CSV")->required();
  check_cmd->add_option("--report", check.report, "Also write the report here");

  InjectArgs inject;
  CLI::App* inject_cmd = app.add_subcommand("inject", "Write corrupted variants of a batch");
  inject_cmd->add_option("--batch", inject.batch, "Batch CSV")->required();
  inject_cmd->add_option("--schema", inject.schema, "Schema JSON")->required();
  inject_cmd->add_option("--seed", inject.seed, "Seed")->capture_default_str();
  inject_cmd->add_option("--out-dir", inject.out_dir, "Output directory")->required();

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Sliding-window precision/recall benchmark");
  bench_cmd->add_option("--store", bench.store, "Directory of snapshot CSV files")->required();
  bench_cmd->add_option("--schema", bench.schema, "Schema JSON")->required();
  bench_cmd->add_option("--window", bench.window, "History window")->capture_default_str();
  bench_cmd->add_option("--delta", bench.delta, "False-positive budget")->capture_default_str();
  bench_cmd->add_option("--report", bench.report, "Report path prefix")->required();
  AddFitFlags(bench_cmd, bench.flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitError;
  }
  bench.seed = bench.flags.seed;
  if (*fit_cmd) return CmdFit(fit, out, err);
  if (*check_cmd) return CmdCheck(check, out, err);
  if (*inject_cmd) return CmdInject(inject, out, err);
  return CmdBench(bench, out, err);
}

}  // namespace dqprog::cli
