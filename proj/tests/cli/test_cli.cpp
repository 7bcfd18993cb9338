#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(SHUFSORT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int raw = pclose(pipe);
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  return fields;
}

constexpr const char* kCsvHeader =
    "data_size,disorder_before,disorder_after,shuffle_time,adaptive_after_shuffle_time,"
    "combined_time,adaptive_without_shuffle_time,non_adaptive_time,pct_improvement_vs_adaptive,"
    "pct_improvement_vs_nonadaptive,comparisons_adaptive_after_shuffle,comparisons_adaptive,"
    "comparisons_baseline,policy,seed";

}  // namespace

TEST_CASE("measure prints n, disorder and runs") {
  write_file("cli_sorted.keys", "1\n2\n3\n");
  CommandResult sorted = run_cli("measure cli_sorted.keys");
  CHECK(sorted.exit_code == 0);
  CHECK(sorted.output == "n: 3\ndisorder: 0\nruns: 1\n");

  write_file("cli_reversed.keys", "3\n2\n1\n");
  CommandResult reversed = run_cli("measure cli_reversed.keys");
  CHECK(reversed.exit_code == 0);
  CHECK(reversed.output == "n: 3\ndisorder: 2\nruns: 3\n");
  std::remove("cli_sorted.keys");
  std::remove("cli_reversed.keys");
}

TEST_CASE("measure rejects duplicates and bad lines with exit code 2") {
  write_file("cli_dup.keys", "1\n7\n7\n");
  CommandResult dup = run_cli("measure cli_dup.keys");
  CHECK(dup.exit_code == 2);
  CHECK(dup.output.find("duplicate key 7") != std::string::npos);
  std::remove("cli_dup.keys");

  write_file("cli_bad.keys", "1\npotato\n3\n");
  CommandResult bad = run_cli("measure cli_bad.keys");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("line 2") != std::string::npos);
  std::remove("cli_bad.keys");

  CommandResult missing = run_cli("measure no_such_file.keys");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("measure --parts reports per-part disorders") {
  CHECK(run_cli("gen --n 5000 --seed 12 --out cli_parts.keys").exit_code == 0);
  CommandResult result = run_cli("measure cli_parts.keys --parts 16");
  CHECK(result.exit_code == 0);

  uint64_t disorder = 0;
  uint64_t parts_total = 0;
  size_t part_values = 0;
  for (const std::string& line : lines_of(result.output)) {
    if (line.rfind("disorder: ", 0) == 0) disorder = std::stoull(line.substr(10));
    if (line.rfind("parts_total: ", 0) == 0) parts_total = std::stoull(line.substr(13));
    if (line.rfind("part_disorders:", 0) == 0) {
      std::stringstream stream(line.substr(15));
      uint64_t value = 0;
      while (stream >> value) ++part_values;
    }
  }
  CHECK(part_values == 16);
  CHECK(parts_total <= disorder);
  CHECK(disorder - parts_total <= 15);
  std::remove("cli_parts.keys");
}

TEST_CASE("eulerian prints exact rows and entries") {
  CommandResult row7 = run_cli("eulerian 7");
  CHECK(row7.exit_code == 0);
  CHECK(row7.output == "1 120 1191 2416 1191 120 1\n");

  CommandResult row1 = run_cli("eulerian 1");
  CHECK(row1.exit_code == 0);
  CHECK(row1.output == "1\n");

  CommandResult entry = run_cli("eulerian 8 2");
  CHECK(entry.exit_code == 0);
  CHECK(entry.output == "4293\n");

  CHECK(run_cli("eulerian 0").exit_code == 2);
  CHECK(run_cli("eulerian 250").exit_code == 2);
  CHECK(run_cli("eulerian 250 7").exit_code == 2);  // the cap guards single entries too
  CHECK(run_cli("eulerian 250 --max-n 250").exit_code == 0);
  CommandResult capped_entry = run_cli("eulerian 250 1 --max-n 250");
  CHECK(capped_entry.exit_code == 0);
  // exactly one descent: 2^n - n - 1 permutations
  CHECK(capped_entry.output ==
        "1809251394333065553493296640760748560207343510400633813116524750123642650373\n");
}

TEST_CASE("gen and measure round-trip a target-disorder file") {
  CHECK(run_cli("gen --n 100 --kind target:37 --seed 5 --out cli_gen.keys").exit_code == 0);
  CommandResult measured = run_cli("measure cli_gen.keys");
  CHECK(measured.exit_code == 0);
  CHECK(measured.output.find("disorder: 37\n") != std::string::npos);
  std::remove("cli_gen.keys");

  CHECK(run_cli("gen --n 10 --kind target:10").exit_code == 2);
  CHECK(run_cli("gen --n 10 --kind banana").exit_code == 2);
}

TEST_CASE("validate-claims selected modes") {
  CommandResult exhaustive = run_cli("validate-claims --exhaustive 6");
  CHECK(exhaustive.exit_code == 0);
  CHECK(exhaustive.output.find("PASS exhaustive n=6") != std::string::npos);

  CommandResult refused = run_cli("validate-claims --exhaustive 10");
  CHECK(refused.exit_code == 2);
  CHECK(refused.output.find("refused") != std::string::npos);

  CommandResult model = run_cli("validate-claims --model 64");
  CHECK(model.exit_code == 0);
  CHECK(model.output.find("PASS model n=64") != std::string::npos);

  CommandResult claim2 = run_cli("validate-claims --claim2-l 16 --claim2-c 8 --trials 50000");
  CHECK(claim2.exit_code == 0);
  CHECK(claim2.output.find("PASS claim2 l=16 c=8") != std::string::npos);

  CommandResult kernel = run_cli("validate-claims --kernel 100 --kernel-z 60 --trials 5000");
  CHECK(kernel.exit_code == 0);
  CHECK(kernel.output.find("INFO kernel n=100 z=60") != std::string::npos);
}

TEST_CASE("bench emits well-formed CSV records") {
  CommandResult bench =
      run_cli("bench --sizes 500,600 --reps 2 --seed 3 --out cli_bench.csv");
  CHECK(bench.exit_code == 0);

  std::ifstream file("cli_bench.csv");
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  const std::vector<std::string> lines = lines_of(content.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == kCsvHeader);

  for (size_t row = 1; row < lines.size(); ++row) {
    const std::vector<std::string> fields = split_csv(lines[row]);
    REQUIRE(fields.size() == 15);
    const size_t data_size = std::stoull(fields[0]);
    CHECK(data_size == (row <= 2 ? 500u : 600u));

    const double shuffle_time = std::strtod(fields[3].c_str(), nullptr);
    const double sort_after = std::strtod(fields[4].c_str(), nullptr);
    const double combined = std::strtod(fields[5].c_str(), nullptr);
    CHECK(combined == shuffle_time + sort_after);  // exact by construction

    const double adaptive_alone = std::strtod(fields[6].c_str(), nullptr);
    const double non_adaptive = std::strtod(fields[7].c_str(), nullptr);
    const double pct_adaptive = std::strtod(fields[8].c_str(), nullptr);
    const double pct_non = std::strtod(fields[9].c_str(), nullptr);
    CHECK(pct_adaptive ==
          doctest::Approx(100.0 * (adaptive_alone - combined) / adaptive_alone).epsilon(1e-9));
    CHECK(pct_non == doctest::Approx(100.0 * (non_adaptive - combined) / non_adaptive).epsilon(1e-9));

    CHECK(std::stoull(fields[1]) > 0);   // disorder_before
    CHECK(std::stoull(fields[10]) > 0);  // comparisons
    CHECK(fields[13] == "guarded");
  }
  std::remove("cli_bench.csv");
}

TEST_CASE("bench non-time columns are pinned for a fixed seed") {
  // golden values: the seeded pipeline (generation, partition, shuffle, both
  // sorts, comparison counting) must reproduce these exactly on any platform
  CommandResult fixed = run_cli("bench --sizes 100 --reps 2 --seed 42 --policy fixed:2 --k 4 --z 2");
  REQUIRE(fixed.exit_code == 0);
  const auto fixed_lines = lines_of(fixed.output);
  REQUIRE(fixed_lines.size() == 3);
  {
    const auto r = split_csv(fixed_lines[1]);
    CHECK(r[0] == "100");
    CHECK(r[1] == "47");
    CHECK(r[2] == "46");
    CHECK(r[10] == "589");
    CHECK(r[11] == "597");
    CHECK(r[12] == "536");
    CHECK(r[13] == "fixed:2");
    CHECK(r[14] == "2949826092126892291");
  }
  {
    const auto r = split_csv(fixed_lines[2]);
    CHECK(r[1] == "46");
    CHECK(r[2] == "47");  // blind swaps may raise disorder; guarded never does
    CHECK(r[10] == "588");
    CHECK(r[11] == "595");
    CHECK(r[12] == "544");
    CHECK(r[14] == "6904877152625194467");
  }

  CommandResult guarded = run_cli("bench --sizes 100 --reps 1 --seed 42 --k 4 --z 2");
  REQUIRE(guarded.exit_code == 0);
  const auto guarded_lines = lines_of(guarded.output);
  REQUIRE(guarded_lines.size() == 2);
  const auto g = split_csv(guarded_lines[1]);
  CHECK(g[1] == "47");
  CHECK(g[2] == "42");
  CHECK(g[10] == "594");
  CHECK(g[13] == "guarded");
}

TEST_CASE("bench non-time columns are reproducible for a fixed seed") {
  CommandResult first = run_cli("bench --sizes 400 --reps 3 --seed 11 --policy fixed:2");
  CommandResult second = run_cli("bench --sizes 400 --reps 3 --seed 11 --policy fixed:2");
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);

  const std::vector<std::string> lines_a = lines_of(first.output);
  const std::vector<std::string> lines_b = lines_of(second.output);
  REQUIRE(lines_a.size() == lines_b.size());
  const std::vector<size_t> non_time_columns{0, 1, 2, 10, 11, 12, 13, 14};
  for (size_t row = 1; row < lines_a.size(); ++row) {
    const auto fields_a = split_csv(lines_a[row]);
    const auto fields_b = split_csv(lines_b[row]);
    for (size_t column : non_time_columns) CHECK(fields_a[column] == fields_b[column]);
  }
}

TEST_CASE("bench on a sorted input flags nothing") {
  {
    std::ofstream out("cli_sorted_bench.keys");
    for (int i = 1; i <= 2000; ++i) out << i << "\n";
  }
  CommandResult bench = run_cli("bench --input cli_sorted_bench.keys --reps 1 --seed 4");
  CHECK(bench.exit_code == 0);
  const std::vector<std::string> lines = lines_of(bench.output);
  REQUIRE(lines.size() == 2);
  const std::vector<std::string> fields = split_csv(lines[1]);
  CHECK(fields[0] == "2000");
  CHECK(fields[1] == "0");          // disorder before
  CHECK(fields[2] == "0");          // disorder after: nothing flagged
  CHECK(fields[10] == fields[11]);  // same comparisons with and without shuffling
  std::remove("cli_sorted_bench.keys");
}

TEST_CASE("bench emits JSON when asked") {
  CommandResult bench = run_cli("bench --sizes 300 --reps 2 --seed 7 --format json");
  REQUIRE(bench.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(bench.output);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  for (const auto& record : doc) {
    CHECK(record["data_size"] == 300);
    CHECK(record["policy"] == "guarded");
    CHECK(record.contains("comparisons_baseline"));
    const double combined = record["combined_time"];
    const double parts = double(record["shuffle_time"]) +
                         double(record["adaptive_after_shuffle_time"]);
    CHECK(combined == doctest::Approx(parts).epsilon(1e-12));
  }
}

TEST_CASE("parallel bench matches sequential non-time columns") {
  const std::string args = "bench --sizes 800,900 --reps 2 --seed 21";
  CommandResult sequential = run_cli(args);
  CommandResult parallel = run_cli(args + " --parallel");
  REQUIRE(sequential.exit_code == 0);
  REQUIRE(parallel.exit_code == 0);

  const auto lines_a = lines_of(sequential.output);
  const auto lines_b = lines_of(parallel.output);
  REQUIRE(lines_a.size() == 5);
  REQUIRE(lines_b.size() == 5);
  const std::vector<size_t> non_time_columns{0, 1, 2, 10, 11, 12, 13, 14};
  for (size_t row = 1; row < lines_a.size(); ++row) {
    const auto fields_a = split_csv(lines_a[row]);
    const auto fields_b = split_csv(lines_b[row]);
    for (size_t column : non_time_columns) CHECK(fields_a[column] == fields_b[column]);
  }
}

TEST_CASE("bench at the default scale sees disorder near n/2") {
  // default reps is 5: one size yields five records
  CommandResult bench = run_cli("bench --sizes 5000 --seed 6");
  REQUIRE(bench.exit_code == 0);
  const auto lines = lines_of(bench.output);
  REQUIRE(lines.size() == 6);
  for (size_t row = 1; row < lines.size(); ++row) {
    const auto fields = split_csv(lines[row]);
    const uint64_t before = std::stoull(fields[1]);
    const uint64_t after = std::stoull(fields[2]);
    CHECK(before > 2300);
    CHECK(before < 2700);
    CHECK(after < before);  // guarded policy
  }
}

TEST_CASE("exhaustive validation covers n=8 and the nearly-sorted generator works") {
  CommandResult exhaustive = run_cli("validate-claims --exhaustive 8");
  CHECK(exhaustive.exit_code == 0);
  CHECK(exhaustive.output.find("PASS exhaustive n=8") != std::string::npos);
  CHECK(exhaustive.output.find("40320") != std::string::npos);

  CHECK(run_cli("gen --n 50 --kind nearly:2 --seed 8 --out cli_nearly.keys").exit_code == 0);
  CommandResult measured = run_cli("measure cli_nearly.keys");
  CHECK(measured.exit_code == 0);
  CHECK(measured.output.find("n: 50\n") != std::string::npos);
  std::remove("cli_nearly.keys");
}

TEST_CASE("bench rejects bad flags with exit code 2") {
  CHECK(run_cli("bench --sizes abc").exit_code == 2);
  CHECK(run_cli("bench --policy sideways").exit_code == 2);
  CHECK(run_cli("bench --reps 0").exit_code == 2);
  CHECK(run_cli("bench --sizes 100 --m 0").exit_code == 2);
}
