#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ktrees/cycle_index.hpp"

namespace ktrees {

enum class Engine { gf, cycle_index, oracle };

std::string to_string(Engine engine);
// "gf", "cycle-index" or "oracle"; throws std::invalid_argument otherwise.
Engine parse_engine(std::string_view name);

// Counts of unlabeled k-trees with 0..n_max hedra and how they were obtained.
struct EnumerationTable {
  int k = 0;
  int n_max = 0;
  Engine engine = Engine::gf;
  std::vector<mpz_class> counts;
  double wall_seconds = 0.0;

  friend bool operator==(const EnumerationTable&, const EnumerationTable&) = default;
};

// Throws InvariantViolation unless counts has n_max+1 entries starting with 1.
void validate(const EnumerationTable& table);

EnumerationTable compute_table(int k, int n_max, Engine engine, CycleIndexLimits limits = {});

// "n,count" header then one row per n, LF line endings.
std::string to_csv(const EnumerationTable& table);
// {"k":..,"n_max":..,"engine":..,"counts":["1",..],"wall_seconds":..}
std::string to_json(const EnumerationTable& table);
EnumerationTable table_from_json(std::string_view text);
// A fixture block ("k=<k>" then "n count" lines) preceded by a comment line.
std::string to_text(const EnumerationTable& table);

// Reference data: "k=<int>" opens a block, each following non-comment line
// is "n count". '#' starts a comment; blank lines are ignored.
struct FixtureBlock {
  int k = 0;
  std::vector<std::pair<int, mpz_class>> entries;
};

// Throws std::runtime_error naming the offending line on malformed input.
std::vector<FixtureBlock> parse_fixture(std::istream& in);
std::vector<FixtureBlock> load_fixture(const std::string& path);

struct TableCheck {
  int k = 0;
  int n = 0;
  mpz_class expected;
  mpz_class actual;
  bool passed() const { return expected == actual; }
};

struct VerifyReport {
  std::vector<TableCheck> checks;
  std::vector<std::string> warnings;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

// Recomputes every block with the generating-function engine, one
// independent computation per distinct k run concurrently. Checks are
// reported in fixture order.
VerifyReport verify_tables(const std::vector<FixtureBlock>& fixture);
VerifyReport verify_tables(const std::string& path);

}  // namespace ktrees
