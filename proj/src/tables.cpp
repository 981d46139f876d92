#include "ktrees/tables.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ktrees/errors.hpp"
#include "ktrees/gamma_gf.hpp"
#include "ktrees/oracle.hpp"

namespace ktrees {

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::gf: return "gf";
    case Engine::cycle_index: return "cycle-index";
    case Engine::oracle: return "oracle";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  if (name == "gf") return Engine::gf;
  if (name == "cycle-index") return Engine::cycle_index;
  if (name == "oracle") return Engine::oracle;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

void validate(const EnumerationTable& table) {
  if (table.n_max < 0 || table.counts.size() != static_cast<std::size_t>(table.n_max) + 1) {
    throw InvariantViolation("table for k=" + std::to_string(table.k) + " has " +
                             std::to_string(table.counts.size()) + " counts, expected n_max+1");
  }
  if (table.counts.front() != 1) throw InvariantViolation("table count for n=0 must be 1");
}

EnumerationTable compute_table(int k, int n_max, Engine engine, CycleIndexLimits limits) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationTable table{k, n_max, engine, {}, 0.0};
  switch (engine) {
    case Engine::gf:
      table.counts = unlabeled_ktree_gf(k, n_max);
      break;
    case Engine::cycle_index:
      table.counts = assert_nonneg_integers(specialize_to_unlabeled(ktree_cycle_index(k, n_max, limits)));
      break;
    case Engine::oracle:
      table.counts = oracle::brute_counts(k, n_max);
      break;
  }
  table.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  validate(table);
  return table;
}

std::string to_csv(const EnumerationTable& table) {
  std::string out = "n,count\n";
  for (std::size_t n = 0; n < table.counts.size(); ++n) {
    out += std::to_string(n) + "," + table.counts[n].get_str() + "\n";
  }
  return out;
}

std::string to_json(const EnumerationTable& table) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& c : table.counts) counts.push_back(c.get_str());
  nlohmann::json doc = {{"k", table.k},
                        {"n_max", table.n_max},
                        {"engine", to_string(table.engine)},
                        {"counts", std::move(counts)},
                        {"wall_seconds", table.wall_seconds}};
  return doc.dump();
}

EnumerationTable table_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text.begin(), text.end());
  EnumerationTable table;
  table.k = doc.at("k").get<int>();
  table.n_max = doc.at("n_max").get<int>();
  table.engine = parse_engine(doc.at("engine").get<std::string>());
  for (const auto& c : doc.at("counts")) {
    mpz_class value;
    if (value.set_str(c.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("malformed count '" + c.get<std::string>() + "'");
    }
    table.counts.push_back(std::move(value));
  }
  if (doc.contains("wall_seconds")) table.wall_seconds = doc.at("wall_seconds").get<double>();
  validate(table);
  return table;
}

std::string to_text(const EnumerationTable& table) {
  std::ostringstream out;
  out << "# unlabeled " << table.k << "-trees by hedra, engine " << to_string(table.engine) << ", "
      << table.wall_seconds << " s\n";
  out << "k=" << table.k << "\n";
  for (std::size_t n = 0; n < table.counts.size(); ++n) out << n << " " << table.counts[n].get_str() << "\n";
  return out.str();
}

std::vector<FixtureBlock> parse_fixture(std::istream& in) {
  std::vector<FixtureBlock> blocks;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("fixture line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first.rfind("k=", 0) == 0) {
      std::string rest;
      if (fields >> rest) fail("unexpected text after block header");
      FixtureBlock block;
      try {
        std::size_t used = 0;
        block.k = std::stoi(first.substr(2), &used);
        if (used != first.size() - 2) fail("malformed block header '" + first + "'");
      } catch (const std::logic_error&) {
        fail("malformed block header '" + first + "'");
      }
      blocks.push_back(std::move(block));
      continue;
    }
    if (blocks.empty()) fail("entry before any 'k=' header");
    std::string count_text;
    std::string extra;
    if (!(fields >> count_text) || (fields >> extra)) fail("expected 'n count'");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(first, &used);
      if (used != first.size() || n < 0) fail("malformed n '" + first + "'");
    } catch (const std::logic_error&) {
      fail("malformed n '" + first + "'");
    }
    mpz_class count;
    if (count.set_str(count_text, 10) != 0 || sgn(count) < 0) fail("malformed count '" + count_text + "'");
    blocks.back().entries.emplace_back(n, std::move(count));
  }
  return blocks;
}

std::vector<FixtureBlock> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture '" + path + "'");
  return parse_fixture(in);
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed(); }));
}

VerifyReport verify_tables(const std::vector<FixtureBlock>& fixture) {
  VerifyReport report;
  std::map<int, int> order_for_k;
  for (const auto& block : fixture) {
    if (block.entries.empty()) {
      report.warnings.push_back("block k=" + std::to_string(block.k) + " has no entries");
      continue;
    }
    int& order = order_for_k[block.k];
    for (const auto& [n, count] : block.entries) order = std::max(order, n);
  }
  if (order_for_k.empty()) {
    report.warnings.push_back("fixture contains no entries; nothing verified");
    return report;
  }

  std::map<int, std::future<std::vector<mpz_class>>> pending;
  for (const auto& [k, order] : order_for_k) {
    pending.emplace(k, std::async(std::launch::async, [k = k, order = order] { return unlabeled_ktree_gf(k, order); }));
  }
  std::map<int, std::vector<mpz_class>> computed;
  for (auto& [k, future] : pending) computed.emplace(k, future.get());

  for (const auto& block : fixture) {
    const auto& counts = computed.find(block.k);
    for (const auto& [n, expected] : block.entries) {
      report.checks.push_back({block.k, n, expected, counts->second[static_cast<std::size_t>(n)]});
    }
  }
  return report;
}

VerifyReport verify_tables(const std::string& path) { return verify_tables(load_fixture(path)); }

}  // namespace ktrees
