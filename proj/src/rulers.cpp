#include "qcc/rulers.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "qcc/embedded.hpp"
#include "qcc/errors.hpp"

namespace qcc {

int Gdts::scope() const {
  int best = 0;
  for (const auto& block : blocks) {
    for (int mark : block) best = std::max(best, mark);
  }
  return best;
}

Partition Gdts::profile() const {
  std::vector<int> sizes;
  for (const auto& block : blocks) sizes.push_back(static_cast<int>(block.size()));
  return Partition::from_counts(std::move(sizes));
}

GdtsReport verify_gdts(std::span<const Marks> blocks) {
  if (blocks.empty()) throw InvalidInput("verify_gdts: empty block list");
  GdtsReport report;
  report.normalized = true;
  std::unordered_map<int, DifferenceSite> seen;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Marks& block = blocks[b];
    if (block.empty()) throw InvalidInput("verify_gdts: empty block");
    if (block.front() != 0) report.normalized = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 0) throw InvalidInput("verify_gdts: negative mark");
      report.scope = std::max(report.scope, block[i]);
      if (i > 0 && block[i] <= block[i - 1]) report.normalized = false;
    }
    // Positive differences pooled over all blocks; equivalent to the ordered form.
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) {
        if (block[i] <= block[j]) continue;
        DifferenceSite site{b, block[i], block[j]};
        int diff = block[i] - block[j];
        auto [it, inserted] = seen.emplace(diff, site);
        if (!inserted) report.violations.push_back({diff, it->second, site});
      }
    }
  }
  report.valid = report.normalized && report.violations.empty();
  return report;
}

namespace {

std::map<int, Marks> load_ruler_table() {
  Gdts table = gdts_from_json(embedded_file("golomb_optimal.txt"));
  std::map<int, Marks> by_size;
  for (auto& ruler : table.blocks) {
    Marks single[] = {ruler};
    if (!verify_gdts(single).valid) {
      throw std::logic_error("shipped Golomb ruler table contains an invalid ruler");
    }
    by_size.emplace(static_cast<int>(ruler.size()), std::move(ruler));
  }
  return by_size;
}

const std::map<int, Marks>& ruler_table() {
  static const std::map<int, Marks> table = load_ruler_table();
  return table;
}

}  // namespace

std::optional<Marks> known_optimal_ruler(int marks) {
  const auto& table = ruler_table();
  auto it = table.find(marks);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Marks erdos_turan_ruler(int marks) {
  if (marks < 1) throw InvalidInput("ruler needs at least one mark");
  const long p = static_cast<long>(smallest_prime_at_least(static_cast<std::uint64_t>(marks)));
  Marks result;
  for (long i = 0; i < marks; ++i) result.push_back(static_cast<int>(2 * p * i + (i * i) % p));
  std::sort(result.begin(), result.end());
  const int base = result.front();
  for (int& mark : result) mark -= base;
  return result;
}

Gdts build_golomb_ruler(int marks) {
  if (marks < 1) throw InvalidInput("ruler needs at least one mark");
  Marks best = erdos_turan_ruler(marks);
  if (auto known = known_optimal_ruler(marks); known && known->back() <= best.back()) {
    best = *known;
  }
  return Gdts{{std::move(best)}};
}

long atkinson_bound(int marks) {
  if (marks < 1) throw InvalidInput("ruler needs at least one mark");
  if (marks == 1) return 0;
  const auto j = static_cast<std::uint64_t>(marks - 1);
  return static_cast<long>(j * smallest_prime_power(j));
}

Gdts gdts_from_ruler(const Marks& ruler, const Partition& sizes) {
  if (sizes.empty()) throw InvalidInput("gdts_from_ruler: empty size profile");
  if (static_cast<int>(ruler.size()) < sizes.sum()) {
    throw InvalidInput("gdts_from_ruler: ruler has " + std::to_string(ruler.size()) +
                       " marks but sizes need " + std::to_string(sizes.sum()));
  }
  Gdts result;
  std::size_t next = 0;
  for (int size : sizes.parts()) {
    Marks block(ruler.begin() + static_cast<long>(next),
                ruler.begin() + static_cast<long>(next) + size);
    const int origin = block.front();
    for (int& mark : block) mark -= origin;
    result.blocks.push_back(std::move(block));
    next += static_cast<std::size_t>(size);
  }
  return result;
}

std::string to_json(const Gdts& set) {
  std::ostringstream out;
  out << '[';
  for (std::size_t b = 0; b < set.blocks.size(); ++b) {
    if (b > 0) out << ',';
    out << '[';
    for (std::size_t i = 0; i < set.blocks[b].size(); ++i) {
      if (i > 0) out << ',';
      out << set.blocks[b][i];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

Gdts gdts_from_json(std::string_view text) {
  std::string body;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.front() == '#') continue;
    body += line;
    body += '\n';
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed GDTS text: ") + e.what());
  }
  if (!parsed.is_array()) throw InvalidInput("GDTS text must be a list of integer lists");
  Gdts result;
  for (const auto& block : parsed) {
    if (!block.is_array()) throw InvalidInput("GDTS text must be a list of integer lists");
    Marks marks;
    for (const auto& mark : block) {
      if (!mark.is_number_integer()) throw InvalidInput("GDTS marks must be integers");
      marks.push_back(mark.get<int>());
    }
    result.blocks.push_back(std::move(marks));
  }
  return result;
}

}  // namespace qcc
