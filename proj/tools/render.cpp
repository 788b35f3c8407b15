#include <algorithm>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace dyckperm::cli {

std::string wd_record(const WeightedDyckPath& wd) {
  nlohmann::ordered_json j;
  j["steps"] = wd.path().to_string();
  j["weights"] = std::vector<int>(wd.weights().begin(), wd.weights().end());
  return j.dump();
}

std::string perm_record(const Permutation& p) {
  nlohmann::ordered_json j;
  j["perm"] = std::vector<int>(p.values().begin(), p.values().end());
  return j.dump();
}

std::string render_ascii(const WeightedDyckPath& wd) {
  const DyckPath& p = wd.path();
  const auto h = heights(p);
  const int m = static_cast<int>(p.size());
  if (m == 0) return "(empty path)\n";

  // Columns widen only when some weight needs more than one digit.
  std::size_t width = 1;
  for (int w : wd.weights()) width = std::max(width, std::to_string(w).size());

  const int rows = *std::max_element(h.begin(), h.end());
  std::vector<std::string> grid(rows, std::string(m * width, ' '));
  for (int u = 1; u <= m; ++u) {
    const bool up = p.is_up(u);
    const int row = std::min(h[u - 1], h[u]);
    grid[row][(u - 1) * width + width - 1] = up ? '/' : '\\';
  }

  std::string out;
  for (int r = rows - 1; r >= 0; --r) {
    std::string line = grid[r];
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  std::string weights;
  for (int w : wd.weights()) {
    const std::string s = std::to_string(w);
    weights += std::string(width - s.size(), ' ') + s;
  }
  out += weights;
  out += '\n';
  return out;
}

}  // namespace dyckperm::cli
