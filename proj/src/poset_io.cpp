#include <map>
#include <random>
#include <sstream>

#include "rees/poset.hpp"

namespace rees {

nlohmann::json to_json(const Poset& p) {
  nlohmann::json j;
  j["elements"] = p.labels();
  auto covers = nlohmann::json::array();
  for (auto [a, b] : p.cover_pairs()) covers.push_back({a, b});
  j["covers"] = std::move(covers);
  if (p.is_ranked()) {
    auto ranks = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i) ranks.push_back(p.rank(i));
    j["ranks"] = std::move(ranks);
  }
  return j;
}

Poset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw PosetError("poset JSON needs \"elements\" and \"covers\"");
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) {
    if (e.is_string()) labels.push_back(e.get<std::string>());
    else labels.push_back(e.dump());
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw PosetError("each cover must be a pair [i,j]");
    covers.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
  }
  std::vector<std::size_t> canon;
  Poset p = build_poset(labels, covers, &canon);
  if (j.contains("ranks")) {
    const auto& ranks = j.at("ranks");
    if (!p.is_ranked()) throw PosetError("\"ranks\" given for a poset that is not ranked");
    if (ranks.size() != labels.size()) throw PosetError("\"ranks\" length mismatch");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (ranks[i].get<int>() != p.rank(canon[i]))
        throw PosetError("rank of '" + labels[i] + "' disagrees with the cover relation");
  }
  return p;
}

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < p.size(); ++i) layers[p.rank(i)].push_back(i);
  for (const auto& [r, members] : layers) {
    out << "  { rank=same;";
    for (std::size_t i : members) out << " n" << i << ";";
    out << " }\n";
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string l = p.label(i);
    std::string escaped;
    for (char c : l) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [a, b] : p.cover_pairs()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

namespace {

// Platform-independent draws from mt19937_64.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
std::size_t pick(std::mt19937_64& rng, std::size_t bound) { return rng() % bound; }

}  // namespace

Poset random_ranked_bounded_poset(int n, int width, double density, std::uint64_t seed) {
  if (n < 1) throw PosetError("random poset: length must be at least 1");
  if (width < 1) throw PosetError("random poset: width must be at least 1");
  if (!(density > 0.0 && density <= 1.0)) throw PosetError("random poset: density must lie in (0, 1]");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> levels(n + 1);
  std::vector<std::string> labels;
  auto add = [&](int level, std::string label) {
    levels[level].push_back(labels.size());
    labels.push_back(std::move(label));
  };
  add(0, "bot");
  for (int k = 1; k < n; ++k) {
    const std::size_t count = 1 + pick(rng, static_cast<std::size_t>(width));
    for (std::size_t i = 0; i < count; ++i) add(k, std::to_string(k) + "." + std::to_string(i));
  }
  add(n, "top");

  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (int k = 1; k <= n; ++k) {
    const auto& lower = levels[k - 1];
    const auto& upper = levels[k];
    std::vector<char> covered(lower.size(), 0);
    for (std::size_t y : upper) {
      bool any = false;
      for (std::size_t xi = 0; xi < lower.size(); ++xi) {
        // The top must cover every coatom and level-1 elements can only cover bot.
        const bool forced = (k == n) || (k == 1);
        if (forced || unit(rng) < density) {
          covers.emplace_back(lower[xi], y);
          covered[xi] = 1;
          any = true;
        }
      }
      if (!any) {
        const std::size_t xi = pick(rng, lower.size());
        covers.emplace_back(lower[xi], y);
        covered[xi] = 1;
      }
    }
    for (std::size_t xi = 0; xi < lower.size(); ++xi)
      if (!covered[xi]) covers.emplace_back(lower[xi], upper[pick(rng, upper.size())]);
  }
  return build_poset(labels, covers);
}

}  // namespace rees
