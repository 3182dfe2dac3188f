#include "jtype/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "jtype/error.hpp"

namespace jtype {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), std::size_t{0}) != parts_.end())
    fail(Errc::invalid_argument, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s.push_back(c);
  std::vector<std::size_t> parts;
  std::stringstream ss(s);
  std::string item;
  auto number = [&](const std::string& t) -> std::size_t {
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(Errc::parse_error, "bad partition '" + text + "'");
    return std::stoul(t);
  };
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    std::size_t part = number(item.substr(0, caret));
    std::size_t mult = caret == std::string::npos ? 1 : number(item.substr(caret + 1));
    parts.insert(parts.end(), mult, part);
  }
  return Partition(std::move(parts));
}

std::size_t Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

std::size_t Partition::count_at_least(std::size_t k) const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [k](std::size_t p) { return p >= k; }));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i) s += ",";
    s += std::to_string(parts_[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + ")";
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::greater: return "greater";
    case Dominance::less: return "less";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
  }
  return "?";
}

Dominance dominance_compare(const Partition& p, const Partition& q) {
  if (p.total() != q.total())
    fail(Errc::incomparable, "partitions of different integers: " + p.to_string() + " vs " + q.to_string());
  bool ge = true, le = true;
  std::size_t sp = 0, sq = 0;
  for (std::size_t k = 0; k < std::max(p.size(), q.size()); ++k) {
    sp += k < p.size() ? p.parts()[k] : 0;
    sq += k < q.size() ? q.parts()[k] : 0;
    if (sp < sq) ge = false;
    if (sp > sq) le = false;
  }
  if (ge && le) return Dominance::equal;
  if (ge) return Dominance::greater;
  if (le) return Dominance::less;
  return Dominance::incomparable;
}

Partition conjugate_partition(const Partition& p) {
  std::vector<std::size_t> out;
  if (p.size() == 0) return Partition{};
  for (std::size_t k = 1; k <= p.parts().front(); ++k) out.push_back(p.count_at_least(k));
  return Partition(std::move(out));
}

JordanDegreeType::JordanDegreeType(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& [len, deg] : entries_)
    if (len == 0 || deg < 0) fail(Errc::invalid_argument, "Jordan degree type entries need length > 0 and degree >= 0");
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
}

Partition JordanDegreeType::partition() const {
  std::vector<std::size_t> parts;
  for (const auto& e : entries_) parts.push_back(e.first);
  return Partition(std::move(parts));
}

std::vector<std::size_t> JordanDegreeType::bead_counts(int top) const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  for (const auto& [len, start] : entries_)
    for (int i = start; i < start + static_cast<int>(len) && i <= top; ++i) ++counts[static_cast<std::size_t>(i)];
  return counts;
}

std::string JordanDegreeType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size();) {
    std::size_t j = i;
    while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
    if (i) s += ",";
    s += std::to_string(entries_[i].first) + "_" + std::to_string(entries_[i].second);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace jtype
