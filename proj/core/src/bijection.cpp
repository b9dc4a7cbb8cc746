#include "steinberg/bijection.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "steinberg/errors.hpp"

namespace steinberg {

Bijection::Bijection(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::set<int> targets_seen;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0 && pairs_[i].first == pairs_[i - 1].first) {
      throw DomainError("bijection sources must be distinct");
    }
    if (!targets_seen.insert(pairs_[i].second).second) {
      throw DomainError("bijection targets must be distinct");
    }
  }
}

std::vector<int> Bijection::sources() const {
  std::vector<int> out;
  out.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) out.push_back(s);
  return out;
}

std::vector<int> Bijection::targets() const {
  std::vector<int> out;
  out.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) out.push_back(t);
  return out;
}

bool Bijection::has_source(int source) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::pair<int, int>{source, 0},
                            [](const auto& a, const auto& b) { return a.first < b.first; });
}

int Bijection::target_of(int source) const {
  const auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), source,
      [](const auto& pair, int value) { return pair.first < value; });
  if (it == pairs_.end() || it->first != source) {
    throw DomainError("bijection has no source " + std::to_string(source));
  }
  return it->second;
}

Bijection Bijection::inverse() const {
  std::vector<std::pair<int, int>> flipped;
  flipped.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) flipped.emplace_back(t, s);
  return Bijection(std::move(flipped));
}

bool Bijection::is_permutation() const {
  std::vector<int> t = targets();
  std::sort(t.begin(), t.end());
  for (int i = 0; i < size(); ++i) {
    if (pairs_[static_cast<std::size_t>(i)].first != i + 1 ||
        t[static_cast<std::size_t>(i)] != i + 1) {
      return false;
    }
  }
  return true;
}

}  // namespace steinberg
