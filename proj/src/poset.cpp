#include "convexity/poset.hpp"

#include <algorithm>

#include "convexity/errors.hpp"

namespace convexity {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const auto n = size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (Index c = 0; c < n && cover; ++c) {
        if (less(a, c) && less(c, b)) cover = false;
      }
      if (cover) hasse_.emplace_back(a, b);
    }
  }
}

FinitePoset FinitePoset::from_relations(std::vector<std::string> labels,
                                        const std::vector<std::pair<Index, Index>>& relations) {
  const auto n = labels.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) {
      throw InputError("order relation (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
    leq[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw InputError("order relations form a cycle through '" + labels[i] + "' and '" + labels[j] + "'");
      }
    }
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::from_matrix(std::vector<std::string> labels, std::vector<std::vector<bool>> leq) {
  const auto n = labels.size();
  if (leq.size() != n) throw InputError("order matrix has wrong shape");
  std::vector<std::pair<Index, Index>> rel;
  for (Index i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw InputError("order matrix has wrong shape");
    if (!leq[i][i]) throw InputError("order matrix is not reflexive at '" + labels[i] + "'");
    for (Index j = 0; j < n; ++j) {
      if (leq[i][j]) rel.emplace_back(i, j);
    }
  }
  auto p = from_relations(labels, rel);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (p.leq(i, j) != leq[i][j]) throw InputError("order matrix is not transitive");
    }
  }
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Index, Index>> rel;
  for (Index i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return from_relations(std::move(labels), rel);
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return from_relations(std::move(labels), {});
}

FinitePoset FinitePoset::direct_sum(const std::vector<FinitePoset>& parts) {
  std::vector<std::string> labels;
  std::vector<std::pair<Index, Index>> rel;
  Index offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    for (Index i = 0; i < part.size(); ++i) labels.push_back(std::to_string(p) + "." + part.label(i));
    for (auto [a, b] : part.hasse()) rel.emplace_back(a + offset, b + offset);
    offset += static_cast<Index>(part.size());
  }
  return from_relations(std::move(labels), rel);
}

std::optional<FinitePoset::Index> FinitePoset::meet(Index a, Index b) const {
  for (Index c = 0; c < size(); ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    bool greatest = true;
    for (Index d = 0; d < size() && greatest; ++d) {
      if (leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
    }
    if (greatest) return c;
  }
  return std::nullopt;
}

std::optional<FinitePoset::Index> FinitePoset::join(Index a, Index b) const {
  for (Index c = 0; c < size(); ++c) {
    if (!leq(a, c) || !leq(b, c)) continue;
    bool least = true;
    for (Index d = 0; d < size() && least; ++d) {
      if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return std::nullopt;
}

FinitePoset FinitePoset::induced(const std::vector<Index>& subset) const {
  const auto k = subset.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(label(subset[i]));
    for (std::size_t j = 0; j < k; ++j) leq[i * k + j] = this->leq(subset[i], subset[j]) ? 1 : 0;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

}  // namespace convexity
