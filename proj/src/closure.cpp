#include "convexity/closure.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "convexity/errors.hpp"

namespace convexity {

namespace {
std::atomic<std::size_t> g_enumeration_bound{20};
}

std::size_t enumeration_bound() { return g_enumeration_bound.load(); }

void set_enumeration_bound(std::size_t bound) {
  if (bound == 0 || bound > ElementSet::kMaxElements) {
    throw InputError("enumeration bound must be in 1.." + std::to_string(ElementSet::kMaxElements));
  }
  g_enumeration_bound.store(bound);
}

void require_within_bound(std::size_t n, std::size_t bound, const std::string& what) {
  if (n > bound) {
    throw CapacityError(what + ": size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
}

GroundSet::GroundSet(std::size_t size) {
  if (size == 0) throw InputError("ground set must be nonempty");
  if (size > ElementSet::kMaxElements) {
    throw CapacityError("ground set size " + std::to_string(size) + " exceeds bitmask width " +
                        std::to_string(ElementSet::kMaxElements));
  }
  labels_.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels_.push_back(std::to_string(i));
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("ground set must be nonempty");
  if (labels_.size() > ElementSet::kMaxElements) {
    throw CapacityError("ground set size " + std::to_string(labels_.size()) + " exceeds bitmask width " +
                        std::to_string(ElementSet::kMaxElements));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InputError("duplicate ground label '" + l + "'");
  }
}

std::optional<ElementId> GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ElementId>(it - labels_.begin());
}

std::string GroundSet::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (auto id : s.ids()) {
    if (!first) out += ',';
    out += id < labels_.size() ? labels_[id] : "#" + std::to_string(id);
    first = false;
  }
  return out + '}';
}

struct ClosureSystem::State {
  GroundSet ground;
  std::optional<std::vector<ElementSet>> family;
  Rule rule;
  mutable std::mutex memo_mutex;
  mutable std::unordered_map<ElementSet, ElementSet, ElementSetHash> memo;

  State(GroundSet g, std::optional<std::vector<ElementSet>> f, Rule r)
      : ground(std::move(g)), family(std::move(f)), rule(std::move(r)) {}
};

const GroundSet& ClosureSystem::ground() const { return state_->ground; }

bool ClosureSystem::is_extensional() const { return state_->family.has_value(); }


ClosureSystem ClosureSystem::extensional(GroundSet ground, std::vector<ElementSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (auto s : family) {
    if (!ground.contains(s)) throw InputError("closed set " + s.to_string() + " leaves the ground set");
  }
  if (!std::binary_search(family.begin(), family.end(), ground.full())) {
    throw InputError("closed family must contain the full ground set " + ground.format(ground.full()));
  }
  std::unordered_set<ElementSet, ElementSetHash> members(family.begin(), family.end());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!members.contains(family[i] & family[j])) {
        throw InputError("closed family is not intersection-closed: " + ground.format(family[i]) + " ∩ " +
                         ground.format(family[j]) + " = " + ground.format(family[i] & family[j]) + " is missing");
      }
    }
  }
  return ClosureSystem(std::make_shared<State>(std::move(ground), std::move(family), Rule{}));
}

ClosureSystem ClosureSystem::intensional(GroundSet ground, Rule rule) {
  if (!rule) throw InputError("intensional closure rule is empty");
  return ClosureSystem(std::make_shared<State>(std::move(ground), std::nullopt, std::move(rule)));
}

const std::vector<ElementSet>& ClosureSystem::family() const {
  if (!state_->family) throw InputError("closure system is intensional; enumerate it first");
  return *state_->family;
}

ElementSet ClosureSystem::close(ElementSet y) const {
  const auto& st = *state_;
  if (!st.ground.contains(y)) {
    throw InputError("subset " + y.to_string() + " has element ids outside 0.." + std::to_string(st.ground.size() - 1));
  }
  if (st.family) {
    ElementSet result = st.ground.full();
    for (auto c : *st.family) {
      if (y.subset_of(c)) result &= c;
    }
    return result;
  }
  {
    std::lock_guard lock(st.memo_mutex);
    if (auto it = st.memo.find(y); it != st.memo.end()) return it->second;
  }
  ElementSet result = st.rule(y);
  std::lock_guard lock(st.memo_mutex);
  st.memo.emplace(y, result);
  return result;
}

ElementSet lift_from_restriction(ElementSet x_prime, ElementSet restricted) {
  ElementSet out;
  ElementId k = 0;
  for (auto id : x_prime.ids()) {
    if (restricted.contains(k)) out = out.with(id);
    ++k;
  }
  return out;
}

ElementSet project_to_restriction(ElementSet x_prime, ElementSet original) {
  ElementSet out;
  ElementId k = 0;
  for (auto id : x_prime.ids()) {
    if (original.contains(id)) out = out.with(k);
    ++k;
  }
  return out;
}

ClosureSystem restrict(const ClosureSystem& system, ElementSet x_prime) {
  if (x_prime.empty()) throw InputError("restriction target must be nonempty");
  if (!system.ground().contains(x_prime)) {
    throw InputError("restriction target " + x_prime.to_string() + " leaves the ground set");
  }
  std::vector<std::string> labels;
  for (auto id : x_prime.ids()) labels.push_back(system.ground().label(id));
  GroundSet ground(std::move(labels));
  return ClosureSystem::intensional(std::move(ground), [system, x_prime](ElementSet y) {
    auto closed = system.close(lift_from_restriction(x_prime, y));
    return project_to_restriction(x_prime, closed & x_prime);
  });
}

ClosureSystem join_of_systems(std::span<const ClosureSystem> systems) {
  if (systems.empty()) throw InputError("join of systems needs at least one system");
  for (const auto& s : systems) {
    if (!(s.ground() == systems.front().ground())) {
      throw InputError("join of systems requires identical ground sets");
    }
  }
  if (systems.size() == 1) return systems.front();
  std::vector<ClosureSystem> parts(systems.begin(), systems.end());
  auto ground = parts.front().ground();
  return ClosureSystem::intensional(std::move(ground), [parts = std::move(parts)](ElementSet y) {
    ElementSet result = parts.front().ground().full();
    for (const auto& p : parts) result &= p.close(y);
    return result;
  });
}

}  // namespace convexity
