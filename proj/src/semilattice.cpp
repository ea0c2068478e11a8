#include "convexity/semilattice.hpp"

#include "convexity/errors.hpp"

namespace convexity {

JoinSemilattice JoinSemilattice::from_table(std::vector<std::string> labels, std::vector<Index> table) {
  const auto n = labels.size();
  if (n == 0) throw InputError("semilattice must be nonempty");
  if (table.size() != n * n) throw InputError("join table has wrong shape");
  for (auto v : table) {
    if (v >= n) throw InputError("join table entry " + std::to_string(v) + " out of range");
  }
  JoinSemilattice s;
  s.size_ = n;
  s.labels_ = std::move(labels);
  s.table_ = std::move(table);
  if (auto v = s.validate(); !v) throw InputError("join table is not a semilattice: " + v.description());
  return s;
}

JoinSemilattice JoinSemilattice::from_function(std::size_t size, JoinFn join, LabelFn label) {
  if (size == 0) throw InputError("semilattice must be nonempty");
  JoinSemilattice s;
  s.size_ = size;
  s.join_fn_ = std::move(join);
  s.label_fn_ = std::move(label);
  return s;
}

JoinSemilattice JoinSemilattice::from_lattice(const Lattice& lattice) {
  const auto n = lattice.size();
  JoinSemilattice s;
  s.size_ = n;
  s.labels_ = lattice.labels();
  s.table_.resize(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) s.table_[a * n + b] = lattice.join(a, b);
  }
  return s;
}

std::optional<JoinSemilattice::Index> JoinSemilattice::bottom() const {
  Index candidate = 0;
  for (Index a = 0; a < size_; ++a) {
    if (leq(a, candidate)) candidate = a;
  }
  for (Index a = 0; a < size_; ++a) {
    if (!leq(candidate, a)) return std::nullopt;
  }
  return candidate;
}

std::vector<JoinSemilattice::Index> JoinSemilattice::join_irreducibles() const {
  std::vector<Index> out;
  for (Index x = 0; x < size_; ++x) {
    bool reducible = false;
    for (Index a = 0; a < size_ && !reducible; ++a) {
      if (!less(a, x)) continue;
      for (Index b = a + 1; b < size_ && !reducible; ++b) {
        if (less(b, x) && join(a, b) == x) reducible = true;
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

Verdict JoinSemilattice::validate() const {
  auto lbl = [this](Index i) { return label(i); };
  for (Index a = 0; a < size_; ++a) {
    if (join(a, a) != a) {
      return Verdict::fail("join is not idempotent", {{"element", lbl(a)}});
    }
    for (Index b = 0; b < size_; ++b) {
      const auto ab = join(a, b);
      if (ab >= size_) return Verdict::fail("join out of range", {{"a", lbl(a)}, {"b", lbl(b)}});
      if (ab != join(b, a)) return Verdict::fail("join is not commutative", {{"a", lbl(a)}, {"b", lbl(b)}});
      for (Index c = 0; c < size_; ++c) {
        if (join(ab, c) != join(a, join(b, c))) {
          return Verdict::fail("join is not associative", {{"a", lbl(a)}, {"b", lbl(b)}, {"c", lbl(c)}});
        }
      }
    }
  }
  return Verdict::pass();
}

Lattice JoinSemilattice::to_lattice() const {
  if (!bottom()) throw InputError("semilattice has no least element, so it is not a lattice");
  return Lattice::from_poset(as_poset());
}

FinitePoset JoinSemilattice::as_poset() const {
  std::vector<std::pair<Index, Index>> rel;
  std::vector<std::string> labels;
  for (Index a = 0; a < size_; ++a) {
    labels.push_back(label(a));
    for (Index b = 0; b < size_; ++b) {
      if (a != b && leq(a, b)) rel.emplace_back(a, b);
    }
  }
  return FinitePoset::from_relations(std::move(labels), rel);
}

JoinSemilattice JoinSemilattice::materialized() const {
  if (has_table()) return *this;
  JoinSemilattice s;
  s.size_ = size_;
  s.table_.resize(size_ * size_);
  for (Index a = 0; a < size_; ++a) {
    s.labels_.push_back(label(a));
    for (Index b = 0; b < size_; ++b) s.table_[a * size_ + b] = join(a, b);
  }
  return s;
}

std::optional<std::vector<std::uint32_t>> find_join_isomorphism(const JoinSemilattice& a, const JoinSemilattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  return find_order_isomorphism(a.as_poset(), b.as_poset());
}

}  // namespace convexity
