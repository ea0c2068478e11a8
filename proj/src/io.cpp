#include "convexity/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "convexity/errors.hpp"

namespace convexity::io {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string(what) + ": missing \"" + key + "\"");
  return doc.at(key);
}

const json& array_field(const json& doc, const char* key, const char* what) {
  const auto& v = field(doc, key, what);
  if (!v.is_array()) throw InputError(std::string(what) + ": \"" + key + "\" must be an array");
  return v;
}

std::vector<std::string> labels_of(const json& arr, const char* what) {
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      out.push_back(std::to_string(v.get<long long>()));
    } else {
      throw InputError(std::string(what) + ": labels must be strings");
    }
  }
  return out;
}

std::uint32_t index_of(const json& v, std::size_t n, const std::vector<std::string>& labels, const char* what) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
    const auto i = v.get<std::uint64_t>();
    if (i >= n) throw InputError(std::string(what) + ": index " + std::to_string(i) + " out of range");
    return static_cast<std::uint32_t>(i);
  }
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == name) return static_cast<std::uint32_t>(i);
    }
    throw InputError(std::string(what) + ": unknown element \"" + name + "\"");
  }
  throw InputError(std::string(what) + ": expected an index, got " + v.dump());
}

json set_ids(ElementSet s) {
  json arr = json::array();
  for (auto id : s.ids()) arr.push_back(id);
  return arr;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offsets are converted to line/column for the message.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

json system_to_json(const ClosureSystem& system, const json& provenance) {
  json doc;
  doc["ground"] = system.ground().labels();
  json closed = json::array();
  for (auto s : closed_sets(system)) closed.push_back(set_ids(s));
  doc["closed"] = std::move(closed);
  doc["provenance"] = provenance;
  return doc;
}

ClosureSystem system_from_json(const json& doc) {
  auto labels = labels_of(array_field(doc, "ground", "system"), "system");
  if (labels.empty() || labels.size() > ElementSet::kMaxElements) {
    throw InputError("system: ground set must have 1.." + std::to_string(ElementSet::kMaxElements) + " elements");
  }
  std::vector<ElementSet> family;
  for (const auto& set : array_field(doc, "closed", "system")) {
    if (!set.is_array()) throw InputError("system: each closed set must be an array");
    ElementSet s;
    for (const auto& v : set) s = s.with(index_of(v, labels.size(), labels, "system"));
    family.push_back(s);
  }
  return ClosureSystem::extensional(GroundSet(std::move(labels)), std::move(family));
}

json semilattice_to_json(const JoinSemilattice& semilattice, const json& provenance) {
  const auto n = semilattice.size();
  json doc;
  json elements = json::array();
  json table = json::array();
  for (JoinSemilattice::Index a = 0; a < n; ++a) {
    elements.push_back(semilattice.label(a));
    json row = json::array();
    for (JoinSemilattice::Index b = 0; b < n; ++b) row.push_back(semilattice.join(a, b));
    table.push_back(std::move(row));
  }
  doc["elements"] = std::move(elements);
  doc["join"] = std::move(table);
  doc["provenance"] = provenance;
  return doc;
}

JoinSemilattice semilattice_from_json(const json& doc) {
  auto labels = labels_of(array_field(doc, "elements", "semilattice"), "semilattice");
  const auto& rows = array_field(doc, "join", "semilattice");
  const auto n = labels.size();
  if (rows.size() != n) throw InputError("semilattice: join table must have one row per element");
  std::vector<JoinSemilattice::Index> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw InputError("semilattice: join table rows must have length " + std::to_string(n));
    for (const auto& v : row) table.push_back(index_of(v, n, labels, "semilattice"));
  }
  return JoinSemilattice::from_table(std::move(labels), std::move(table));
}

json points_to_json(const PointConfig& config) {
  json doc;
  doc["dim"] = config.dim();
  json points = json::array();
  for (std::size_t i = 0; i < config.size(); ++i) {
    json coords = json::array();
    for (const auto& c : config.point(i)) coords.push_back(c.to_string());
    points.push_back({{"label", config.labels()[i]}, {"coords", std::move(coords)}});
  }
  doc["points"] = std::move(points);
  return doc;
}

PointConfig points_from_json(const json& doc) {
  const auto& dim_field = field(doc, "dim", "points");
  if (!dim_field.is_number_unsigned() && !(dim_field.is_number_integer() && dim_field.get<long long>() > 0)) {
    throw InputError("points: \"dim\" must be a positive integer");
  }
  const auto dim = dim_field.get<std::size_t>();
  std::vector<Point> points;
  std::vector<std::string> labels;
  for (const auto& entry : array_field(doc, "points", "points")) {
    const auto& coords = array_field(entry, "coords", "points");
    Point p;
    for (const auto& c : coords) {
      if (c.is_string()) {
        p.push_back(Rational::parse(c.get<std::string>()));
      } else if (c.is_number_integer()) {
        p.push_back(Rational(static_cast<long>(c.get<long long>())));
      } else {
        throw InputError("points: coordinates must be \"p/q\" strings, got " + c.dump());
      }
    }
    points.push_back(std::move(p));
    if (entry.contains("label")) {
      labels.push_back(labels_of(json::array({entry.at("label")}), "points").front());
    } else {
      labels.push_back("p" + std::to_string(labels.size()));
    }
  }
  return PointConfig(dim, std::move(points), std::move(labels));
}

FinitePoset poset_from_json(const json& doc) {
  auto labels = labels_of(array_field(doc, "elements", "poset"), "poset");
  std::vector<std::pair<FinitePoset::Index, FinitePoset::Index>> relations;
  if (doc.contains("covers")) {
    for (const auto& pair : array_field(doc, "covers", "poset")) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("poset: each cover must be a pair");
      relations.emplace_back(index_of(pair[0], labels.size(), labels, "poset"), index_of(pair[1], labels.size(), labels, "poset"));
    }
  }
  return FinitePoset::from_relations(std::move(labels), relations);
}

json poset_to_json(const FinitePoset& poset) {
  json covers = json::array();
  for (auto [a, b] : poset.hasse()) covers.push_back({a, b});
  return {{"elements", poset.labels()}, {"covers", std::move(covers)}};
}

std::vector<std::uint32_t> permutation_from_json(const json& doc) {
  if (!doc.is_array()) throw InputError("permutation: expected a JSON array of images");
  std::vector<std::uint32_t> sigma;
  for (const auto& v : doc) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("permutation: images must be non-negative integers");
    sigma.push_back(v.get<std::uint32_t>());
  }
  return sigma;
}

Multichain multichain_from_json(const json& doc) {
  auto labels = labels_of(array_field(doc, "elements", "multichain"), "multichain");
  const auto n = labels.size();
  std::vector<std::vector<std::uint32_t>> ranks;
  for (const auto& order : array_field(doc, "orders", "multichain")) {
    if (!order.is_array() || order.size() != n) {
      throw InputError("multichain: each order must list all " + std::to_string(n) + " elements");
    }
    std::vector<std::uint32_t> rank(n, static_cast<std::uint32_t>(n));
    for (std::size_t pos = 0; pos < n; ++pos) {
      const auto id = index_of(order[pos], n, labels, "multichain");
      if (rank[id] != n) throw InputError("multichain: element " + labels[id] + " repeated in an order");
      rank[id] = static_cast<std::uint32_t>(pos);
    }
    ranks.push_back(std::move(rank));
  }
  if (ranks.empty()) throw InputError("multichain: at least one order is required");
  return Multichain(GroundSet(std::move(labels)), std::move(ranks));
}

json lattice_to_json(const ClosedSetLattice& lattice, const json& provenance) {
  json doc;
  doc["ground"] = lattice.ground().labels();
  json closed = json::array();
  json covers = json::array();
  for (ClosedSetLattice::Index i = 0; i < lattice.size(); ++i) {
    closed.push_back(set_ids(lattice.set(i)));
    for (auto j : lattice.upper_covers(i)) covers.push_back({i, j});
  }
  doc["closed"] = std::move(closed);
  doc["covers"] = std::move(covers);
  doc["provenance"] = provenance;
  return doc;
}

std::string lattice_to_dot(const ClosedSetLattice& lattice) {
  std::ostringstream out;
  out << "digraph closed_sets {\n  rankdir=BT;\n  node [shape=box];\n";
  for (ClosedSetLattice::Index i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(lattice.ground().format(lattice.set(i))) << "\"];\n";
  }
  for (ClosedSetLattice::Index i = 0; i < lattice.size(); ++i) {
    for (auto j : lattice.upper_covers(i)) out << "  n" << i << " -> n" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string semilattice_to_dot(const JoinSemilattice& semilattice) {
  const auto poset = semilattice.as_poset();
  std::ostringstream out;
  out << "digraph semilattice {\n  rankdir=BT;\n";
  for (FinitePoset::Index i = 0; i < poset.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(poset.label(i)) << "\"];\n";
  }
  for (auto [a, b] : poset.hasse()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace convexity::io
