#include "convexity/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "convexity/closed_set_lattice.hpp"
#include "convexity/dimension.hpp"
#include "convexity/errors.hpp"
#include "convexity/geometry_verify.hpp"
#include "convexity/io.hpp"
#include "convexity/obstructions.hpp"
#include "convexity/orders_gen.hpp"
#include "convexity/relconvex.hpp"

namespace convexity {

using nlohmann::json;

namespace {

struct Options {
  std::optional<std::size_t> bound;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "json";
};

// A loaded input file: exactly one of the three is set.
struct Document {
  json raw;
  std::optional<ClosureSystem> system;
  std::optional<JoinSemilattice> semilattice;
  std::optional<PointConfig> points;
};

class BoundGuard {
 public:
  explicit BoundGuard(std::size_t bound) : previous_(enumeration_bound()) { set_enumeration_bound(bound); }
  ~BoundGuard() { set_enumeration_bound(previous_); }
  BoundGuard(const BoundGuard&) = delete;
  BoundGuard& operator=(const BoundGuard&) = delete;

 private:
  std::size_t previous_;
};

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text.front() == '-') throw InputError(what + ": expected a non-negative integer, got \"" + text + "\"");
  return static_cast<std::size_t>(value);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

json set_labels(const GroundSet& ground, ElementSet s) {
  json arr = json::array();
  for (auto id : s.ids()) arr.push_back(ground.labels()[id]);
  return arr;
}

Document load_document(const std::string& path) {
  Document doc;
  doc.raw = io::read_json_file(path);
  if (doc.raw.is_object() && doc.raw.contains("closed")) {
    doc.system = io::system_from_json(doc.raw);
  } else if (doc.raw.is_object() && doc.raw.contains("join")) {
    doc.semilattice = io::semilattice_from_json(doc.raw);
  } else if (doc.raw.is_object() && doc.raw.contains("points")) {
    doc.points = io::points_from_json(doc.raw);
  } else {
    throw InputError(path + ": not a system, semilattice, or points file");
  }
  return doc;
}

json provenance_of(const Document& doc) {
  return doc.raw.contains("provenance") ? doc.raw.at("provenance") : json::object();
}

ClosureSystem system_of(const Document& doc, const std::string& what) {
  if (doc.system) return *doc.system;
  if (doc.points) return relconvex_system(*doc.points);
  throw InputError(what + " needs a closure system file");
}

Lattice lattice_of(const Document& doc) {
  if (doc.semilattice) return doc.semilattice->to_lattice();
  return enumerate_closed_sets(system_of(doc, "lattice")).lattice();
}

JoinSemilattice semilattice_of(const Document& doc) {
  if (doc.semilattice) return *doc.semilattice;
  return JoinSemilattice::from_lattice(lattice_of(doc));
}

json labels_of(const Lattice& lattice, const std::vector<Lattice::Index>& xs) {
  json arr = json::array();
  for (auto x : xs) arr.push_back(lattice.label(x));
  return arr;
}

// ---- gen ----

json gen_system(const std::string& source, const Options& options) {
  const auto colon = source.find(':');
  if (colon == std::string::npos) throw InputError("gen: source must look like kind:argument, got \"" + source + "\"");
  const auto kind = source.substr(0, colon);
  const auto arg = source.substr(colon + 1);
  json provenance = {{"tool", "convexity_lab"}, {"source", source}};

  if (kind == "points") return io::system_to_json(relconvex_system(io::points_from_json(io::read_json_file(arg))), provenance);
  if (kind == "perm") {
    const auto text = !arg.empty() && arg.front() == '[' ? arg : "[" + arg + "]";
    const auto sigma = io::permutation_from_json(io::parse_json(text, "perm"));
    return io::system_to_json(multichain_system(bichain_from_permutation(sigma)), provenance);
  }
  if (kind == "chain-intervals") return io::system_to_json(interval_system(parse_count(arg, "chain-intervals")), provenance);
  if (kind == "subsemilattices") return io::system_to_json(subsemilattice_system(io::poset_from_json(io::read_json_file(arg))), provenance);
  if (kind == "suborders") return io::system_to_json(suborder_system(io::poset_from_json(io::read_json_file(arg))), provenance);
  if (kind == "multichain") return io::system_to_json(multichain_system(io::multichain_from_json(io::read_json_file(arg))), provenance);
  if (kind == "omega") {
    const auto depth = parse_count(arg, "omega");
    require_within_bound(depth, 8, "omega prefix depth");
    return io::semilattice_to_json(OmegaPrefix(static_cast<std::uint32_t>(depth)).semilattice().materialized(), provenance);
  }
  if (kind == "random-perm") {
    const auto n = parse_count(arg, "random-perm");
    require_within_bound(n, 16, "random-perm");
    std::vector<std::uint32_t> sigma(n);
    for (std::uint32_t i = 0; i < n; ++i) sigma[i] = i;
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = n; i > 1; --i) std::swap(sigma[i - 1], sigma[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
    provenance["seed"] = options.seed;
    provenance["permutation"] = sigma;
    return io::system_to_json(multichain_system(bichain_from_permutation(sigma)), provenance);
  }
  if (kind == "random-points") {
    const auto n = parse_count(arg, "random-points");
    require_within_bound(n, enumeration_bound(), "random-points");
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> coord(0, static_cast<long>(4 * n + 4));
    std::set<std::pair<long, long>> seen;
    std::vector<Point> points;
    while (points.size() < n) {
      const long x = coord(rng), y = coord(rng);
      if (seen.emplace(x, y).second) points.push_back({Rational(x), Rational(y)});
    }
    const PointConfig config(2, std::move(points));
    provenance["seed"] = options.seed;
    provenance["points"] = io::points_to_json(config);
    return io::system_to_json(relconvex_system(config), provenance);
  }
  throw InputError("gen: unknown source kind \"" + kind + "\"");
}

// ---- check ----

std::vector<ElementId> parse_ordering(const GroundSet& ground, const std::string& text) {
  std::vector<ElementId> ordering;
  for (const auto& token : split(text, ',')) {
    if (auto id = ground.index_of(token)) {
      ordering.push_back(*id);
    } else {
      const auto value = parse_count(token, "super-solvable ordering");
      if (value >= ground.size()) throw InputError("super-solvable ordering: element " + token + " out of range");
      ordering.push_back(static_cast<ElementId>(value));
    }
  }
  return ordering;
}

void run_check(const Document& doc, const std::string& which, json& report) {
  auto& verdicts = report["verdicts"];
  auto& results = report["results"];
  if (which == "anti-exchange") {
    verdicts[which] = check_anti_exchange(system_of(doc, which)).to_json();
  } else if (which == "convex-geometry") {
    verdicts[which] = is_convex_geometry(system_of(doc, which)).to_json();
  } else if (which == "characterization") {
    verdicts[which] = check_convexity_characterization(lattice_of(doc)).to_json();
  } else if (which == "distributive") {
    verdicts[which] = is_distributive(lattice_of(doc)).to_json();
  } else if (which == "modular") {
    verdicts[which] = is_modular(lattice_of(doc)).to_json();
  } else if (which == "super-solvable" || which.rfind("super-solvable:", 0) == 0) {
    const auto system = system_of(doc, "super-solvable");
    const auto& labels = system.ground().labels();
    if (which.size() > std::string("super-solvable").size()) {
      const auto ordering = parse_ordering(system.ground(), which.substr(which.find(':') + 1));
      verdicts[which] = check_super_solvable(system, ordering).to_json();
    } else if (auto ordering = find_super_solvable_order(system)) {
      json names = json::array();
      for (auto id : *ordering) names.push_back(labels[id]);
      results["ordering"] = names;
      verdicts[which] = check_super_solvable(system, *ordering).to_json();
    } else {
      verdicts[which] = Verdict::fail("no ordering of the ground set is super solvable", json::object()).to_json();
    }
  } else {
    throw InputError("check: unknown property \"" + which + "\"");
  }
}

// ---- analyze ----

void analyze_irreducibles(const Document& doc, json& results) {
  if (doc.semilattice && !doc.semilattice->bottom()) {
    json ji = json::array();
    for (auto j : doc.semilattice->join_irreducibles()) ji.push_back(doc.semilattice->label(j));
    results["join_irreducibles"] = ji;
    results["join_irreducible_count"] = ji.size();
    return;
  }
  const auto lattice = lattice_of(doc);
  const auto ji = lattice.join_irreducibles();
  const auto mi = lattice.meet_irreducibles();
  results["join_irreducibles"] = labels_of(lattice, ji);
  results["join_irreducible_count"] = ji.size();
  results["meet_irreducibles"] = labels_of(lattice, mi);
  results["meet_irreducible_count"] = mi.size();
}

void analyze_independent(const Document& doc, json& results) {
  if (doc.points) {
    const auto r = max_convexly_independent(*doc.points);
    json names = json::array();
    for (auto id : r.witness.ids()) names.push_back(doc.points->labels()[id]);
    results["independent"] = r.size;
    results["witness"] = names;
    return;
  }
  const auto system = system_of(doc, "independent");
  const auto r = independent_sets(system);
  results["independent"] = r.size;
  results["witness"] = set_labels(system.ground(), r.witness);
}

void analyze_dimension(const Document& doc, json& results) {
  const auto lattice = lattice_of(doc);
  const auto dim = join_dimension(lattice);
  results["join_dimension"] = dim.value;
  results["meet_irreducibles"] = labels_of(lattice, dim.meet_irreducibles);
  json chains = json::array();
  for (const auto& chain : dim.cover.cover.chains) chains.push_back(labels_of(lattice, chain));
  results["chains"] = chains;
  results["antichain"] = labels_of(lattice, dim.cover.antichain);
  const auto embedding = embed_via_chain_covers(lattice, dim.cover.cover);
  json coords = json::array();
  for (Lattice::Index x = 0; x < lattice.size(); ++x) {
    coords.push_back({{"element", lattice.label(x)}, {"coordinates", embedding.coordinates[x]}});
  }
  results["embedding"] = coords;
}

void analyze_obstruction(const Document& doc, const std::string& spec, json& results) {
  std::optional<std::size_t> max_boolean;
  std::optional<std::size_t> max_omega;
  for (const auto& part : split(spec, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("obstruction: expected key=value, got \"" + part + "\"");
    const auto key = part.substr(0, eq);
    const auto value = parse_count(part.substr(eq + 1), "obstruction " + key);
    if (key == "boolean") {
      max_boolean = value;
    } else if (key == "omega") {
      max_omega = value;
    } else {
      throw InputError("obstruction: unknown pattern \"" + key + "\"");
    }
  }
  if (!max_boolean && !max_omega) throw InputError("obstruction: give boolean=n and/or omega=N");
  if (max_omega) require_within_bound(*max_omega, 3, "obstruction omega depth");
  const auto host = semilattice_of(doc);
  const auto report = obstruction_report(host, max_boolean.value_or(0), static_cast<std::uint32_t>(max_omega.value_or(0)));
  json entries = json::array();
  for (const auto& e : report.entries) {
    if (e.kind == PatternKind::omega_prefix && !max_omega) continue;
    json entry = {{"pattern", to_string(e.kind)}, {"parameter", e.parameter}, {"embeds", e.embeds}, {"inferred", e.inferred}};
    if (e.map) {
      json image = json::array();
      for (auto h : e.map->image) image.push_back(host.label(h));
      entry["map"] = image;
    }
    entries.push_back(std::move(entry));
  }
  results["obstructions"] = entries;
}

void run_analyze(const Document& doc, const std::string& which, json& report) {
  auto& results = report["results"];
  if (which == "irreducibles") {
    analyze_irreducibles(doc, results);
  } else if (which == "independent") {
    analyze_independent(doc, results);
  } else if (which == "dimension") {
    analyze_dimension(doc, results);
  } else if (which.rfind("obstruction:", 0) == 0) {
    analyze_obstruction(doc, which.substr(std::string("obstruction:").size()), results);
  } else if (which == "duality") {
    const auto lattice = lattice_of(doc);
    const auto duality = verify_duality(lattice);
    results["join_dimension"] = duality.join_dimension;
    results["min_cover_over_meet_dense"] = duality.min_cover_over_meet_dense;
    results["optimal_meet_dense"] = labels_of(lattice, duality.optimal_meet_dense);
    report["verdicts"]["duality"] = duality.verdict.to_json();
  } else {
    throw InputError("analyze: unknown analysis \"" + which + "\"");
  }
}

// ---- output ----

void render_text(const json& report, std::ostream& out) {
  out << "command:";
  for (const auto& a : report.at("command")) out << ' ' << a.get<std::string>();
  out << '\n';
  for (const auto& [name, verdict] : report.at("verdicts").items()) {
    out << name << ": " << (verdict.at("holds").get<bool>() ? "PASS" : "FAIL");
    if (verdict.contains("description")) out << " (" << verdict.at("description").get<std::string>() << ")";
    out << '\n';
    if (verdict.contains("witness")) out << "  witness: " << verdict.at("witness").dump() << '\n';
  }
  for (const auto& [name, value] : report.at("results").items()) out << name << ": " << value.dump() << '\n';
  out << "exit_code: " << report.at("exit_code").get<int>() << '\n';
}

void emit(const std::string& text, const Options& options, std::ostream& out) {
  if (options.output.empty()) {
    out << text;
  } else {
    io::write_text_file(options.output, text);
  }
}

std::size_t default_bound() {
  if (const char* env = std::getenv("CONVEXITY_LAB_BOUND"); env != nullptr && *env != '\0') {
    return parse_count(env, "CONVEXITY_LAB_BOUND");
  }
  return enumeration_bound();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Construct, verify, and analyze finite closure systems and convex geometries.", "convexity_lab"};
  app.require_subcommand(1);
  app.add_option("--bound", options.bound, "Enumeration cap on ground-set size");
  app.add_option("--seed", options.seed, "Seed for random generators");
  app.add_option("--output", options.output, "Write output to this file instead of stdout");
  app.add_option("--format", options.format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string source, file, which, export_format;
  auto* gen = app.add_subcommand("gen", "Generate a closure system (or semilattice) as JSON")->fallthrough();
  gen->add_option("source", source,
                  "points:<file> | perm:<images> | chain-intervals:<n> | subsemilattices:<poset-file> | "
                  "suborders:<poset-file> | multichain:<file> | omega:<N> | random-perm:<n> | random-points:<n>")
      ->required();
  auto* check = app.add_subcommand("check", "Check a property of a system")->fallthrough();
  check->add_option("file", file)->required();
  check->add_option("property", which,
                    "anti-exchange | convex-geometry | characterization | super-solvable[:ordering] | distributive | modular")
      ->required();
  auto* analyze = app.add_subcommand("analyze", "Compute invariants of a system or semilattice")->fallthrough();
  analyze->add_option("file", file)->required();
  analyze->add_option("analysis", which, "irreducibles | independent | dimension | obstruction:boolean=n,omega=N | duality")
      ->required();
  auto* exp = app.add_subcommand("export", "Export the lattice of closed sets")->fallthrough();
  exp->add_option("file", file)->required();
  exp->add_option("format", export_format)->required()->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    BoundGuard guard(options.bound ? *options.bound : default_bound());
    if (gen->parsed()) {
      emit(gen_system(source, options).dump(2) + "\n", options, out);
      return kExitPass;
    }
    const auto doc = load_document(file);
    if (exp->parsed()) {
      if (doc.semilattice) {
        emit(export_format == "dot" ? io::semilattice_to_dot(*doc.semilattice)
                                    : io::semilattice_to_json(*doc.semilattice, provenance_of(doc)).dump(2) + "\n",
             options, out);
      } else {
        const auto lattice = enumerate_closed_sets(system_of(doc, "export"));
        emit(export_format == "dot" ? io::lattice_to_dot(lattice) : io::lattice_to_json(lattice, provenance_of(doc)).dump(2) + "\n",
             options, out);
      }
      return kExitPass;
    }
    json report;
    report["command"] = args;
    report["verdicts"] = json::object();
    report["results"] = json::object();
    if (check->parsed()) {
      run_check(doc, which, report);
    } else {
      run_analyze(doc, which, report);
    }
    bool all_hold = true;
    for (const auto& [name, verdict] : report["verdicts"].items()) all_hold = all_hold && verdict.at("holds").get<bool>();
    const int code = all_hold ? kExitPass : kExitCheckFailed;
    report["exit_code"] = code;
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - started;
    report["timing"] = {{"elapsed_ms", elapsed.count()}};
    if (options.format == "text") {
      std::ostringstream text;
      render_text(report, text);
      emit(text.str(), options, out);
    } else {
      emit(report.dump(2) + "\n", options, out);
    }
    return code;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacityError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace convexity
