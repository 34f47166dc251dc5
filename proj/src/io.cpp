#include "oml/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oml/catalog.hpp"
#include "oml/errors.hpp"
#include "oml/quantale.hpp"

namespace oml {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

const json& require(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw MalformedInput(std::string("missing field \"") + field + "\"");
  return *it;
}

// Element index in [0, n); n == 0 skips the range check.
Element index_value(const json& v, const std::string& where, std::size_t n) {
  if (!v.is_number_integer()) throw MalformedInput(where + ": expected an integer");
  const auto raw = v.get<std::int64_t>();
  if (raw < 0 || (n != 0 && static_cast<std::uint64_t>(raw) >= n)) {
    throw IndexOutOfRange(where + ": index " + std::to_string(raw) + " outside [0, " +
                          std::to_string(n) + ")");
  }
  return static_cast<Element>(raw);
}

std::vector<Element> index_array(const json& v, const std::string& where, std::size_t n) {
  if (!v.is_array()) throw MalformedInput(where + ": expected an array");
  std::vector<Element> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(index_value(v[i], where + "[" + std::to_string(i) + "]", n));
  }
  return out;
}

json element_list(const ElementSet& s) {
  json out = json::array();
  for_each_member(s, [&](Element e) { out.push_back(e); });
  return out;
}

json label_list(const OmlTable& l, const ElementSet& s) {
  json out = json::array();
  for_each_member(s, [&](Element e) { out.push_back(l.label(e)); });
  return out;
}

json endo_json(const OmlTable& l, const Endomap& j) {
  ElementSet fixed(l.size());
  for (Element a = 0; a < l.size(); ++a) {
    if (j(a) == a) fixed.set(a);
  }
  return {{"image", j.image}, {"fixed_points", element_list(fixed)}};
}

std::string witness_text(const OmlTable* l, const std::vector<Element>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    os << (i ? ", " : "") << w[i];
    if (l && w[i] < l->size()) os << ':' << l->label(w[i]);
  }
  os << ')';
  return os.str();
}

void write_text_report(std::ostream& out, const OmlTable* l, const ValidationReport& r) {
  if (r.passed()) {
    out << "all axioms hold\n";
    return;
  }
  for (const auto& v : r.violations) out << "violated " << v.axiom_id << " at " << witness_text(l, v.witnesses) << '\n';
}

void write_text_set(std::ostream& out, const OmlTable& l, const ElementSet& s) {
  out << '{';
  bool first = true;
  for_each_member(s, [&](Element e) {
    out << (first ? "" : ", ") << l.label(e);
    first = false;
  });
  out << "}\n";
}

json base_report(const CliConfig& config, const std::string& lattice_name) {
  return {{"command", command_name(config.command)}, {"lattice", lattice_name}, {"version", kVersion}};
}

const char* error_kind(const LatticeError& e) {
  if (dynamic_cast<const NotAPoset*>(&e)) return "NotAPoset";
  if (dynamic_cast<const NotALattice*>(&e)) return "NotALattice";
  if (dynamic_cast<const NotOrtholattice*>(&e)) return "NotOrtholattice";
  if (dynamic_cast<const NotOrthomodular*>(&e)) return "NotOrthomodular";
  if (dynamic_cast<const SizeLimitExceeded*>(&e)) return "SizeLimitExceeded";
  if (dynamic_cast<const PreconditionViolated*>(&e)) return "PreconditionViolated";
  if (dynamic_cast<const NotCentralSubalgebra*>(&e)) return "NotCentralSubalgebra";
  if (dynamic_cast<const IoError*>(&e)) return "IoError";
  if (dynamic_cast<const IndexOutOfRange*>(&e)) return "IndexOutOfRange";
  return "MalformedInput";
}

std::string lattice_source(const CliConfig& config) {
  if (!config.seed_catalog.empty()) return config.seed_catalog;
  return config.input_path.string();
}

LatticeSpec load_spec(const CliConfig& config) {
  if (!config.seed_catalog.empty()) return to_spec(catalog_lattice(config.seed_catalog));
  if (config.input_path.empty()) throw MalformedInput("no input: pass --input <file> or --seed-catalog <name>");
  return parse_lattice_file(config.input_path);
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw MalformedInput(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::uint64_t parse_positive(const std::string& text, const std::string& what) {
  const auto value = parse_unsigned(text, what);
  if (value == 0) throw MalformedInput(what + ": must be positive");
  return value;
}

struct Outcome {
  json report;
  bool passed = true;
  std::string text;
};

Outcome run_validate(const CliConfig& config) {
  const LatticeSpec spec = load_spec(config);
  Outcome o;
  o.report = base_report(config, spec.name);
  ValidationReport r;
  try {
    r = validate_oml(derive_tables(spec));
  } catch (const NotAPoset& e) {
    r.violations.push_back({"poset", e.witnesses()});
  } catch (const NotALattice& e) {
    r.violations.push_back({"lattice", e.witnesses()});
  }
  o.passed = r.passed();
  o.report["validation"] = to_json(r);
  std::ostringstream text;
  text << "lattice " << spec.name << " (" << spec.n << " elements)\n";
  write_text_report(text, nullptr, r);
  o.text = text.str();
  return o;
}

Outcome run_on_table(const CliConfig& config, const OmlTable& l) {
  Outcome o;
  o.report = base_report(config, l.name());
  std::ostringstream text;
  text << "lattice " << l.name() << " (" << l.size() << " elements)\n";

  switch (config.command) {
    case Command::Center: {
      const Sublattice z = center(l);
      o.report["center"] = to_json(l, z);
      o.passed = z.flags.central_boolean_subalgebra();
      text << "center (" << z.size() << " elements): ";
      write_text_set(text, l, z.members);
      break;
    }
    case Command::Cover: {
      if (config.args.size() != 1) throw MalformedInput("cover takes exactly one element index");
      const auto raw = parse_unsigned(config.args[0], "element");
      if (raw >= l.size()) {
        throw IndexOutOfRange("element " + std::to_string(raw) + " outside [0, " + std::to_string(l.size()) + ")");
      }
      const auto a = static_cast<Element>(raw);
      const Element e = central_cover(l, a);
      o.report["element"] = a;
      o.report["cover"] = e;
      o.report["cover_label"] = l.label(e);
      text << "central cover of " << l.label(a) << " is " << l.label(e) << '\n';
      break;
    }
    case Command::CheckBvb: {
      if (config.args.size() != 1) throw MalformedInput("check-bvb takes exactly one endomap file");
      const Endomap j = parse_endomap_file(config.args[0]);
      if (j.size() != l.size()) {
        throw MalformedInput("image: expected " + std::to_string(l.size()) + " entries, got " +
                             std::to_string(j.size()));
      }
      for (Element a = 0; a < j.size(); ++a) {
        if (j(a) >= l.size()) throw IndexOutOfRange("image[" + std::to_string(a) + "] outside lattice");
      }
      const ValidationReport r = check_bvb(l, j);
      o.passed = r.passed();
      o.report["bvb"] = to_json(r);
      if (r.passed()) {
        o.report["quantale"] = to_json(check_quantale_axioms(l, quantale_from_endo(l, j)));
        o.report["fixed_points"] = to_json(l, fixed_points(l, j));
      }
      write_text_report(text, &l, r);
      break;
    }
    case Command::EnumerateSubalgebras: {
      const auto subs = enumerate_central_boolean_subalgebras(l, config.size_limits);
      json list = json::array();
      for (const auto& s : subs) list.push_back(to_json(l, s));
      o.report["count"] = subs.size();
      o.report["subalgebras"] = std::move(list);
      text << subs.size() << " central boolean subalgebras\n";
      for (const auto& s : subs) write_text_set(text, l, s.members);
      break;
    }
    case Command::EnumerateBvb: {
      const auto endos = enumerate_bvb_endos(l, config.size_limits);
      json list = json::array();
      for (const auto& j : endos) list.push_back(endo_json(l, j));
      o.report["count"] = endos.size();
      o.report["endos"] = std::move(list);
      text << endos.size() << " B.-V.B. endomorphisms\n";
      for (const auto& j : endos) {
        for (Element a = 0; a < j.size(); ++a) text << (a ? " " : "") << j(a);
        text << '\n';
      }
      break;
    }
    case Command::VerifyCorrespondence: {
      const CorrespondenceReport r = verify_correspondence(l, config.size_limits);
      o.passed = r.passed;
      o.report["correspondence"] = to_json(l, r);
      text << "central boolean subalgebras: " << r.subalgebras.size() << '\n'
           << "B.-V.B. endomorphisms:       " << r.endos.size() << '\n'
           << "bijection " << (r.passed ? "verified" : "FAILED") << '\n';
      break;
    }
    case Command::Validate:
    case Command::Catalog:
      break;
  }
  o.report["passed"] = o.passed;
  o.text = text.str();
  return o;
}

}  // namespace

LatticeSpec parse_lattice_json(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw MalformedInput("lattice file must be a JSON object");

  LatticeSpec spec;
  spec.name = "unnamed";
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw MalformedInput("name: expected a string");
    spec.name = it->get<std::string>();
  }
  const json& n = require(doc, "n");
  if (!n.is_number_integer() || n.get<std::int64_t>() <= 0) throw MalformedInput("n: expected a positive integer");
  spec.n = n.get<std::size_t>();
  if (spec.n > kMaxElements) {
    throw SizeLimitExceeded("n = " + std::to_string(spec.n) + " exceeds " + std::to_string(kMaxElements));
  }

  const bool has_covers = doc.contains("covers");
  const bool has_leq = doc.contains("leq");
  if (has_covers == has_leq) throw MalformedInput("exactly one of \"covers\" / \"leq\" must be present");

  if (has_covers) {
    const json& covers = doc["covers"];
    if (!covers.is_array()) throw MalformedInput("covers: expected an array of pairs");
    spec.covers.emplace();
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const std::string where = "covers[" + std::to_string(i) + "]";
      if (!covers[i].is_array() || covers[i].size() != 2) throw MalformedInput(where + ": expected [lower, upper]");
      spec.covers->emplace_back(index_value(covers[i][0], where, spec.n), index_value(covers[i][1], where, spec.n));
    }
  } else {
    const json& leq = doc["leq"];
    if (!leq.is_array() || leq.size() != spec.n) {
      throw MalformedInput("leq: expected " + std::to_string(spec.n) + " rows");
    }
    std::vector<std::vector<bool>> rows(spec.n, std::vector<bool>(spec.n));
    for (std::size_t a = 0; a < spec.n; ++a) {
      const std::string where = "leq[" + std::to_string(a) + "]";
      if (!leq[a].is_array() || leq[a].size() != spec.n) {
        throw MalformedInput(where + ": expected " + std::to_string(spec.n) + " entries");
      }
      for (std::size_t b = 0; b < spec.n; ++b) {
        const json& v = leq[a][b];
        if (v.is_boolean()) {
          rows[a][b] = v.get<bool>();
        } else if (v.is_number_integer() && (v.get<std::int64_t>() == 0 || v.get<std::int64_t>() == 1)) {
          rows[a][b] = v.get<std::int64_t>() == 1;
        } else {
          throw MalformedInput(where + "[" + std::to_string(b) + "]: expected 0 or 1");
        }
      }
    }
    spec.leq = std::move(rows);
  }

  const json& ortho = require(doc, "ortho");
  if (!ortho.is_array() || ortho.size() != spec.n) {
    throw MalformedInput("ortho: expected an array of " + std::to_string(spec.n) + " indices");
  }
  spec.ortho = index_array(ortho, "ortho", spec.n);

  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != spec.n) {
      throw MalformedInput("labels: expected an array of " + std::to_string(spec.n) + " strings");
    }
    for (const auto& v : *it) {
      if (!v.is_string()) throw MalformedInput("labels: expected strings");
      spec.labels.push_back(v.get<std::string>());
    }
  }
  return spec;
}

LatticeSpec parse_lattice_file(const std::filesystem::path& path) {
  try {
    return parse_lattice_json(read_file(path));
  } catch (const MalformedInput& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

Endomap parse_endomap_json(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw MalformedInput("endomap file must be a JSON object");
  Endomap j;
  j.image = index_array(require(doc, "image"), "image", 0);
  return j;
}

Endomap parse_endomap_file(const std::filesystem::path& path) { return parse_endomap_json(read_file(path)); }

json lattice_to_json(const OmlTable& l) {
  const std::size_t n = l.size();
  json covers = json::array();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || !l.leq(a, b)) continue;
      // b covers a iff nothing lies strictly between them.
      const auto between = l.up_set(a) & l.down_set(b);
      if (between.count() == 2) covers.push_back({a, b});
    }
  }
  json ortho = json::array();
  for (Element a = 0; a < n; ++a) ortho.push_back(l.ortho(a));
  return {{"name", l.name()}, {"n", n}, {"covers", std::move(covers)}, {"ortho", std::move(ortho)},
          {"labels", l.labels()}};
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"axiom_id", v.axiom_id}, {"witnesses", v.witnesses}});
  return {{"passed", report.passed()}, {"violations", std::move(violations)}};
}

json to_json(const OmlTable& l, const Sublattice& s) {
  const ClosureFlags& f = s.flags;
  return {{"members", element_list(s.members)},
          {"labels", label_list(l, s.members)},
          {"flags",
           {{"contains_bounds", f.contains_bounds},
            {"meet_closed", f.meet_closed},
            {"join_closed", f.join_closed},
            {"complement_closed", f.complement_closed},
            {"distributive", f.distributive},
            {"within_center", f.within_center}}}};
}

json to_json(const OmlTable& l, const CorrespondenceReport& r) {
  json subs = json::array();
  for (const auto& s : r.subalgebras) subs.push_back(to_json(l, s));
  json endos = json::array();
  for (const auto& j : r.endos) endos.push_back(endo_json(l, j));
  return {{"subalgebra_count", r.subalgebras.size()},
          {"endo_count", r.endos.size()},
          {"subalgebras", std::move(subs)},
          {"endos", std::move(endos)},
          {"forward_roundtrips", r.forward_roundtrips},
          {"backward_roundtrips", r.backward_roundtrips},
          {"counts_equal", r.counts_equal},
          {"passed", r.passed}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Command parse_command(const std::string& name) {
  static const std::pair<const char*, Command> names[] = {
      {"validate", Command::Validate},
      {"center", Command::Center},
      {"cover", Command::Cover},
      {"check-bvb", Command::CheckBvb},
      {"enumerate-subalgebras", Command::EnumerateSubalgebras},
      {"enumerate-bvb", Command::EnumerateBvb},
      {"verify-correspondence", Command::VerifyCorrespondence},
      {"catalog", Command::Catalog},
  };
  for (const auto& [text, cmd] : names) {
    if (name == text) return cmd;
  }
  throw MalformedInput("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Center: return "center";
    case Command::Cover: return "cover";
    case Command::CheckBvb: return "check-bvb";
    case Command::EnumerateSubalgebras: return "enumerate-subalgebras";
    case Command::EnumerateBvb: return "enumerate-bvb";
    case Command::VerifyCorrespondence: return "verify-correspondence";
    case Command::Catalog: return "catalog";
  }
  return "unknown";
}

SizeLimits limits_from_env(SizeLimits base) {
  if (const char* v = std::getenv("OMLQ_MAX_N")) base.moore_scan_max_n = parse_positive(v, "OMLQ_MAX_N");
  if (const char* v = std::getenv("OMLQ_MAX_CENTER_SUBSETS")) {
    base.center_scan_max_subsets = parse_positive(v, "OMLQ_MAX_CENTER_SUBSETS");
  }
  return base;
}

int run_command(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const bool as_json = config.output_format == OutputFormat::Json;
  try {
    if (config.command == Command::Catalog) {
      std::string name;
      for (const auto& a : config.args) name += a;
      if (name.empty()) throw MalformedInput("catalog needs a lattice name, e.g. `catalog MO 2`");
      const OmlTable l = catalog_lattice(name);
      if (as_json) {
        out << dump(lattice_to_json(l));
      } else {
        out << "lattice " << l.name() << " (" << l.size() << " elements)\n";
        for (Element a = 0; a < l.size(); ++a) {
          out << a << ' ' << l.label(a) << "  ortho " << l.ortho(a) << '\n';
        }
      }
      return kExitPassed;
    }

    Outcome o;
    if (config.command == Command::Validate) {
      o = run_validate(config);
      o.report["passed"] = o.passed;
    } else {
      o = run_on_table(config, build_lattice(load_spec(config)));
    }
    if (as_json) {
      out << dump(o.report);
    } else {
      out << o.text << (o.passed ? "PASSED" : "FAILED") << '\n';
    }
    return o.passed ? kExitPassed : kExitCheckFailed;
  } catch (const LatticeError& e) {
    err << "omlq: " << e.what() << '\n';
    if (as_json) {
      json report = base_report(config, lattice_source(config));
      report["passed"] = false;
      report["error"] = {{"kind", error_kind(e)}, {"message", e.what()}, {"witnesses", e.witnesses()}};
      out << dump(report);
    }
    return kExitInputError;
  }
}

}  // namespace oml
