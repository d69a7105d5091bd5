// Copyright 2026 The skewroot authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewroot/cli.hpp"

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "skewroot/errors.hpp"
#include "skewroot/families.hpp"
#include "skewroot/galgebra.hpp"

namespace skw::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> fields(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string f;
  while (is >> f) out.push_back(f);
  return out;
}

long long to_llong(const std::string& s) {
  try {
    std::size_t idx = 0;
    const long long v = std::stoll(s, &idx);
    if (idx != s.size()) throw ParseError("trailing characters in number: '" + s + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'");
  }
}

long to_long(const std::string& s) { return static_cast<long>(to_llong(s)); }

std::vector<long> to_longs(const std::string& s) {
  std::vector<long> out;
  for (const std::string& f : fields(s)) out.push_back(to_long(f));
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

const std::set<std::string> kAnalyses = {"validate",      "build",   "killing",
                                         "trace",         "centroid", "graded-simple",
                                         "homsemi",       "reduce",  "identify"};

// The system a job talks about, with the cocycle its theorems expect.
struct Resolved {
  SkewRootSystem system;
  Cocycle xi;
  std::optional<std::string> family;
};

Resolved resolve_system(const JobConfig& cfg) {
  if (cfg.family && cfg.have_roots)
    throw ParseError("config names both a family and explicit roots");
  if (cfg.family) {
    FamilySystem fs = family_by_name(*cfg.family);
    return Resolved{std::move(fs.system), std::move(fs.xi), cfg.family};
  }
  if (!cfg.have_roots) throw ParseError("job needs an explicit root system or a family");
  if (!cfg.kind) throw ParseError("[rootsystem] needs kind = lie|jordan");
  if (cfg.orders.empty()) throw ParseError("[group] orders required");
  const FinAbGroup g(cfg.orders);
  Bicharacter beta = Bicharacter::from_lower_triangle(g, cfg.n, cfg.lower);
  std::vector<GroupElem> roots;
  roots.reserve(cfg.roots.size());
  for (const std::vector<long>& r : cfg.roots) roots.push_back(g.elem(r));
  SkewRootSystem s = SkewRootSystem::checked(*cfg.kind, beta, std::move(roots), cfg.budget);
  Cocycle xi = standard_cocycle(s.beta());
  return Resolved{std::move(s), std::move(xi), std::nullopt};
}

void side_summary(std::ostream& os, const char* label, const FamilySystem& fs,
                  long long budget) {
  const SkewRootSystem& s = fs.system;
  const IndecomposabilityReport ind = is_indecomposable(s);
  os << label << ": group = " << s.group().to_string() << ", n = " << s.beta().n()
     << ", |R| = " << s.dim() << ", reduced = " << yn(s.reduced(budget))
     << ", indecomposable = " << yn(ind.indecomposable)
     << (ind.connectivity_only ? " (graph criterion)" : "") << "\n";
}

// Family fixtures living on exactly this (group, beta), by side tag. Used
// to annotate census classes with the systems they realize.
std::vector<std::pair<std::string, std::vector<GroupElem>>> census_candidates(
    const Bicharacter& beta) {
  std::vector<std::pair<std::string, std::vector<GroupElem>>> out;
  auto add_side = [&](const std::string& tag, const char* sname,
                      const std::optional<FamilySystem>& side) {
    if (!side) return;
    if (side->system.group() != beta.group()) return;
    if (side->system.beta() != beta) return;
    out.emplace_back(tag + ":" + sname, side->system.roots());
  };
  auto add = [&](const FamilyInstance& inst) {
    add_side(inst.tag, "lie", inst.lie);
    add_side(inst.tag, "jordan", inst.jordan);
  };
  const std::vector<long>& o = beta.group().orders();
  const long k = beta.group().k();

  if (k > 0 && k % 2 == 0) {
    bool paired = true;
    std::vector<long> blocks;
    for (long t = 0; t < k / 2; ++t) {
      if (o[static_cast<std::size_t>(2 * t)] != o[static_cast<std::size_t>(2 * t + 1)])
        paired = false;
      else
        blocks.push_back(o[static_cast<std::size_t>(2 * t)]);
    }
    if (paired) {
      try {
        add(family_nonsingular(blocks));
      } catch (const Error&) {
      }
    }
  }
  const bool all_two = std::all_of(o.begin(), o.end(), [](long n) { return n == 2; });
  if (all_two && k >= 2) {
    try {
      add(family_clifford(k));  // Jordan side lives on Z_2^k
    } catch (const Error&) {
    }
    try {
      add(family_clifford(k + 1));  // Lie side lives on Z_2^k
    } catch (const Error&) {
    }
    if (k % 2 == 0) {
      for (QuadKind q : {QuadKind::F0Even, QuadKind::F1Even}) {
        try {
          add(family_quadratic(q, k / 2));
        } catch (const Error&) {
        }
      }
    } else {
      try {
        add(family_quadratic(QuadKind::HOdd, (k - 1) / 2));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + path);
  f << text;
}

}  // namespace

JobConfig parse_config(std::istream& in) {
  JobConfig cfg;
  std::string line, section;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("config line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (section != "group" && section != "bicharacter" && section != "rootsystem" &&
          section != "run")
        fail("unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (section == "group") {
      if (key == "orders")
        cfg.orders = to_longs(val);
      else
        fail("unknown key '" + key + "' in [group]");
    } else if (section == "bicharacter") {
      if (key == "n")
        cfg.n = to_long(val);
      else if (key == "row")
        cfg.lower.push_back(to_longs(val));
      else
        fail("unknown key '" + key + "' in [bicharacter]");
    } else if (section == "rootsystem") {
      if (key == "kind")
        cfg.kind = parse_kind(val);
      else if (key == "root") {
        cfg.roots.push_back(to_longs(val));
        cfg.have_roots = true;
      } else
        fail("unknown key '" + key + "' in [rootsystem]");
    } else if (section == "run") {
      if (key == "family")
        cfg.family = val;
      else if (key == "enumerate") {
        const Kind k = parse_kind(val);
        if (cfg.kind && *cfg.kind != k) fail("enumerate kind conflicts with [rootsystem]");
        cfg.kind = k;
        cfg.enumerate = true;
      } else if (key == "analyze") {
        for (const std::string& t : fields(val)) {
          if (!kAnalyses.count(t)) fail("unknown analysis '" + t + "'");
          cfg.analyses.push_back(t);
        }
      } else if (key == "out")
        cfg.out = val;
      else if (key == "budget")
        cfg.budget = to_llong(val);
      else if (key == "jobs")
        cfg.jobs = static_cast<int>(to_long(val));
      else
        fail("unknown key '" + key + "' in [run]");
    } else {
      fail("key before any section header");
    }
  }
  const int sources = (cfg.have_roots ? 1 : 0) + (cfg.family ? 1 : 0) + (cfg.enumerate ? 1 : 0);
  if (sources != 1)
    throw ParseError(
        "config must name exactly one of: explicit [rootsystem] roots, family, enumerate");
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open config file: " + path);
  return parse_config(f);
}

CmdResult cmd_validate(const JobConfig& cfg) {
  std::ostringstream os;
  if (cfg.family) {
    // family constructors re-validate; reaching the summary means valid
    const FamilySystem fs = family_by_name(*cfg.family);
    os << "validate: family = " << *cfg.family << "\n";
    os << "kind = " << kind_name(fs.system.kind()) << ", group = "
       << fs.system.group().to_string() << ", n = " << fs.system.beta().n()
       << ", |R| = " << fs.system.dim() << "\n";
    os << "result: VALID\n";
    return CmdResult{0, os.str()};
  }
  if (!cfg.have_roots) throw ParseError("validate needs an explicit root system or a family");
  if (!cfg.kind) throw ParseError("[rootsystem] needs kind = lie|jordan");
  if (cfg.orders.empty()) throw ParseError("[group] orders required");
  const FinAbGroup g(cfg.orders);
  const Bicharacter beta = Bicharacter::from_lower_triangle(g, cfg.n, cfg.lower);
  std::vector<GroupElem> roots;
  for (const std::vector<long>& r : cfg.roots) roots.push_back(g.elem(r));
  os << "validate: kind = " << kind_name(*cfg.kind) << ", group = " << g.to_string()
     << ", n = " << cfg.n << ", |R| = " << roots.size() << "\n";
  const ValidationReport rep = validate_system(*cfg.kind, beta, std::move(roots), cfg.budget);
  if (rep.ok) {
    os << "result: VALID\n";
    return CmdResult{0, os.str()};
  }
  os << "result: INVALID\n";
  for (const ValidationIssue& issue : rep.issues) os << "issue: " << issue.to_string() << "\n";
  return CmdResult{1, os.str()};
}

CmdResult cmd_analyze(const JobConfig& cfg) {
  const Resolved r = resolve_system(cfg);
  const SkewRootSystem& s = r.system;
  const bool is_lie = s.kind() == Kind::Lie;
  for (const std::string& t : cfg.analyses) {
    if (is_lie && t == "trace") throw ParseError("trace analysis requires a jordan system");
    if (!is_lie && (t == "killing" || t == "centroid"))
      throw ParseError(t + " analysis requires a lie system");
  }
  const std::set<std::string> want(cfg.analyses.begin(), cfg.analyses.end());
  const bool all = want.empty();
  auto wanted = [&](const char* t) { return all || want.count(t) > 0; };

  std::ostringstream os;
  if (r.family)
    os << "analyze: family = " << *r.family << "\n";
  else
    os << "analyze: explicit system\n";
  os << "kind = " << kind_name(s.kind()) << ", group = " << s.group().to_string()
     << ", n = " << s.beta().n() << "\n";
  const GradedAlgebra a = GradedAlgebra::build(s, r.xi);
  os << "|R| = " << s.dim() << ", dim = " << a.dim() << "\n";
  const bool red = s.reduced(cfg.budget);
  os << "reduced = " << yn(red) << "\n";
  os << "components = " << graph_components(root_graph(s)).size() << "\n";
  const IndecomposabilityReport ind = is_indecomposable(s);
  os << "indecomposable = " << yn(ind.indecomposable)
     << (ind.connectivity_only ? " (graph criterion)" : "") << "\n";

  bool negative = false;
  bool form_ok = true;
  if (is_lie && wanted("killing")) {
    const CycloMatrix kf = killing_form(a);
    const CycloNum det = mat_det(kf);
    os << "killing det = " << det.to_string() << "\n";
    if (a.dim() <= 24) {
      os << "killing pairing =";
      for (long i = 0; i < a.dim(); ++i) os << " " << killing_pairing_closed(a, i).to_string();
      os << "\n";
    }
    if (det.is_zero()) {
      os << "note: killing form degenerate\n";
      negative = true;
      form_ok = false;
    }
  }
  if (!is_lie && wanted("trace")) {
    const CycloMatrix tf = trace_form(a);
    const CycloNum det = mat_det(tf);
    os << "trace det = " << det.to_string() << "\n";
    if (a.dim() <= 24) {
      os << "trace pairing =";
      for (long i = 0; i < a.dim(); ++i) os << " " << trace_pairing_closed(a, i).to_string();
      os << "\n";
    }
    if (det.is_zero()) {
      os << "note: trace form degenerate\n";
      negative = true;
    }
  }
  if (is_lie && wanted("centroid")) {
    if (form_ok) {
      const long cd = centroid_dim(a);
      os << "centroid dim = " << cd << "\n";
      if (cd != 1) {
        os << "note: centroid dim = " << cd << ", not simple\n";
        if (r.family && r.family->rfind("clifford:4:", 0) == 0)
          os << "note: the rank-4 orthogonal algebra splits into two commuting halves; "
                "this family is simple for n >= 3 except n = 4\n";
      }
    } else {
      os << "centroid: skipped (killing form degenerate)\n";
    }
  }
  if (wanted("graded-simple")) os << "graded simple = " << yn(graded_simple(a)) << "\n";
  if (wanted("homsemi")) {
    const bool hs = homogeneous_semisimple(a);
    os << "homogeneous semisimple = " << yn(hs) << "\n";
    if (!hs) negative = true;
  }
  if (want.count("reduce") > 0 || (all && !red)) {
    const std::vector<GroupElem> rad = s.beta().radical(cfg.budget);
    if (rad.size() <= 1) {
      os << "reduce: radical trivial, nothing to do\n";
    } else {
      const ReductionResult rr = reduce(s, rad, cfg.budget);
      os << "reduce: |Rad| = " << rad.size() << ", group " << s.group().to_string() << " -> "
         << rr.system.group().to_string() << ", |R| " << s.dim() << " -> " << rr.system.dim()
         << ", root map bijective = " << yn(rr.system.dim() == s.dim()) << "\n";
    }
  }
  if ((all && r.family) || want.count("identify") > 0) {
    if (!r.family) throw ParseError("identify analysis requires a family job");
    const IdentifyRecord rec = identify(a, *r.family);
    os << "identification: " << rec.type_name << ", expected dim " << rec.expected_dim
       << ", actual dim " << rec.actual_dim << ", dim match = " << yn(rec.dim_match)
       << ", dictionary = "
       << (rec.dictionary_checked ? (rec.dictionary_match ? "verified" : "MISMATCH")
                                  : "skipped (model too large)")
       << "\n";
    if (!rec.dim_match || (rec.dictionary_checked && !rec.dictionary_match)) negative = true;
  }
  if (cfg.out) {
    std::ostringstream ex;
    export_structure(a, ex);
    write_out(*cfg.out, ex.str());
    os << "export: written to " << *cfg.out << "\n";
  }
  return CmdResult{negative ? 1 : 0, os.str()};
}

CmdResult cmd_enumerate(const JobConfig& cfg) {
  if (!cfg.enumerate)
    throw ParseError("enumerate command needs 'enumerate = lie|jordan' in [run]");
  if (cfg.orders.empty()) throw ParseError("[group] orders required");
  const FinAbGroup g(cfg.orders);
  const Bicharacter beta = Bicharacter::from_lower_triangle(g, cfg.n, cfg.lower);
  const Kind kind = *cfg.kind;
  const std::vector<std::vector<GroupElem>> systems = enumerate_systems(beta, kind, cfg.budget);
  const std::vector<IsoClass> classes = classify_systems(beta, systems, cfg.budget);

  std::map<std::size_t, std::set<std::string>> tag_by_system;
  for (const auto& [tag, roots] : census_candidates(beta)) {
    const auto it = std::lower_bound(systems.begin(), systems.end(), roots);
    if (it != systems.end() && *it == roots)
      tag_by_system[static_cast<std::size_t>(it - systems.begin())].insert(tag);
  }

  std::ostringstream os;
  os << "enumerate: kind = " << kind_name(kind) << ", group = " << g.to_string()
     << ", n = " << cfg.n << ", budget = " << cfg.budget << "\n";
  os << "systems = " << systems.size() << "\n";
  os << "classes = " << classes.size() << "\n";
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const IsoClass& cl = classes[ci];
    const SkewRootSystem rep = SkewRootSystem::checked(kind, beta, cl.canonical, cfg.budget);
    const IndecomposabilityReport ind = is_indecomposable(rep);
    os << "class " << ci << ": |R| = " << cl.canonical.size() << ", members = "
       << cl.members.size() << ", reduced = " << yn(rep.reduced(cfg.budget))
       << ", indecomposable = " << yn(ind.indecomposable);
    if (rep.dim() <= 16) {
      const GradedAlgebra a = GradedAlgebra::build(rep, standard_cocycle(beta));
      os << ", dim = " << a.dim();
      const CycloNum det = kind == Kind::Lie ? mat_det(killing_form(a)) : mat_det(trace_form(a));
      os << (kind == Kind::Lie ? ", killing det = " : ", trace det = ") << det.to_string();
    }
    std::set<std::string> tags;
    for (std::size_t m : cl.members) {
      const auto it = tag_by_system.find(m);
      if (it != tag_by_system.end()) tags.insert(it->second.begin(), it->second.end());
    }
    for (const std::string& t : tags) os << ", family = " << t;
    os << ", roots = {";
    for (const GroupElem& e : cl.canonical) os << " " << e.to_string();
    os << " }\n";
  }
  if (cfg.out) {
    write_out(*cfg.out, os.str());
    os << "census: written to " << *cfg.out << "\n";
  }
  return CmdResult{0, os.str()};
}

CmdResult cmd_family(const JobConfig& cfg) {
  if (!cfg.family) throw ParseError("family command needs --family <name>");
  const std::string& name = *cfg.family;
  std::ostringstream os;
  const bool has_side =
      name.size() > 4 && (name.rfind(":lie") == name.size() - 4 ||
                          (name.size() > 7 && name.rfind(":jordan") == name.size() - 7));
  if (has_side) {
    const FamilySystem fs = family_by_name(name);
    os << "family: " << name << "\n";
    side_summary(os, kind_name(fs.system.kind()), fs, cfg.budget);
    return CmdResult{0, os.str()};
  }
  const FamilyInstance inst = family_instance(name);
  os << "family: " << inst.tag << "\n";
  if (inst.lie)
    side_summary(os, "lie", *inst.lie, cfg.budget);
  else
    os << "lie: not defined for these parameters\n";
  if (inst.jordan)
    side_summary(os, "jordan", *inst.jordan, cfg.budget);
  else
    os << "jordan: not defined for these parameters\n";
  if (inst.radical_projection)
    os << "reduction: projection onto " << inst.radical_projection->cod().to_string() << "\n";
  if (inst.subgroup_embedding)
    os << "embedding: lie system group into " << inst.subgroup_embedding->cod().to_string()
       << "\n";
  return CmdResult{0, os.str()};
}

CmdResult cmd_export(const JobConfig& cfg) {
  const Resolved r = resolve_system(cfg);
  const GradedAlgebra a = GradedAlgebra::build(r.system, r.xi);
  std::ostringstream ex;
  export_structure(a, ex);
  if (cfg.out) {
    write_out(*cfg.out, ex.str());
    return CmdResult{0, "export: written to " + *cfg.out + "\n"};
  }
  return CmdResult{0, ex.str()};
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"skew root systems over finite symplectic abelian groups"};
  app.require_subcommand(1);
  std::string config_path, family, out;
  long long budget = -1;
  int jobs = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "job config file");
    sub->add_option("--family", family, "family name, e.g. nonsingular:2:lie");
    sub->add_option("--out", out, "output path for exports/census");
    sub->add_option("--budget", budget, "enumeration/validation budget");
    sub->add_option("--jobs", jobs, "worker thread count");
  };
  CLI::App* cv = app.add_subcommand("validate", "check the skew root system axioms");
  CLI::App* ca = app.add_subcommand("analyze", "build the graded algebra and run analyses");
  CLI::App* ce = app.add_subcommand("enumerate", "census of all systems up to symmetry");
  CLI::App* cf = app.add_subcommand("family", "summarize a built-in family instance");
  CLI::App* cx = app.add_subcommand("export", "write the structure-constant table");
  for (CLI::App* sub : {cv, ca, ce, cf, cx}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    JobConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (!family.empty()) cfg.family = family;
    if (!out.empty()) cfg.out = out;
    if (budget >= 0) cfg.budget = budget;
    if (jobs > 0) cfg.jobs = jobs;
#ifdef _OPENMP
    if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
#endif
    CmdResult res;
    if (cv->parsed())
      res = cmd_validate(cfg);
    else if (ca->parsed())
      res = cmd_analyze(cfg);
    else if (ce->parsed())
      res = cmd_enumerate(cfg);
    else if (cf->parsed())
      res = cmd_family(cfg);
    else
      res = cmd_export(cfg);
    std::cout << res.report;
    return res.exit_code;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const NotValidated& e) {
    std::cerr << "invalid system: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace skw::cli
