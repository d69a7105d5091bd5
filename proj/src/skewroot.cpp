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

#include "skewroot/skewroot.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "skewroot/errors.hpp"

namespace skw {

const char* kind_name(Kind k) { return k == Kind::Lie ? "lie" : "jordan"; }

Kind parse_kind(const std::string& s) {
  if (s == "lie") return Kind::Lie;
  if (s == "jordan") return Kind::Jordan;
  throw ParseError("kind must be 'lie' or 'jordan', got '" + s + "'");
}

bool kind_edge(const Bicharacter& beta, Kind kind, const GroupElem& a, const GroupElem& b) {
  return kind == Kind::Lie ? !beta.eval_is_one(a, b) : !beta.eval_is_minus_one(a, b);
}

std::string ValidationIssue::to_string() const {
  std::ostringstream os;
  os << axiom;
  if (!witness.empty()) {
    os << " witness";
    for (const GroupElem& w : witness) os << " " << w.to_string();
  }
  if (!detail.empty()) os << " (" << detail << ")";
  return os.str();
}

ValidationReport validate_system(Kind kind, const Bicharacter& beta,
                                 std::vector<GroupElem> roots, long long budget) {
  const FinAbGroup& g = beta.group();
  for (const GroupElem& r : roots)
    if (r.group() != g) throw MismatchedGroups("validate_system: root in wrong group");
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  const bool lie = kind == Kind::Lie;
  const char* a0 = lie ? "SRSL0" : "SRSJ0";
  const char* a1 = lie ? "SRSL1" : "SRSJ1";
  const char* a2 = lie ? "SRSL2" : "SRSJ2";

  ValidationReport rep;
  auto fail = [&rep](std::string axiom, std::vector<GroupElem> witness, std::string detail) {
    rep.ok = false;
    rep.issues.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  };

  if (static_cast<long long>(roots.size()) * static_cast<long long>(roots.size()) > budget)
    throw BudgetExceeded("validate_system: |R|^2 exceeds budget");

  if (roots.empty()) {
    fail(a0, {}, "empty root set");
    return rep;
  }

  // generation
  const auto span = subgroup_generated(g, roots, budget);
  if (static_cast<long long>(span.size()) != g.size())
    fail(a0, {}, "roots generate a proper subgroup of order " + std::to_string(span.size()));

  // symmetry, first witness only
  for (const GroupElem& r : roots) {
    if (!std::binary_search(roots.begin(), roots.end(), -r)) {
      fail(a1, {r}, "negative missing");
      break;
    }
  }

  // Lie: roots must avoid the radical
  if (lie) {
    const auto rad = beta.radical(budget);
    for (const GroupElem& r : roots) {
      if (std::binary_search(rad.begin(), rad.end(), r)) {
        fail("SRSL-rad", {r}, "root lies in Rad(beta)");
        break;
      }
    }
  }

  // closure, first witness only
  bool closed = true;
  for (std::size_t i = 0; i < roots.size() && closed; ++i)
    for (std::size_t j = i; j < roots.size() && closed; ++j) {
      if (!kind_edge(beta, kind, roots[i], roots[j])) continue;
      const GroupElem s = roots[i] + roots[j];
      if (!std::binary_search(roots.begin(), roots.end(), s)) {
        fail(a2, {roots[i], roots[j], s}, "sum of interacting roots missing");
        closed = false;
      }
    }

  return rep;
}

SkewRootSystem::SkewRootSystem(Kind kind, Bicharacter beta, std::vector<GroupElem> roots)
    : kind_(kind), beta_(std::move(beta)), roots_(std::move(roots)) {}

SkewRootSystem SkewRootSystem::checked(Kind kind, Bicharacter beta,
                                       std::vector<GroupElem> roots, long long budget) {
  auto rep = validate_system(kind, beta, roots, budget);
  if (!rep.ok) {
    std::ostringstream os;
    os << "root system fails " << rep.issues.size() << " axiom(s):";
    for (const auto& issue : rep.issues) os << " [" << issue.to_string() << "]";
    throw NotValidated(os.str());
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return SkewRootSystem(kind, std::move(beta), std::move(roots));
}

bool SkewRootSystem::reduced(long long budget) const { return beta_.nonsingular(budget); }

RootGraph root_graph(const SkewRootSystem& s) {
  RootGraph g;
  g.verts = s.roots();
  g.adj.assign(g.verts.size(), {});
  for (std::size_t i = 0; i < g.verts.size(); ++i)
    for (std::size_t j = i + 1; j < g.verts.size(); ++j) {
      if (!kind_edge(s.beta(), s.kind(), g.verts[i], g.verts[j])) continue;
      g.edges.emplace_back(static_cast<long>(i), static_cast<long>(j));
      g.adj[i].push_back(static_cast<long>(j));
      g.adj[j].push_back(static_cast<long>(i));
    }
  return g;
}

std::vector<std::vector<long>> graph_components(const RootGraph& g) {
  std::vector<std::vector<long>> comps;
  std::vector<bool> seen(g.verts.size(), false);
  for (std::size_t start = 0; start < g.verts.size(); ++start) {
    if (seen[start]) continue;
    std::vector<long> comp, stack = {static_cast<long>(start)};
    seen[start] = true;
    while (!stack.empty()) {
      const long v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (long w : g.adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

IndecomposabilityReport is_indecomposable(const SkewRootSystem& s) {
  const bool connected = graph_components(root_graph(s)).size() <= 1;
  const bool full_theorem = s.kind() == Kind::Lie && s.reduced();
  return {connected, !full_theorem};
}

SkewRootSystem direct_sum(const SkewRootSystem& a, const SkewRootSystem& b) {
  if (a.kind() != b.kind()) throw KindMismatch("direct_sum: systems have different kinds");
  const Bicharacter beta = orthogonal_sum(a.beta(), b.beta());
  const FinAbGroup& g = beta.group();
  const long ka = a.group().k();
  const long kb = b.group().k();
  std::vector<GroupElem> roots;
  for (const GroupElem& r : a.roots()) {
    std::vector<long> res = r.residues();
    res.resize(static_cast<std::size_t>(ka + kb), 0);
    roots.push_back(g.elem(std::move(res)));
  }
  for (const GroupElem& r : b.roots()) {
    std::vector<long> res(static_cast<std::size_t>(ka), 0);
    res.insert(res.end(), r.residues().begin(), r.residues().end());
    roots.push_back(g.elem(std::move(res)));
  }
  return SkewRootSystem::checked(a.kind(), beta, std::move(roots));
}

ReductionResult reduce(const SkewRootSystem& s, const std::vector<GroupElem>& h,
                       long long budget) {
  const auto rad = s.beta().radical(budget);
  for (const GroupElem& x : h)
    if (!std::binary_search(rad.begin(), rad.end(), x))
      throw NotInRadical("reduce: subgroup not contained in Rad(beta)");
  auto q = quotient(s.group(), h);
  const Bicharacter pushed = push_bicharacter(s.beta(), q.projection, budget);
  std::vector<GroupElem> roots;
  for (const GroupElem& r : s.roots()) roots.push_back(q.projection.apply(r));
  SkewRootSystem out = SkewRootSystem::checked(s.kind(), pushed, std::move(roots), budget);
  return {std::move(out), std::move(q.projection)};
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace {

struct Enumerator {
  const Bicharacter& beta;
  Kind kind;
  long long budget;
  long long nodes = 0;

  std::vector<GroupElem> all;
  std::map<GroupElem, long> index;
  std::vector<long> orbit_of;               // element index -> orbit id
  std::vector<std::vector<long>> orbits;    // orbit id -> element indices
  std::vector<long> branch_orbits;          // orbit ids open for branching
  std::vector<int> status;                  // orbit id -> 0 unknown, 1 in, 2 out
  std::vector<long> in_elems;               // element indices currently in
  std::vector<std::vector<GroupElem>> found;

  explicit Enumerator(const Bicharacter& b, Kind k, long long bud)
      : beta(b), kind(k), budget(bud) {
    all = beta.group().elements(bud);
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], static_cast<long>(i));
    orbit_of.assign(all.size(), -1);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (orbit_of[i] >= 0) continue;
      const long id = static_cast<long>(orbits.size());
      orbit_of[i] = id;
      std::vector<long> members = {static_cast<long>(i)};
      const long neg = index.at(-all[i]);
      if (neg != static_cast<long>(i)) {
        orbit_of[static_cast<std::size_t>(neg)] = id;
        members.push_back(neg);
      }
      orbits.push_back(std::move(members));
    }
    status.assign(orbits.size(), 0);
  }

  // Marks orbit as in, runs the closure forcing; returns false on
  // contradiction.  All status changes are appended to `log` for undo.
  bool set_in(long orbit, std::vector<long>& log) {
    std::vector<long> queue = {orbit};
    status[static_cast<std::size_t>(orbit)] = 1;
    log.push_back(orbit);
    for (long m : orbits[static_cast<std::size_t>(orbit)]) in_elems.push_back(m);
    while (!queue.empty()) {
      const long o = queue.back();
      queue.pop_back();
      for (long xi : orbits[static_cast<std::size_t>(o)]) {
        const GroupElem& x = all[static_cast<std::size_t>(xi)];
        // iterate over a snapshot; in_elems grows as forcing fires
        for (std::size_t yi = 0; yi < in_elems.size(); ++yi) {
          const GroupElem& y = all[static_cast<std::size_t>(in_elems[yi])];
          if (!kind_edge(beta, kind, x, y)) continue;
          const long t = index.at(x + y);
          const long to = orbit_of[static_cast<std::size_t>(t)];
          if (status[static_cast<std::size_t>(to)] == 1) continue;
          if (status[static_cast<std::size_t>(to)] == 2) return false;
          status[static_cast<std::size_t>(to)] = 1;
          log.push_back(to);
          for (long m : orbits[static_cast<std::size_t>(to)]) in_elems.push_back(m);
          queue.push_back(to);
        }
      }
    }
    return true;
  }

  void undo(const std::vector<long>& log, std::size_t in_size_before) {
    for (long o : log) status[static_cast<std::size_t>(o)] = 0;
    in_elems.resize(in_size_before);
  }

  void emit_if_valid() {
    if (in_elems.empty()) return;
    std::vector<GroupElem> roots;
    for (long e : in_elems) roots.push_back(all[static_cast<std::size_t>(e)]);
    const auto span = subgroup_generated(beta.group(), roots, budget);
    if (static_cast<long long>(span.size()) != beta.group().size()) return;
    std::sort(roots.begin(), roots.end());
    found.push_back(std::move(roots));
  }

  void dfs(std::size_t branch_pos) {
    if (++nodes > budget) throw BudgetExceeded("enumerate_systems: node budget exhausted");
    while (branch_pos < branch_orbits.size() &&
           status[static_cast<std::size_t>(branch_orbits[branch_pos])] != 0)
      ++branch_pos;
    if (branch_pos == branch_orbits.size()) {
      emit_if_valid();
      return;
    }
    const long orbit = branch_orbits[branch_pos];
    // include
    {
      std::vector<long> log;
      const std::size_t before = in_elems.size();
      if (set_in(orbit, log)) dfs(branch_pos + 1);
      undo(log, before);
    }
    // exclude
    status[static_cast<std::size_t>(orbit)] = 2;
    dfs(branch_pos + 1);
    status[static_cast<std::size_t>(orbit)] = 0;
  }

  std::vector<std::vector<GroupElem>> run() {
    if (kind == Kind::Lie) {
      // roots avoid the radical; those orbits are permanently out
      const auto rad = beta.radical(budget);
      for (const GroupElem& r : rad) status[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(index.at(r))])] = 2;
    } else {
      // 0 is forced into every nonempty Jordan system
      std::vector<long> log;
      if (!set_in(orbit_of[static_cast<std::size_t>(index.at(beta.group().zero()))], log))
        return {};
    }
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (status[i] == 0) branch_orbits.push_back(static_cast<long>(i));
    dfs(0);
    std::sort(found.begin(), found.end(),
              [](const std::vector<GroupElem>& a, const std::vector<GroupElem>& b) {
                return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
              });
    return std::move(found);
  }
};

}  // namespace

std::vector<std::vector<GroupElem>> enumerate_systems(const Bicharacter& beta, Kind kind,
                                                      long long budget) {
  Enumerator e(beta, kind, budget);
  return e.run();
}

// ---------------------------------------------------------------------------
// Automorphisms and classification.

namespace {

struct AutSearch {
  const Bicharacter& beta;
  long long budget;
  long long nodes = 0;
  std::vector<GroupElem> all;
  std::vector<std::vector<GroupElem>> by_order_candidates;  // per generator
  std::vector<GroupElem> picked;
  std::vector<GroupHom> out;

  AutSearch(const Bicharacter& b, long long bud) : beta(b), budget(bud) {
    all = beta.group().elements(bud);
    const FinAbGroup& g = beta.group();
    for (long i = 0; i < g.k(); ++i) {
      std::vector<GroupElem> cands;
      for (const GroupElem& x : all)
        if (x.order() == g.orders()[static_cast<std::size_t>(i)]) cands.push_back(x);
      by_order_candidates.push_back(std::move(cands));
    }
  }

  void dfs(long i) {
    if (++nodes > budget) throw BudgetExceeded("beta_automorphisms: node budget exhausted");
    const FinAbGroup& g = beta.group();
    if (i == g.k()) {
      GroupHom h(g, g, picked);
      // bijectivity: distinct images over all of G
      std::set<GroupElem> img;
      for (const GroupElem& x : all) img.insert(h.apply(x));
      if (static_cast<long long>(img.size()) == g.size()) out.push_back(std::move(h));
      return;
    }
    for (const GroupElem& cand : by_order_candidates[static_cast<std::size_t>(i)]) {
      bool ok = true;
      for (long j = 0; j < i && ok; ++j)
        if (beta.eval_exp(cand, picked[static_cast<std::size_t>(j)]) !=
            beta.exp_at(i, j))
          ok = false;
      if (!ok) continue;
      picked.push_back(cand);
      dfs(i + 1);
      picked.pop_back();
    }
  }
};

}  // namespace

std::vector<GroupHom> beta_automorphisms(const Bicharacter& beta, long long budget) {
  AutSearch s(beta, budget);
  s.dfs(0);
  return std::move(s.out);
}

std::vector<IsoClass> classify_systems(const Bicharacter& beta,
                                       const std::vector<std::vector<GroupElem>>& systems,
                                       long long budget) {
  const auto auts = beta_automorphisms(beta, budget);
  auto lex_less = [](const std::vector<GroupElem>& a, const std::vector<GroupElem>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };

  std::map<std::vector<std::vector<long>>, IsoClass> classes;
  for (std::size_t idx = 0; idx < systems.size(); ++idx) {
    std::vector<GroupElem> best = systems[idx];
    std::sort(best.begin(), best.end());
    for (const GroupHom& a : auts) {
      std::vector<GroupElem> img;
      for (const GroupElem& r : systems[idx]) img.push_back(a.apply(r));
      std::sort(img.begin(), img.end());
      if (lex_less(img, best)) best = std::move(img);
    }
    std::vector<std::vector<long>> key;
    for (const GroupElem& r : best) key.push_back(r.residues());
    auto it = classes.find(key);
    if (it == classes.end()) {
      IsoClass cls;
      cls.canonical = std::move(best);
      cls.members = {idx};
      classes.emplace(std::move(key), std::move(cls));
    } else {
      it->second.members.push_back(idx);
    }
  }
  std::vector<IsoClass> out;
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace skw
