// Copyright 2026 The pauli-dla Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check is an exact integer comparison.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pdla/classifier.hpp"
#include "pdla/graph.hpp"
#include "pdla/instance.hpp"
#include "pdla/oracle.hpp"
#include "pdla/pauli.hpp"
#include "pdla/quadratic_space.hpp"

using namespace pdla;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  // Records the first failure only; later ones rarely add information.
  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      failure = what;
    }
  }
};

std::vector<BitVector> bits_of(std::span<const PauliString> gens) {
  std::vector<BitVector> out;
  for (const auto& g : gens) out.push_back(to_vector(g).bits());
  return out;
}

std::vector<PauliString> paulis(std::initializer_list<const char*> words) {
  std::vector<PauliString> out;
  for (const char* w : words) out.push_back(parse_pauli(w));
  return out;
}

std::string describe(std::span<const PauliString> gens) {
  std::string out;
  for (const auto& g : gens) out += (out.empty() ? "" : " ") + render_pauli(g);
  return out;
}

BitVector random_bits(std::size_t dim, std::mt19937_64& rng) {
  BitVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v.set(i, rng() & 1U);
  return v;
}

// Closure point count and per-component equivalence-class shape, computed
// without the classifier's own verification routine.
void check_against_closure(Outcome& out, std::span<const PauliString> gens, const Classification& c) {
  const std::size_t n = c.qubits;
  const auto form = QuadraticForm::pauli(n);
  const auto all = bits_of(c.generators);
  const auto s = closure(std::span<const BitVector>(all), form);
  out.require(c.total_dim == s.size(), "total_dim " + c.total_dim.str() + " != closure " +
                                           std::to_string(s.size()) + " for " + describe(gens));
  for (const auto& comp : c.components) {
    std::vector<BitVector> comp_gens;
    for (std::size_t idx : comp.generators) comp_gens.push_back(to_vector(gens[idx]).bits());
    const auto points = closure(std::span<const BitVector>(comp_gens), form).points();
    const auto classes = equiv_classes(points, form);
    out.require(BigInt(classes.size()) == comp.summand.dimension(),
                "class count != dimension for " + describe(gens));
    for (const auto& cls : classes) {
      out.require(BigInt(cls.size()) == comp.summand.copies(), "class size != copies for " + describe(gens));
    }
  }
}

Outcome criterion_oracle_equivalence() {
  Outcome out;
  std::mt19937_64 rng(20260101);
  const auto start = Clock::now();
  const int instances = 1000;
  for (int i = 0; i < instances && out.pass; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t m = 1 + rng() % 10;
    const auto gens = random_generators(n, m, rng);
    check_against_closure(out, gens, classify(gens));
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream detail;
  detail << instances << " instances in " << elapsed << " s";
  out.detail = detail.str();
  return out;
}

// so(4) and so(3) + so(3) are the same algebra, and the n = 2 path is
// classified through the smaller root; compare canonical forms.
Outcome criterion_qaoa() {
  Outcome out;
  const std::size_t path_dims[] = {6, 15, 28, 45, 66};
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto gens = qaoa_path(n);
    const auto c = classify(gens);
    out.require(c.canonical == canonicalize(std::vector<Summand>{{SummandKind::SO_N, 2 * n, 0}}),
                "path n=" + std::to_string(n) + " is " + c.canonical_string());
    out.require(c.total_dim == path_dims[n - 2], "path n=" + std::to_string(n) + " dim " + c.total_dim.str());
    check_against_closure(out, gens, c);
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto gens = qaoa_cycle(n);
    const auto c = classify(gens);
    out.require(c.canonical == canonicalize(std::vector<Summand>{{SummandKind::SO_N, 2 * n, 1}}),
                "cycle n=" + std::to_string(n) + " is " + c.canonical_string());
    out.require(c.total_dim == n * (2 * n - 1) * 2, "cycle n=" + std::to_string(n) + " dim " + c.total_dim.str());
    check_against_closure(out, gens, c);
  }
  const auto pendant = qaoa_graph(4, parse_edge_list("1-2,2-3,1-3,3-4"));
  const auto c = classify(pendant);
  out.require(c.canonical_string() == "su(8) ⊕ su(8)", "triangle plus pendant is " + c.canonical_string());
  out.require(c.total_dim == 126, "triangle plus pendant dim " + c.total_dim.str());
  check_against_closure(out, pendant, c);
  out.detail = "paths n=2..6, cycles n=3..6, triangle plus pendant = 126";
  return out;
}

Outcome criterion_catalog() {
  Outcome out;
  const auto catalog = catalog_forbidden();
  out.require(catalog.size() == 32, std::to_string(catalog.size()) + " classes");
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& g = catalog[i].graph;
    out.require(g.size() == 6 && is_connected(g), "class " + std::to_string(i) + " is not connected on 6 vertices");
    for (std::size_t j = 0; j < i; ++j) {
      out.require(!iso_small(g, catalog[j].graph), "classes " + std::to_string(j) + " and " + std::to_string(i) + " are isomorphic");
    }
    out.require(!recognize_root(g), "class " + std::to_string(i) + " has a root");
    const auto gens = realize_on_qubits(catalog[i].realization);
    out.require(frustration_graph(std::span<const BitVector>(bits_of(gens)), QuadraticForm::pauli(3)) == g,
                "class " + std::to_string(i) + " realization has the wrong frustration graph");
    const auto c = classify(gens);
    out.require(c.canonical_string() == "sp(4)" && c.total_dim == 36,
                "class " + std::to_string(i) + " classified " + c.canonical_string());
    check_against_closure(out, gens, c);
  }
  out.detail = std::to_string(catalog.size()) + " classes, each sp(4) of dimension 36";
  return out;
}

Outcome criterion_dichotomy() {
  Outcome out;
  std::mt19937_64 rng(4242);
  std::size_t line = 0;
  std::size_t non_line = 0;
  std::size_t checked = 0;
  while (checked < 600) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t m = 1 + rng() % 12;
    const auto gens = random_generators(n, m, rng);
    const auto c = classify(gens);
    const auto form = QuadraticForm::pauli(n);
    const auto vs = bits_of(c.generators);
    const Graph g = frustration_graph(std::span<const BitVector>(vs), form);
    if (!is_connected(g)) continue;
    const bool has_root = recognize_root(g).has_value();
    const bool has_witness = forbidden_witness(vs, form).has_value();
    out.require(has_root != has_witness, "disagreement on " + describe(gens));
    (has_root ? line : non_line) += 1;
    ++checked;
  }
  for (const auto& entry : catalog_forbidden()) {
    const bool has_root = recognize_root(entry.graph).has_value();
    const bool has_witness = forbidden_witness(entry.realization, catalog_space()).has_value();
    out.require(!has_root && has_witness, "catalog graph disagreement");
  }
  out.detail = std::to_string(checked) + " random connected (" + std::to_string(line) + " line, " +
               std::to_string(non_line) + " not) plus 32 catalog graphs";
  return out;
}

Outcome criterion_exceptional() {
  Outcome out;
  struct Case {
    std::vector<PauliString> gens;
    std::string raw;
    std::string canonical;
    int dim;
  };
  const std::vector<Case> cases{
      {paulis({"iX", "iZ"}), "so(3)", "su(2)", 3},
      {paulis({"iZI", "iXI", "iZZ", "iIX"}), "so(5)", "sp(2)", 10},
      {qaoa_path(3), "so(6)", "su(4)", 15},
  };
  for (const auto& cs : cases) {
    const auto c = classify(cs.gens);
    out.require(c.components.size() == 1 && c.components[0].summand.label() == cs.raw,
                describe(cs.gens) + " is not " + cs.raw);
    out.require(c.canonical_string() == cs.canonical, describe(cs.gens) + " canonical " + c.canonical_string());
    out.require(c.total_dim == cs.dim && c.canonical.size() == 1 && c.canonical[0].total_dimension() == cs.dim,
                describe(cs.gens) + " changes dimension");
    check_against_closure(out, cs.gens, c);
  }
  out.detail = "so(3)=su(2) (3), so(5)=sp(2) (10), so(6)=su(4) (15)";
  return out;
}

Outcome criterion_full_generation() {
  Outcome out;
  const auto seven = paulis({"iXZY", "iYXX", "-iXXZ", "iZXI", "iZXY", "-iZIZ", "iIZX"});
  const auto r = check_generates_full(seven, 3);
  out.require(r.full && r.witness, "7-generator set is not full");
  out.require(closure(std::span<const BitVector>(bits_of(seven)), QuadraticForm::pauli(3)).size() == 63,
              "7-generator closure is not 63");

  for (const auto& [n, subsets] : std::vector<std::pair<std::size_t, std::string>>{{3, "1,2,3"}, {5, "1,2,3,4,5"}}) {
    const auto gens = parity_basis(n, parse_subsets(subsets));
    out.require(!check_generates_full(gens, n).full, "parity negative case n=" + std::to_string(n) + " is full");
  }
  for (const auto& [n, subsets] :
       std::vector<std::pair<std::size_t, std::string>>{{3, "1,2;2,3"}, {4, "1,2,3,4"}, {5, "1,2,3;3,4;4,5"}}) {
    const auto gens = parity_basis(n, parse_subsets(subsets));
    out.require(check_generates_full(gens, n).full, "parity positive case n=" + std::to_string(n) + " is not full");
    const std::size_t expected = (std::size_t{1} << (2 * n)) - 1;
    out.require(closure(std::span<const BitVector>(bits_of(gens)), QuadraticForm::pauli(n)).size() == expected,
                "parity positive case n=" + std::to_string(n) + " closure is not 4^n - 1");
  }
  out.detail = "7-generator n=3 set (63), 2 negative and 3 positive parity cases";
  return out;
}

Outcome criterion_round_trip() {
  Outcome out;
  std::mt19937_64 rng(777);
  std::size_t done = 0;
  while (done < 500) {
    MultiGraph d;
    d.vertices = 2 + rng() % 11;
    const std::size_t instances = 1 + rng() % 20;
    std::vector<bool> touched(d.vertices, false);
    touched[0] = true;
    for (std::size_t i = 0; i < instances; ++i) {
      std::size_t u;
      do {
        u = rng() % d.vertices;
      } while (!touched[u]);
      std::size_t v;
      do {
        v = rng() % d.vertices;
      } while (v == u);
      touched[v] = true;
      d.edges.push_back({std::min(u, v), std::max(u, v), 1});
    }
    const Graph g = line_graph(d).graph;
    if (!is_connected(g)) continue;
    ++done;
    const auto cert = recognize_root(g);
    out.require(cert && cert->verified, "no verified certificate");
    if (!cert) continue;
    const Graph rebuilt = line_graph(cert->root).graph;
    out.require(rebuilt.size() == g.size(), "root has the wrong number of edge instances");
    for (std::size_t u = 0; u < g.size() && rebuilt.size() == g.size(); ++u) {
      for (std::size_t v = u + 1; v < g.size(); ++v) {
        out.require(g.adjacent(u, v) == rebuilt.adjacent(cert->vertex_to_edge[u], cert->vertex_to_edge[v]),
                    "rebuilt line graph differs");
      }
    }
  }
  out.detail = std::to_string(done) + " multigraphs";
  return out;
}

Outcome criterion_quadratic_laws() {
  Outcome out;
  const auto count_points = [](const QuadraticForm& form) {
    std::size_t count = 0;
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << form.dim()); ++x) {
      BitVector v(form.dim());
      for (std::size_t j = 0; j < form.dim(); ++j) v.set(j, (x >> j) & 1U);
      bool outside_radical = false;
      for (std::size_t j = 0; j < 2 * form.pairs(); ++j) outside_radical = outside_radical || v.get(j);
      if (outside_radical && form.value(v)) ++count;
    }
    return count;
  };
  for (std::size_t m = 1; m <= 5; ++m) {
    const std::size_t half = std::size_t{1} << (2 * m - 1);
    const std::size_t shift = std::size_t{1} << (m - 1);
    out.require(count_points(QuadraticForm::pauli(m)) == (std::size_t{1} << (2 * m)) - 1, "4^m - 1 fails");
    out.require(count_points(QuadraticForm::standard(m, 0)) == half - shift, "plus count fails");
    out.require(count_points(QuadraticForm::standard(m - 1, 1)) == half + shift, "minus count fails");
  }

  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto form = QuadraticForm::pauli(n);
    std::vector<BitVector> vs;
    const std::size_t count = 1 + rng() % (2 * n + 3);
    for (std::size_t i = 0; i < count; ++i) vs.push_back(random_bits(form.dim(), rng));
    const auto invariants = [&](std::span<const BitVector> in) {
      const auto basis = symplectic_gram_schmidt(in, form);
      const auto rad = analyze_radical(basis);
      const int type = rad.anisotropic ? -1 : static_cast<int>(space_type(basis));
      return std::tuple{basis.pairs.size(), rad.rad_f_dim, rad.rad_q_dim, type};
    };
    const auto basis = symplectic_gram_schmidt(vs, form);
    out.require(basis.dim() == rank_of(vs), "Gram-Schmidt changes the rank");
    for (std::size_t i = 0; i < basis.pairs.size(); ++i) {
      const auto& p = basis.pairs[i];
      out.require(form.polar(p.v, p.w), "pair is not hyperbolic");
      for (std::size_t j = i + 1; j < basis.pairs.size(); ++j) {
        const auto& o = basis.pairs[j];
        out.require(!form.polar(p.v, o.v) && !form.polar(p.v, o.w) && !form.polar(p.w, o.v) && !form.polar(p.w, o.w),
                    "pairs are not orthogonal");
      }
    }
    for (const auto& r : basis.radical) {
      for (const auto& v : vs) out.require(!form.polar(r, v), "radical vector is not orthogonal");
    }
    auto shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    out.require(invariants(vs) == invariants(shuffled), "invariants depend on order");
  }
  out.detail = "point counts for m <= 5, 1000 random subspaces";
  return out;
}

Outcome criterion_cartan() {
  Outcome out;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto form = QuadraticForm::pauli(n);
    const auto gens = bits_of(random_generators(n, 1 + rng() % 8, rng));
    const auto s = closure(std::span<const BitVector>(gens), form);
    const auto lambda = random_bits(form.dim(), rng);
    const auto split = cartan_split(s, lambda, form);
    out.require(split.verified, "split reported unverified");
    out.require(split.l_part.size() + split.m_part.size() == s.size(), "split loses points");
    // Recheck every bracket here: u, v collinear means u + v is their bracket.
    std::set<BitVector> l(split.l_part.begin(), split.l_part.end());
    for (const auto& u : s.points()) {
      out.require(l.contains(u) == !dot(lambda, u), "point on the wrong side");
      for (const auto& v : s.points()) {
        if (!form.polar(u, v)) continue;
        const bool want_l = l.contains(u) == l.contains(v);
        out.require(s.contains(u ^ v) && l.contains(u ^ v) == want_l, "bracket lands on the wrong side");
      }
    }
  }
  out.detail = "200 instance and hyperplane pairs";
  return out;
}

double best_time(std::size_t n, std::size_t m, int runs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto gens = random_generators(n, m, rng);
  double best = 1e9;
  for (int i = 0; i < runs; ++i) {
    const auto start = Clock::now();
    const auto c = classify(gens);
    best = std::min(best, seconds_since(start));
    if (c.components.empty()) return -1;
  }
  return best;
}

Outcome criterion_performance() {
  Outcome out;
  const double headline = best_time(500, 1000, 1, 5);
  out.require(headline < 10.0, "n=500, m=1000 took " + std::to_string(headline) + " s");

  // Least squares for log t = c + a log n + b log m. Doubling both n and m
  // scales the runtime by 2^(a + b), so a + b is the overall exponent.
  const std::size_t sizes[] = {125, 250, 500, 1000};
  std::vector<std::array<double, 3>> rows;
  for (std::size_t n : sizes) {
    for (std::size_t m : sizes) {
      const double t = best_time(n, m, 3, n * 7919 + m);
      rows.push_back({std::log(static_cast<double>(n)), std::log(static_cast<double>(m)), std::log(t)});
    }
  }
  // The grid is a full product, so the two regressors are uncorrelated and
  // each slope is a one-dimensional fit.
  const auto slope = [&](int axis) {
    double mx = 0, my = 0;
    for (const auto& r : rows) {
      mx += r[axis];
      my += r[2];
    }
    mx /= rows.size();
    my /= rows.size();
    double sxy = 0, sxx = 0;
    for (const auto& r : rows) {
      sxy += (r[axis] - mx) * (r[2] - my);
      sxx += (r[axis] - mx) * (r[axis] - mx);
    }
    return sxy / sxx;
  };
  const double a = slope(0);
  const double b = slope(1);
  out.require(a + b <= 3.3, "log-log slope " + std::to_string(a + b));

  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  const double peak_mib = static_cast<double>(usage.ru_maxrss) / 1024.0;
  out.require(peak_mib < 1024.0, "peak RSS " + std::to_string(peak_mib) + " MiB");

  char buf[160];
  std::snprintf(buf, sizeof buf, "n=500 m=1000 in %.3f s, slope %.2f (n %.2f, m %.2f), peak RSS %.0f MiB", headline,
                a + b, a, b, peak_mib);
  out.detail = buf;
  return out;
}

Outcome criterion_commutator_graph() {
  Outcome out;
  std::mt19937_64 rng(1234);
  int instances = 0;
  for (; instances < 60; ++instances) {
    const std::size_t n = 1 + rng() % 4;
    const auto form = QuadraticForm::pauli(n);
    const auto gens = random_generators(n, 1 + rng() % 5, rng);
    std::vector<PauliVector> pv;
    for (const auto& g : gens) pv.push_back(to_vector(g));
    const auto comps = commutator_graph(pv, n);

    std::set<BitVector> in_closure;
    const Graph fg = frustration_graph(pv);
    for (const auto& fcomp : connected_components(fg)) {
      std::vector<BitVector> part;
      for (std::size_t i : fcomp) part.push_back(pv[i].bits());
      const auto s = closure(std::span<const BitVector>(part), form);
      const auto it = std::find_if(comps.begin(), comps.end(), [&](const std::vector<PauliVector>& comp) {
        return std::find(comp.begin(), comp.end(), pv[fcomp.front()]) != comp.end();
      });
      out.require(it != comps.end(), "generator missing from the commutator graph");
      if (it == comps.end()) continue;
      out.require(it->size() == s.size(), "generator component differs from the closure");
      for (const auto& p : *it) out.require(s.contains(p.bits()), "generator component differs from the closure");
      for (const auto& p : s.points()) in_closure.insert(p);
    }

    std::size_t total = 0;
    for (const auto& comp : comps) {
      total += comp.size();
      for (const auto& p : comp) {
        const bool central = std::none_of(pv.begin(), pv.end(), [&](const PauliVector& g) { return polar_form(p, g); });
        if (central && !in_closure.contains(p.bits())) out.require(comp.size() == 1, "central point is not a singleton");
      }
    }
    out.require(total == (std::size_t{1} << (2 * n)) - 1, "components do not cover every point");
  }
  out.detail = std::to_string(instances) + " instances with n <= 4";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", criterion_oracle_equivalence},
      {"QAOA family", criterion_qaoa},
      {"forbidden catalog", criterion_catalog},
      {"line graph dichotomy", criterion_dichotomy},
      {"exceptional isomorphisms", criterion_exceptional},
      {"full generation", criterion_full_generation},
      {"line graph round trip", criterion_round_trip},
      {"quadratic space laws", criterion_quadratic_laws},
      {"Cartan split", criterion_cartan},
      {"performance", criterion_performance},
      {"commutator graph", criterion_commutator_graph},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.pass ? o.detail.c_str() : o.failure.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
