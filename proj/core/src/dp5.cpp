#include "icoq/dp5.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "icoq/errors.hpp"

namespace icoq {

long cls_dot(const Cls& a, const Cls& b) {
  long s = a[0] * b[0];
  for (int i = 1; i < 5; ++i) s -= a[i] * b[i];
  return s;
}

Cls cls_add(const Cls& a, const Cls& b) {
  Cls r{};
  for (int i = 0; i < 5; ++i) r[i] = a[i] + b[i];
  return r;
}

Cls cls_neg(const Cls& a) {
  Cls r{};
  for (int i = 0; i < 5; ++i) r[i] = -a[i];
  return r;
}

Cls canonical_class() { return Cls{-3, 1, 1, 1, 1}; }

Cls mat5_apply(const Mat5& m, const Cls& c) {
  Cls r{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r[i] += m[i][j] * c[j];
  return r;
}

Mat5 mat5_mul(const Mat5& a, const Mat5& b) {
  Mat5 r{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      long s = 0;
      for (int k = 0; k < 5; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

namespace {

void need(bool ok, const std::string& detail) {
  if (!ok) fail("InternalInconsistency", detail);
}

std::vector<Cls> box_solutions(long self, long kdot) {
  const Cls k = canonical_class();
  std::vector<Cls> out;
  Cls c{};
  for (c[0] = -3; c[0] <= 3; ++c[0])
    for (c[1] = -3; c[1] <= 3; ++c[1])
      for (c[2] = -3; c[2] <= 3; ++c[2])
        for (c[3] = -3; c[3] <= 3; ++c[3])
          for (c[4] = -3; c[4] <= 3; ++c[4])
            if (cls_dot(c, c) == self && cls_dot(k, c) == kdot) out.push_back(c);
  return out;
}

}  // namespace

IncidenceModel dp5_build() {
  need(cls_dot(canonical_class(), canonical_class()) == 5, "K^2 must be 5");
  IncidenceModel m;
  m.lines = box_solutions(-1, -1);
  m.conics = box_solutions(0, -2);
  m.cubics = box_solutions(1, -3);
  need(m.lines.size() == 10, "expected exactly 10 line classes");
  need(m.conics.size() == 5, "expected exactly 5 conic classes");
  need(m.cubics.size() == 5, "expected exactly 5 cubic classes");

  m.adjacency.assign(10, {});
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      long d = cls_dot(m.lines[i], m.lines[j]);
      need(d == 0 || d == 1, "distinct lines meet in at most one point");
      if (d == 1) {
        m.xi.emplace_back(i, j);
        m.adjacency[i].push_back(j);
        m.adjacency[j].push_back(i);
      }
    }
  need(m.xi.size() == 15, "expected 15 intersecting line pairs");
  for (const auto& row : m.adjacency)
    need(row.size() == 3, "every line must meet exactly 3 others");
  return m;
}

namespace {

int graph_girth(const std::vector<std::vector<int>>& adj) {
  // Shortest cycle through each edge: remove it, find the alternative path.
  int n = static_cast<int>(adj.size());
  int best = -1;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) {
      if (v < u) continue;
      std::vector<int> dist(static_cast<size_t>(n), -1);
      std::vector<int> queue{u};
      dist[static_cast<size_t>(u)] = 0;
      for (size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (int y : adj[static_cast<size_t>(x)]) {
          if ((x == u && y == v) || (x == v && y == u)) continue;
          if (dist[static_cast<size_t>(y)] < 0) {
            dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
            queue.push_back(y);
          }
        }
      }
      if (dist[static_cast<size_t>(v)] >= 0) {
        int cyc = dist[static_cast<size_t>(v)] + 1;
        if (best < 0 || cyc < best) best = cyc;
      }
    }
  return best < 0 ? 0 : best;
}

void count_automorphisms(const std::vector<std::vector<bool>>& adj, std::vector<int>& image,
                         std::vector<bool>& used, size_t at, long& count,
                         std::vector<bool>& vertex_hit) {
  size_t n = adj.size();
  if (at == n) {
    ++count;
    vertex_hit[static_cast<size_t>(image[0])] = true;
    return;
  }
  for (size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (size_t prev = 0; prev < at && ok; ++prev)
      if (adj[at][prev] != adj[cand][static_cast<size_t>(image[prev])]) ok = false;
    if (!ok) continue;
    image[at] = static_cast<int>(cand);
    used[cand] = true;
    count_automorphisms(adj, image, used, at + 1, count, vertex_hit);
    used[cand] = false;
  }
}

}  // namespace

PetersenReport petersen_check(const IncidenceModel& m) {
  PetersenReport r;
  size_t n = m.lines.size();
  r.vertices = static_cast<int>(n);
  r.edges = static_cast<int>(m.xi.size());
  r.three_regular = true;
  for (const auto& row : m.adjacency)
    if (row.size() != 3) r.three_regular = false;
  r.girth = graph_girth(m.adjacency);

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [i, j] : m.xi)
    adj[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false), hit(n, false);
  long count = 0;
  count_automorphisms(adj, image, used, 0, count, hit);
  r.aut_order = count;
  r.vertex_transitive = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return r;
}

namespace {

void pin(bool ok, const std::string& detail) {
  if (!ok) fail("PinFailure", detail);
}

int index_of_class(const std::vector<Cls>& list, const Cls& c, const char* what) {
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == c) return static_cast<int>(i);
  fail("InternalInconsistency", std::string("class escaped the enumerated ") + what);
}

}  // namespace

WeylAction weyl_action(const IncidenceModel& m) {
  std::vector<Mat5> gens;
  // Transpositions of adjacent exceptional classes e1..e4.
  for (int t = 1; t <= 3; ++t) {
    Mat5 g{};
    for (int i = 0; i < 5; ++i) g[i][i] = 1;
    g[t][t] = g[t + 1][t + 1] = 0;
    g[t][t + 1] = g[t + 1][t] = 1;
    gens.push_back(g);
  }
  // Quadratic transformation based at the first three points: columns list
  // e0 -> 2e0-e1-e2-e3, ei -> e0-ej-ek for {i,j,k} = {1,2,3}, e4 -> e4.
  {
    Mat5 g{};
    g[0] = {2, 1, 1, 1, 0};
    g[1] = {-1, 0, -1, -1, 0};
    g[2] = {-1, -1, 0, -1, 0};
    g[3] = {-1, -1, -1, 0, 0};
    g[4] = {0, 0, 0, 0, 1};
    gens.push_back(g);
  }

  WeylAction a;
  std::map<Mat5, int> seen;
  Mat5 id{};
  for (int i = 0; i < 5; ++i) id[i][i] = 1;
  a.elements.push_back(id);
  seen.emplace(id, 0);
  for (size_t h = 0; h < a.elements.size(); ++h) {
    for (const auto& g : gens) {
      Mat5 next = mat5_mul(a.elements[h], g);
      if (seen.emplace(next, static_cast<int>(a.elements.size())).second) {
        a.elements.push_back(next);
        if (a.elements.size() > 200)
          fail("OrderBoundExceeded", "lattice Weyl closure exceeded the expected order");
      }
    }
  }
  pin(a.elements.size() == 120, "lattice Weyl group must have order 120");

  const Cls k = canonical_class();
  std::set<std::vector<int>> distinct;
  for (const auto& g : a.elements) {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        Cls ei{}, ej{};
        ei[i] = 1;
        ej[j] = 1;
        pin(cls_dot(mat5_apply(g, ei), mat5_apply(g, ej)) == cls_dot(ei, ej),
            "the Weyl action must preserve the intersection form");
      }
    pin(mat5_apply(g, k) == k, "the Weyl action must fix the canonical class");
    std::vector<int> images;
    for (const auto& c : m.conics)
      images.push_back(index_of_class(m.conics, mat5_apply(g, c), "conic list"));
    distinct.insert(images);
    a.conic_perms.push_back(Perm::from_images(images));
  }
  pin(distinct.size() == 120, "the conic action must be faithful");

  // Orbit and stabilizer of the first line.
  std::set<Cls> line_orbit;
  size_t line_stab = 0;
  for (const auto& g : a.elements) {
    Cls img = mat5_apply(g, m.lines[0]);
    index_of_class(m.lines, img, "line list");
    line_orbit.insert(img);
    if (img == m.lines[0]) ++line_stab;
  }
  a.line_orbit_size = line_orbit.size();
  a.line_stab_order = line_stab;

  // Orbit and stabilizer of the first intersecting pair.
  auto pair_image = [&](const Mat5& g, const std::pair<int, int>& p) {
    int i = index_of_class(m.lines, mat5_apply(g, m.lines[static_cast<size_t>(p.first)]),
                           "line list");
    int j = index_of_class(m.lines, mat5_apply(g, m.lines[static_cast<size_t>(p.second)]),
                           "line list");
    return std::make_pair(std::min(i, j), std::max(i, j));
  };
  std::set<std::pair<int, int>> xi_orbit;
  size_t xi_stab = 0;
  for (const auto& g : a.elements) {
    auto img = pair_image(g, m.xi[0]);
    xi_orbit.insert(img);
    if (img == m.xi[0]) ++xi_stab;
  }
  a.xi_orbit_size = xi_orbit.size();
  a.xi_stab_order = xi_stab;
  return a;
}

std::vector<LatticeTraceRow> lattice_lefschetz(const WeylAction& a) {
  std::map<std::vector<int>, LatticeTraceRow> rows;
  for (size_t i = 0; i < a.elements.size(); ++i) {
    const Perm& p = a.conic_perms[i];
    std::vector<int> type = p.cycle_type();
    long tr = 0;
    for (int d = 0; d < 5; ++d) tr += a.elements[i][d][d];
    auto [it, fresh] = rows.try_emplace(type);
    LatticeTraceRow& row = it->second;
    if (fresh) {
      row.cycle_type = type;
      row.class_label = p.cycle_string();
      row.element_order = p.order();
      row.pic_trace = tr;
      row.lefschetz = 2 + tr;
    } else if (row.pic_trace != tr) {
      fail("InternalInconsistency", "lattice trace must be a class function");
    }
    ++row.class_size;
  }
  std::vector<LatticeTraceRow> out;
  for (auto& [type, row] : rows) out.push_back(std::move(row));
  std::sort(out.begin(), out.end(), [](const LatticeTraceRow& x, const LatticeTraceRow& y) {
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    if (x.class_size != y.class_size) return x.class_size < y.class_size;
    return x.cycle_type < y.cycle_type;
  });
  return out;
}

IncidenceCensus incidence_census(const IncidenceModel& m) {
  IncidenceCensus c;
  c.products_binary = c.per_cubic_six = c.own_lines_incident = true;
  c.cp_is_conic = c.rp_is_cubic = true;
  const Cls minus_k = cls_neg(canonical_class());

  std::vector<int> conic_of(m.xi.size(), -1);
  for (size_t p = 0; p < m.xi.size(); ++p) {
    Cls cp = cls_add(m.lines[static_cast<size_t>(m.xi[p].first)],
                     m.lines[static_cast<size_t>(m.xi[p].second)]);
    bool found = false;
    for (size_t q = 0; q < m.conics.size(); ++q)
      if (m.conics[q] == cp) {
        conic_of[p] = static_cast<int>(q);
        found = true;
      }
    if (!found) c.cp_is_conic = false;
  }

  c.approx_classes.assign(m.conics.size(), {});
  for (size_t p = 0; p < m.xi.size(); ++p)
    if (conic_of[p] >= 0)
      c.approx_classes[static_cast<size_t>(conic_of[p])].push_back(static_cast<int>(p));

  for (size_t p = 0; p < m.xi.size(); ++p) {
    Cls cp = cls_add(m.lines[static_cast<size_t>(m.xi[p].first)],
                     m.lines[static_cast<size_t>(m.xi[p].second)]);
    Cls rp = cls_add(minus_k, cls_neg(cp));
    if (std::find(m.cubics.begin(), m.cubics.end(), rp) == m.cubics.end())
      c.rp_is_cubic = false;

    // Lines of the sibling members of P's approximate-equality class.
    std::set<int> sibling_lines;
    if (conic_of[p] >= 0)
      for (int q : c.approx_classes[static_cast<size_t>(conic_of[p])])
        if (q != static_cast<int>(p)) {
          sibling_lines.insert(m.xi[static_cast<size_t>(q)].first);
          sibling_lines.insert(m.xi[static_cast<size_t>(q)].second);
        }

    int ones = 0;
    bool own1 = false, own2 = false;
    for (int l = 0; l < static_cast<int>(m.lines.size()); ++l) {
      long d = cls_dot(rp, m.lines[static_cast<size_t>(l)]);
      if (d != 0 && d != 1) c.products_binary = false;
      if (d != 1) continue;
      ++ones;
      ++c.total;
      if (l == m.xi[p].first || l == m.xi[p].second) {
        ++c.leftover;
        if (l == m.xi[p].first) own1 = true;
        if (l == m.xi[p].second) own2 = true;
      } else if (sibling_lines.count(l)) {
        ++c.at_xi;
      }
    }
    if (ones != 6) c.per_cubic_six = false;
    if (!own1 || !own2) c.own_lines_incident = false;
  }
  return c;
}

}  // namespace icoq
