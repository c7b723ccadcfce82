#include "icoq/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace icoq {

Perm Perm::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v])
      fail("IndexOutOfRange", "image list is not a permutation");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i] - 1, b = cyc[(i + 1) % cyc.size()] - 1;
      if (a < 0 || a >= n || b < 0 || b >= n)
        fail("IndexOutOfRange", "cycle point outside 1.." + std::to_string(n));
      img[a] = b;
    }
  }
  return from_images(std::move(img));
}

Perm Perm::parse(int n, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  size_t at = 0;
  auto skip = [&] {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  };
  skip();
  if (at < text.size() && text[at] == 'e') {
    ++at;
    skip();
    if (at != text.size()) fail("SyntaxError", "trailing text after the identity word");
    return Perm(n);
  }
  while (at < text.size()) {
    if (text[at] != '(') fail("SyntaxError", "expected '(' in cycle word");
    ++at;
    std::vector<int> cyc;
    skip();
    while (at < text.size() && text[at] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[at])))
        fail("SyntaxError", "expected a point number in cycle word");
      int v = 0;
      while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at])))
        v = 10 * v + (text[at++] - '0');
      cyc.push_back(v);
      skip();
      if (at < text.size() && (text[at] == ',' || text[at] == ' ')) {
        ++at;
        skip();
      }
    }
    if (at == text.size()) fail("SyntaxError", "unterminated cycle");
    ++at;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(n, cycles);
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) fail("IndexOutOfRange", "composing permutations of different degrees");
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[o.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
  return r;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

int Perm::order() const {
  int ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

bool Perm::even() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0, x = static_cast<int>(i);
    while (!seen[x]) {
      seen[x] = true;
      x = img_[x];
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int x = static_cast<int>(i);
    while (!seen[x]) {
      seen[x] = true;
      cyc.push_back(x + 1);
      x = img_[x];
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "e";
  std::string s;
  for (const auto& cyc : cs) {
    s += "(";
    for (size_t i = 0; i < cyc.size(); ++i) s += (i ? " " : "") + std::to_string(cyc[i]);
    s += ")";
  }
  return s;
}

// ---------------------------------------------------------------------------

PermGroup PermGroup::closure(int degree, std::vector<Perm> gens, size_t order_bound) {
  std::set<Perm> seen;
  seen.insert(Perm(degree));
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > order_bound)
            fail("OrderBoundExceeded",
                 "closure exceeded the order bound " + std::to_string(order_bound));
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Perm> elements(seen.begin(), seen.end());
  return PermGroup(degree, std::move(elements), std::move(gens));
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, {{1, 2}}));
  if (n >= 3) {
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 1);
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  size_t bound = 1;
  for (int i = 2; i <= n; ++i) bound *= i;
  return closure(n, std::move(gens), bound);
}

PermGroup PermGroup::alternating(int n) {
  std::vector<Perm> gens;
  for (int i = 3; i <= n; ++i) gens.push_back(Perm::from_cycles(n, {{1, 2, i}}));
  size_t bound = 1;
  for (int i = 2; i <= n; ++i) bound *= i;
  return closure(n, std::move(gens), bound / 2 + 1);
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<PermGroup::ConjClass> PermGroup::conjugacy_classes() const {
  std::set<Perm> unseen(elements_.begin(), elements_.end());
  std::vector<ConjClass> classes;
  while (!unseen.empty()) {
    Perm rep = *unseen.begin();
    std::set<Perm> orbit;
    for (const auto& g : elements_) orbit.insert(g * rep * g.inverse());
    Perm least = *orbit.begin();
    for (const auto& x : orbit) unseen.erase(x);
    classes.push_back({least, orbit.size(), least.order()});
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.rep < b.rep;
  });
  return classes;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Perm& x) { return g.contains(x); });
}

PermGroup PermGroup::normalizer_of(const PermGroup& h) const {
  std::vector<Perm> members;
  for (const auto& g : elements_) {
    Perm gi = g.inverse();
    bool normalizes = std::all_of(h.elements_.begin(), h.elements_.end(), [&](const Perm& x) {
      return h.contains(g * x * gi);
    });
    if (normalizes) members.push_back(g);
  }
  std::sort(members.begin(), members.end());
  return PermGroup(degree_, std::move(members), {});
}

PermGroup PermGroup::centralizer_of(const Perm& x) const {
  std::vector<Perm> members;
  for (const auto& g : elements_)
    if (g * x == x * g) members.push_back(g);
  std::sort(members.begin(), members.end());
  return PermGroup(degree_, std::move(members), {});
}

PermGroup PermGroup::sylow(unsigned p) const {
  size_t target = 1;
  while (order() % (target * p) == 0) target *= p;
  if (target == 1) return PermGroup(degree_, {Perm(degree_)}, {});
  auto is_p_power = [&](size_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };
  // Seed with an element of exact order p.
  Perm seed(degree_);
  for (const auto& g : elements_) {
    int ord = g.order();
    if (ord % static_cast<int>(p) != 0) continue;
    Perm q(degree_);
    for (int i = 0; i < ord / static_cast<int>(p); ++i) q = q * g;
    seed = q;
    break;
  }
  PermGroup h = closure(degree_, {seed}, order());
  // A p-subgroup below Sylow size always extends inside its own normalizer.
  while (h.order() < target) {
    PermGroup n = normalizer_of(h);
    bool grew = false;
    for (const auto& g : n.elements_) {
      if (h.contains(g) || !is_p_power(g.order())) continue;
      std::vector<Perm> gens = h.elements_;
      gens.push_back(g);
      PermGroup h2 = closure(degree_, gens, order());
      if (is_p_power(h2.order()) && h2.order() > h.order()) {
        h = std::move(h2);
        grew = true;
        break;
      }
    }
    if (!grew) fail("InternalInconsistency", "sylow growth stalled below the target order");
  }
  return h;
}

// ---------------------------------------------------------------------------
// subgroup census

namespace {

bool all_commute(const std::vector<Perm>& elements) {
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      if (!(elements[i] * elements[j] == elements[j] * elements[i])) return false;
  return true;
}

size_t center_order(const std::vector<Perm>& elements) {
  size_t c = 0;
  for (const auto& x : elements) {
    bool central = std::all_of(elements.begin(), elements.end(),
                               [&](const Perm& g) { return g * x == x * g; });
    if (central) ++c;
  }
  return c;
}

std::map<int, int> order_histogram(const std::vector<Perm>& elements) {
  std::map<int, int> h;
  for (const auto& g : elements) ++h[g.order()];
  return h;
}

}  // namespace

std::string iso_fingerprint(const std::vector<Perm>& elements) {
  size_t n = elements.size();
  auto hist = order_histogram(elements);
  bool abelian = all_commute(elements);
  bool cyclic = hist.count(static_cast<int>(n)) > 0;
  if (cyclic) return "mu" + std::to_string(n);
  if (n == 4 && abelian) return "mu2xmu2";  // exponent 2
  if (n == 6 && !abelian) return "S3";
  if (n == 8 && !abelian && hist[2] == 5 && hist[4] == 2) return "D4";
  if (n == 10 && !abelian && hist[2] == 5) return "D5";
  if (n == 12 && !abelian && hist[6] == 2 && center_order(elements) == 2) return "D6";
  if (n == 12 && !abelian && hist[2] == 3 && hist[3] == 8) return "A4";
  if (n == 20 && !abelian && hist[4] == 10 && hist[5] == 4) return "mu5:mu4";
  if (n == 24 && hist[2] == 9 && hist[3] == 8 && hist[4] == 6) return "S4";
  if (n == 60 && hist[2] == 15 && hist[3] == 20 && hist[5] == 24) return "A5";
  std::string h;
  for (auto [o, c] : hist) h += std::to_string(o) + ":" + std::to_string(c) + " ";
  fail("UnrecognizedType", "group of order " + std::to_string(n) +
                               " with order histogram {" + h + "} is outside the catalogue");
}

std::vector<SubgroupClassRecord> PermGroup::subgroup_census() const {
  // Enumerate all subgroups by breadth-first closure growth, dedup by the
  // sorted element list.
  using Key = std::vector<Perm>;
  std::map<Key, std::vector<Perm>> found;  // elements -> generating set used
  Key trivial{Perm(degree_)};
  found.emplace(trivial, std::vector<Perm>{});
  std::vector<Key> frontier{trivial};
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (const auto& h : frontier) {
      for (const auto& g : elements_) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<Perm> gens = found[h];
        gens.push_back(g);
        PermGroup k = closure(degree_, gens, order());
        Key key = k.elements();
        if (found.emplace(key, gens).second) next.push_back(std::move(key));
      }
    }
    frontier = std::move(next);
  }

  // Group into conjugacy classes of subgroups.
  std::set<Key> unseen;
  for (const auto& [k, gens] : found) unseen.insert(k);
  std::vector<SubgroupClassRecord> records;
  while (!unseen.empty()) {
    Key rep = *unseen.begin();
    std::set<Key> orbit;
    for (const auto& g : elements_) {
      Perm gi = g.inverse();
      Key conj;
      conj.reserve(rep.size());
      for (const auto& x : rep) conj.push_back(g * x * gi);
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    for (const auto& k : orbit) unseen.erase(k);
    if (rep.size() == 1 || rep.size() == order()) continue;  // skip trivial and whole
    SubgroupClassRecord r;
    r.order = rep.size();
    r.label = iso_fingerprint(rep);
    r.in_alternating =
        std::all_of(rep.begin(), rep.end(), [](const Perm& x) { return x.even(); });
    r.count = orbit.size();
    PermGroup h(degree_, rep, found[rep]);
    r.normalizer_order = normalizer_of(h).order();
    r.generators = found[rep];
    r.elements = rep;
    records.push_back(std::move(r));
  }
  std::sort(records.begin(), records.end(),
            [](const SubgroupClassRecord& a, const SubgroupClassRecord& b) {
              if (a.order != b.order) return a.order < b.order;
              if (a.label != b.label) return a.label < b.label;
              return a.in_alternating < b.in_alternating;
            });
  return records;
}

}  // namespace icoq
