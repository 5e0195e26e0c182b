#include "xprod/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "xprod/errors.hpp"

namespace xprod {

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

namespace {

void validate_table(const FiniteGroup& g) {
  const int n = g.order;
  if (n < 1) throw InvalidTable("group order must be positive");
  if (static_cast<int>(g.table.size()) != n)
    throw InvalidTable("table has wrong number of rows");
  for (const auto& row : g.table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidTable("table has a row of wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidTable("table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (g.table[0][a] != a || g.table[a][0] != a) {
      std::ostringstream os;
      os << "element 0 is not an identity (witness g=" << a << ")";
      throw InvalidTable(os.str());
    }
  }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (g.table[a][b] == 0 && g.table[b][a] == 0) { found = true; break; }
    if (!found) {
      std::ostringstream os;
      os << "no inverse for " << a;
      throw InvalidTable(os.str());
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) {
          std::ostringstream os;
          os << "associativity fails at triple (" << a << "," << b << "," << c << ")";
          throw InvalidTable(os.str());
        }
}

std::vector<int> compute_inverses(const FiniteGroup& g) {
  std::vector<int> inv(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.table[a][b] == 0) { inv[a] = b; break; }
  return inv;
}

}  // namespace

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw InvalidTable("cyclic(n) needs n >= 1");
  FiniteGroup g;
  g.order = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  g.inverses = compute_inverses(g);
  g.label = "Z" + std::to_string(n);
  return g;
}

FiniteGroup make_product_of_cyclics(const std::vector<int>& ns) {
  if (ns.empty()) throw InvalidTable("product_of_cyclics needs at least one factor");
  long long order = 1;
  for (int n : ns) {
    if (n < 1) throw InvalidTable("cyclic factor must be >= 1");
    order *= n;
    if (order > 10000) throw OrderTooLarge("product group too large");
  }
  const int k = static_cast<int>(ns.size());
  const int n = static_cast<int>(order);
  // lexicographic encoding: index = a_1 * (n_2*...*n_k) + ... + a_k
  std::vector<int> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * ns[i + 1];
  FiniteGroup g;
  g.order = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int r = 0;
      for (int i = 0; i < k; ++i) {
        int ai = (a / stride[i]) % ns[i];
        int bi = (b / stride[i]) % ns[i];
        r += ((ai + bi) % ns[i]) * stride[i];
      }
      g.table[a][b] = r;
    }
  g.inverses = compute_inverses(g);
  std::string lab;
  for (int i = 0; i < k; ++i) lab += (i ? "x" : "") + ("Z" + std::to_string(ns[i]));
  g.label = lab;
  return g;
}

FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 4) throw OrderTooLarge("symmetric(n) supports 1 <= n <= 4");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // lex order puts the identity first
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int m = static_cast<int>(perms.size());
  FiniteGroup g;
  g.order = m;
  g.table.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      g.table[a][b] = index[c];
    }
  g.inverses = compute_inverses(g);
  g.label = "S" + std::to_string(n);
  return g;
}

FiniteGroup make_group_from_table(std::vector<std::vector<int>> table, std::string label) {
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  g.table = std::move(table);
  validate_table(g);
  g.inverses = compute_inverses(g);
  g.label = label.empty() ? "G" + std::to_string(g.order) : std::move(label);
  return g;
}

std::vector<int> element_orders(const FiniteGroup& g) {
  std::vector<int> ord(g.order);
  for (int a = 0; a < g.order; ++a) {
    int x = a, k = 1;
    while (x != 0) { x = g.mul(x, a); ++k; }
    ord[a] = k;
  }
  return ord;
}

Subgroup closure(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> elems{0};
  for (int x : gens) elems.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(elems.begin(), elems.end());
    for (int a : cur)
      for (int b : cur) {
        if (elems.insert(g.mul(a, b)).second) grew = true;
        if (elems.insert(g.inv(a)).second) grew = true;
      }
  }
  Subgroup h;
  h.elements.assign(elems.begin(), elems.end());
  return h;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::set<int> s(elements.begin(), elements.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(g.mul(a, b))) return false;
  for (int a : s)
    if (!s.count(g.inv(a))) return false;
  return true;
}

namespace {
bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.elements.size() != b.elements.size())
    return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}
}  // namespace

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  for (int a = 0; a < g.order; ++a) {
    std::set<int> pow{0};
    int x = a;
    while (!pow.count(x)) { pow.insert(x); x = g.mul(x, a); }
    seen.insert(std::vector<int>(pow.begin(), pow.end()));
  }
  std::vector<Subgroup> out;
  for (const auto& e : seen) out.push_back(Subgroup{e});
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  if (g.order > 24) throw OrderTooLarge("all_subgroups is capped at order 24");
  std::set<std::vector<int>> found;
  found.insert({0});
  // grow every known subgroup by one extra generator until nothing new appears
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (const auto& h : cur) {
      std::set<int> have(h.begin(), h.end());
      for (int x = 1; x < g.order; ++x) {
        if (have.count(x)) continue;
        std::vector<int> gens = h;
        gens.push_back(x);
        Subgroup c = closure(g, gens);
        if (found.insert(c.elements).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : found) out.push_back(Subgroup{e});
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

GeneratingSet generating_set(const FiniteGroup& g) {
  GeneratingSet gs;
  gs.words.assign(g.order, {});
  Subgroup cl = closure(g, {});
  while (static_cast<int>(cl.elements.size()) < g.order) {
    int next = -1;
    for (int x = 0; x < g.order; ++x)
      if (!cl.contains(x)) { next = x; break; }
    gs.generators.push_back(next);
    cl = closure(g, gs.generators);
  }
  // breadth-first words: identity has the empty word
  std::vector<int> queue{0};
  std::vector<char> visited(g.order, 0);
  visited[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int cur = queue[qi];
    for (size_t gi = 0; gi < gs.generators.size(); ++gi) {
      int nxt = g.mul(cur, gs.generators[gi]);
      if (!visited[nxt]) {
        visited[nxt] = 1;
        gs.words[nxt] = gs.words[cur];
        gs.words[nxt].push_back(static_cast<int>(gi));
        queue.push_back(nxt);
      }
    }
  }
  return gs;
}

}  // namespace xprod
