#pragma once

#include <string>
#include <vector>

namespace xprod {

/// Finite group given by its multiplication table. Element 0 is always the
/// identity; presets renumber their elements so this holds.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inverses;
  std::string label;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverses[a]; }
};

/// Subgroup as a sorted list of element indices of its parent group.
struct Subgroup {
  std::vector<int> elements;  // sorted ascending, contains 0
  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
};

FiniteGroup make_cyclic(int n);
FiniteGroup make_product_of_cyclics(const std::vector<int>& ns);
FiniteGroup make_symmetric(int n);  // permutations of n <= 4 letters, lex order
FiniteGroup make_group_from_table(std::vector<std::vector<int>> table,
                                  std::string label = "");

/// Order of each element (smallest k >= 1 with g^k = 1).
std::vector<int> element_orders(const FiniteGroup& g);

/// Smallest subgroup containing the given elements.
Subgroup closure(const FiniteGroup& g, std::vector<int> gens);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

/// One subgroup <g> per element, deduplicated, sorted by size then
/// lexicographically.
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g);

/// Every subgroup, by brute-force closure search. Only for order <= 24.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// A small generating set together with, for every element, a word in those
/// generators (used to enumerate homomorphisms out of the group).
struct GeneratingSet {
  std::vector<int> generators;
  std::vector<std::vector<int>> words;  // words[g] = generator indices, empty for identity
};
GeneratingSet generating_set(const FiniteGroup& g);

}  // namespace xprod
