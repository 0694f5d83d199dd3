#pragma once
// Finite groups as multiplication tables.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tate {

struct UnknownGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MalformedTable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupTable {
  std::string name;
  int n = 1;
  std::vector<int> mult;  // mult[a*n+b] = a*b
  int identity = 0;
  std::vector<int> inv;
  std::vector<std::string> names;

  int operator()(int a, int b) const { return mult[size_t(a) * n + b]; }
  int order() const { return n; }
  bool is_abelian() const;
  int element_order(int g) const;
  // smallest q with |G| a power of q, or 0 if |G| is not a prime power (1 for the trivial group)
  int prime_power_base() const;
  bool is_p_group(int p) const;
  std::vector<int> generators() const;  // greedy generating set
  int exponent() const;
  void validate() const;  // throws MalformedTable
};

using GroupPtr = std::shared_ptr<const GroupTable>;

GroupPtr make_group(std::string name, int n, std::vector<int> mult, std::vector<std::string> names);
GroupPtr cyclic_group(int n);
GroupPtr quaternion_group();
GroupPtr dihedral8_group();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
// C2, C4, C8, Cn, Cp(p), V4, Q8, D8, and products like C2xC2xC2 or V4xC2
GroupPtr group_catalog(const std::string& name);
GroupPtr parse_group_table(const std::string& text, const std::string& name = "table");
GroupPtr load_group_table(const std::string& path);

struct Embedding {
  GroupPtr source, target;
  std::vector<int> map;
  void validate() const;
};

// inclusions of the factors of direct_product(a, b)
Embedding factor_inclusion(const GroupPtr& prod, const GroupPtr& a, const GroupPtr& b, int which);
Embedding identity_embedding(const GroupPtr& g);

}  // namespace tate
