#pragma once
// Named bases for the catalog rings (s, u, x, y, a, b, c, phi...), and a small expression parser.

#include <map>
#include <string>
#include <vector>

#include "tate/tate.hpp"

namespace tate {

struct UnknownLabel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// cyclic2 = C2; cyclic = other cyclic p-groups (and p odd); V4; Q8; D8; generic (raw labels h<n>_<j>)
std::string ring_kind(const GroupTable& G, uint32_t p);

struct NamedBasis {
  std::string kind;
  int lo = 0, hi = 0;
  std::map<int, Mat> to_raw;    // rows: named basis classes in raw coordinates
  std::map<int, Mat> from_raw;  // raw row vector * from_raw = named coefficients
  std::map<int, std::vector<std::string>> labels;
  std::map<std::string, TateClass> generators;  // ring generators and their inverses ("s^-1")

  bool covers(int n) const { return to_raw.count(n) > 0; }
  std::vector<uint32_t> coords(const TateClass& a) const;
  TateClass element(int n, int j) const;
  TateClass get(const std::string& label) const;  // any basis label; throws UnknownLabel
  int degree_of(const std::string& label) const;
  std::string describe(const TateClass& a) const;  // "phi12+phi21", "0", "2*s^3"
};

// names classes in degrees [lo, hi]; defaults to every degree whose dual degree is also resolved
NamedBasis named_basis(const TateRing& R);
NamedBasis named_basis(const TateRing& R, int lo, int hi);

// expression over labels: terms joined by '+', factors by '*', factors raised by '^' (negative powers of
// invertible generators allowed), integer coefficients as leading factors
TateClass parse_class(const NamedBasis& B, const TateRing& R, const std::string& expr);

// D8 only: the two degree-one classes with vanishing product
struct D8Generators {
  TateClass a, b, c;
  bool c_pinned = false;  // true when Sq^1 c = (a+b) c picks c uniquely
};
D8Generators d8_generators(const TateRing& R);

}  // namespace tate
