#pragma once
// Property suites shared by the CLI, the Python module and the acceptance runner.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tate/duality.hpp"
#include "tate/named.hpp"

namespace tate {

// Q_s of every named basis class of degree in [lo, hi], s in [smin, smax], target kept in [lo, hi];
// keys "label|s", values as described by the named basis
using QTable = std::map<std::string, std::string>;
QTable q_table(const CLift& C, const NamedBasis& B, int lo, int hi, int smin, int smax);

// Q_s(xy) = sum_{a+b=s} Q_a(x) Q_b(y) on basis pairs of [lo, hi]; only targets whose factors are resolved
CheckReport cartan_suite(const CLift& C, int lo, int hi);
// Q_s(x) = 0 for s < -|x| and P_0(x) = x^2
CheckReport vanishing_suite(const CLift& C, int lo, int hi);
CheckReport p0_suite(const CLift& C, int lo, int hi);
// chain-level Adem relations at p = 2 on random classes of [lo, hi], |r|, |s| <= range
CheckReport adem_chain_suite(const CLift& C, int lo, int hi, int range, uint64_t seed, int samples = 6);
// symbolic Adem relations on the catalog ring's generators for |r|, |s| <= range (both forms at odd p)
CheckReport adem_symbolic_suite(const std::string& ring, uint32_t p, int range = 6);
// classical cup-i squares on the positive resolution against engine C on H^0..H^maxdeg, plus Sq^1 x = x^2 on H^1
CheckReport steenrod_suite(const CLift& C, int maxdeg);
// engine B against engine C on negative basis classes of degree >= lo, 0 <= s <= depth
CheckReport engine_suite(const CLift& C, int lo, int depth);
// gram matrices invertible on [lo, hi] and every Q_i^* : H^{i+j} -> H^j with i + j <= jmax adjoint to Q_i
CheckReport duality_suite(const CLift& C, int lo, int hi, int jmax);
CheckReport productive_suite(const GroupPtr& G, int lo, int hi, uint64_t seed);
// q_table on [lo, hi] computed in the ring (lo, hi) and again in (lo - extra, hi + extra)
CheckReport window_suite(const GroupPtr& G, int lo, int hi, int smin, int smax, int extra = 4);

struct SuiteOptions {
  std::string group;  // catalog name, needed by the symbolic and product suites
  GroupPtr G;         // the group itself (from the catalog or a table file)
  int lo = -3, hi = 3;
  int depth = 4;
  uint64_t seed = 1;
  uint32_t prime = 2;
};
// cartan, adem, steenrod-agreement, engine-agreement, kunneth, duality-perfectness, thm52c,
// productive-equivalence, window-independence
const std::vector<std::string>& suite_names();
CheckReport run_named_suite(const std::string& suite, const SuiteOptions& o);

}  // namespace tate
