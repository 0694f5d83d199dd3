#pragma once
// Axiom-level total operation Q (and beta Q at odd p) on catalog ring presentations, as truncated series.

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tate {

struct MissingGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TruncationMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// normal-form monomial; the meaning of the fields depends on the ring (m[0] is a kind tag)
using Mono = std::array<int, 4>;
using Poly = std::map<Mono, uint32_t>;

uint32_t binom_general(long long i, long long j, uint32_t p);

struct SymGenerator {
  std::string name;
  int degree;
  bool invertible, exterior;
  Mono mono;
};

class SymbolicRing {
 public:
  virtual ~SymbolicRing() = default;
  const std::string& name() const { return name_; }
  uint32_t prime() const { return p_; }
  const std::vector<SymGenerator>& generators() const { return gens_; }

  virtual int degree(const Mono& m) const = 0;
  virtual std::string label(const Mono& m) const = 0;
  virtual Poly mul(const Mono& a, const Mono& b) const = 0;
  // generator powers whose product is m (exponents may be negative for invertible generators)
  virtual std::vector<std::pair<Mono, int>> factor(const Mono& m) const = 0;
  // Q(g^e) and beta Q(g^e) for a generator monomial g, terms of degree >= trunc
  virtual Poly q_power(const Mono& g, int e, int trunc) const = 0;
  virtual Poly bq_power(const Mono& g, int e, int trunc) const;
  // normal-form basis of one degree (empty outside the ring's support)
  virtual std::vector<Mono> basis(int n) const = 0;
  // labels that are not products of generators, like phi12 or phi{a*c}; empty when unknown
  virtual bool parse_atom(const std::string& s, Mono& out) const;

  Poly unit() const;
  Poly mono(const Mono& m) const { return Poly{{m, 1}}; }
  Poly add(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, uint32_t c) const;
  Poly mul(const Poly& a, const Poly& b, int trunc = -1000000) const;
  Poly part(const Poly& a, int n) const;  // homogeneous component
  int top_degree(const Poly& a) const;    // throws on zero
  std::string describe(const Poly& a) const;
  Poly parse(const std::string& expr) const;

  Poly total_q(const Poly& x, int trunc) const;
  Poly total_bq(const Poly& x, int trunc) const;  // odd p only
  // single operations; degree drop s at p = 2, 2s(p-1) at odd p (2s(p-1) - 1 for beta Q_s)
  int q_target(int n, int s) const;
  int bq_target(int n, int s) const;
  Poly Q(const Poly& x, int s) const;
  Poly BQ(const Poly& x, int s) const;

 protected:
  SymbolicRing(std::string name, uint32_t p) : name_(std::move(name)), p_(p) {}
  std::string name_;
  uint32_t p_;
  std::vector<SymGenerator> gens_;

 private:
  Poly q_mono(const Mono& m, int trunc) const;
  Poly bq_mono(const Mono& m, int trunc) const;
  int upper(const Mono& g, int e) const;  // degree bound for Q(g^e)
};

// C2, C4, C8, ... (p = 2), Cq for odd prime q (p = q), Q8, V4, D8
std::unique_ptr<SymbolicRing> symbolic_ring(const std::string& name, uint32_t p = 2);

// Q(g^-1) for an invertible generator g: the series X with top term g^-p and Q(g) X = 1
Poly solve_inverse_q(const SymbolicRing& R, const SymGenerator& g, int trunc);

// Q_r Q_s (x) against the Adem sum; needs r > p s
struct AdemReport {
  bool ok = true;
  Poly lhs, rhs;
};
AdemReport adem_check(const SymbolicRing& R, int r, int s, const Poly& x);
// Q_r beta Q_s (x) against its Adem sum (odd p, r >= p s)
AdemReport adem_beta_check(const SymbolicRing& R, int r, int s, const Poly& x);
// Q(xy) = Q(x) Q(y) down to trunc (and the beta Q form at odd p)
bool cartan_check(const SymbolicRing& R, const Poly& x, const Poly& y, int trunc);

// Kuenneth product table on M*(G1 x ... x Gr): basis tensors of negative-degree basis monomials.
// A tensor of classes of Tate degrees d_k has Tate degree sum(d_k + 1) - 1.
using Tensor = std::vector<Mono>;
using TensorPoly = std::map<Tensor, uint32_t>;
class KunnethTable {
 public:
  explicit KunnethTable(std::vector<const SymbolicRing*> factors);
  int degree(const Tensor& t) const;
  std::string label(const Tensor& t) const;
  TensorPoly total_q(const Tensor& t, int trunc) const;
  TensorPoly Q(const Tensor& t, int s) const;
  const std::vector<const SymbolicRing*>& factors() const { return f_; }

 private:
  std::vector<const SymbolicRing*> f_;
};

}  // namespace tate
