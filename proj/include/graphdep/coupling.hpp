#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphdep/graph.hpp"
#include "graphdep/profile.hpp"
#include "graphdep/rational.hpp"

namespace graphdep {

inline constexpr int kMaxJointCoordinates = 8;
inline constexpr int kMaxAlphabet = 6;

/// An assignment x_1..x_n with x_k in {0, .., radix_k - 1}.
using Assignment = std::vector<int>;

/// Exact law of (X_1, .., X_n) over a product of small alphabets.
/// The pmf is dense and indexed mixed-radix with coordinate 1 most
/// significant, so the assignments sharing a prefix form a contiguous slice.
class FiniteJoint {
 public:
  FiniteJoint() = default;
  /// Throws InputError unless the pmf is nonnegative, sums to exactly 1 and
  /// matches the radix; ScaleError beyond the coordinate or alphabet caps.
  FiniteJoint(std::vector<int> radix, std::vector<Rational> pmf, Graph dependency);

  int size() const { return static_cast<int>(radix_.size()); }
  const std::vector<int>& radix() const { return radix_; }
  const std::vector<Rational>& pmf() const { return pmf_; }
  const Graph& dependency() const { return dependency_; }
  std::size_t support_size() const { return pmf_.size(); }

  std::size_t index(std::span<const int> x) const;
  Assignment decode(std::size_t index) const;
  const Rational& probability(std::span<const int> x) const { return pmf_[index(x)]; }

  /// Law of the coordinates in `coordinates` (1-based, in the given order),
  /// as a dense table over their own mixed radix.
  std::vector<Rational> marginal(std::span<const int> coordinates) const;

  /// Coordinates reordered so that new coordinate k is old coordinate
  /// order[k - 1]; the dependency graph is relabeled to match.
  FiniteJoint permuted(std::span<const int> order) const;

 private:
  std::vector<int> radix_;
  std::vector<std::size_t> stride_;
  std::vector<Rational> pmf_;
  Graph dependency_;
};

/// X_v = emit(v, vertex latent of v, latents of the edges at v), with edge
/// latents listed by ascending neighbour. All latents are independent, so the
/// resulting joint is dependent on `graph` by construction.
struct LatentTreeSpec {
  using Emit = std::function<int(int vertex, int vertex_latent, std::span<const int> edge_latents)>;

  Graph graph;
  std::vector<int> alphabet;                         // |Omega_v| per vertex
  std::vector<std::vector<Rational>> vertex_latents;  // empty: a constant latent
  std::vector<std::vector<Rational>> edge_latents;    // per graph.edges(); empty: constant
  Emit emit;
};

/// (vertex latent + sum of edge latents) mod |Omega_v|.
LatentTreeSpec::Emit sum_mod_emit(std::vector<int> alphabet);

/// Exact pmf by enumerating every latent configuration. ScaleError past
/// 2^24 latent configurations or the joint caps.
FiniteJoint build_tree_joint(const LatentTreeSpec& spec);

struct DependencyReport {
  bool ok = true;
  std::vector<int> s;  // violating pair, empty when ok
  std::vector<int> t;
  Rational deviation = 0;  // total variation between the joint law on s u t and the product law
};

/// Checks every S against its largest admissible partner T = V \ N+(S);
/// smaller partners follow by marginalization.
DependencyReport verify_dependency(const FiniteJoint& joint, const Graph& graph);

/// Law of the free coordinates given fixed[k] (nullopt = free). The result's
/// coordinates are the free ones in ascending order. Throws InputError when
/// the conditioning event is null.
FiniteJoint conditional(const FiniteJoint& joint, std::span<const std::optional<int>> fixed);

/// Coordinates of a CouplingPair and of the joint passed to the coupling
/// functions are positions of an OrderedTree: use joint.permuted(tree.labels).
struct CouplingContext {
  int i = 1;
  Assignment prefix;  // x_1..x_{i-1}
  int a = 0;          // x_i on the Y side
  int b = 0;          // x'_i on the Z side
};

struct CoupledOutcome {
  Assignment y;
  Assignment z;
  Rational p;
};

struct CouplingPair {
  CouplingContext context;
  int parent = 0;  // p_i, 0 for a root
  std::vector<CoupledOutcome> outcomes;  // support only
};

enum class CouplingVariant {
  kConstruction,
  /// Draws Z_{p_i} from the unconditional law of X_{p_i}; breaks the Z marginal.
  kCorruptedMarginal,
};

/// Y follows the (prefix, a) conditional. Z copies Y on S_i and draws
/// Z_{p_i} from its (prefix, b, Y_{S_i}) conditional, coupled maximally with
/// Y_{p_i}. Throws InputError for a null context, KindError when X_{S_i}
/// depends on x_i (the joint is not dependent on the tree).
CouplingPair build_coupling(const FiniteJoint& joint, const OrderedTree& tree, const CouplingContext& context,
                            CouplingVariant variant = CouplingVariant::kConstruction);

/// max(TV(Y_{[i+1,n]}, law given (prefix, a)), TV(Z_{[i+1,n]}, law given (prefix, b))).
Rational verify_coupling_marginals(const CouplingPair& pair, const FiniteJoint& joint);

/// P(Y_j != Z_j) summed over j outside {i, p_i}, plus any violation of the
/// fixed prefix on either side. Zero for a correct construction.
Rational coupling_structure_defect(const CouplingPair& pair);

/// Every context (i < n, prefix, a, b) with both conditioning events non-null.
std::vector<CouplingContext> coupling_contexts(const FiniteJoint& joint);

/// f tabulated over the joint's assignment order.
struct LipschitzFunction {
  std::vector<int> radix;
  std::vector<Rational> values;
  LipschitzProfile c;

  const Rational& operator()(std::size_t index) const { return values[index]; }

  static LipschitzFunction tabulate(std::vector<int> radix, const std::function<Rational(const Assignment&)>& f,
                                    LipschitzProfile c);
  /// sum_k x_k with c_k = radix_k - 1.
  static LipschitzFunction coordinate_sum(std::vector<int> radix);

  LipschitzFunction permuted(std::span<const int> order) const;
};

struct LipschitzViolation {
  Assignment x;
  int coordinate = 0;
  int replacement = 0;
  Rational excess;
};

/// Checks |f(x) - f(x')| <= c_j over all single-coordinate changes, which
/// implies the bound for every pair (x, x').
std::optional<LipschitzViolation> validate_lipschitz(const LipschitzFunction& f);

/// Smallest valid profile: c_j = max single-coordinate change in coordinate j.
LipschitzProfile tight_profile(const LipschitzFunction& f);

/// c_i + c_{p_i}, or c_i at a root, per position; c is indexed by position.
std::vector<Rational> effective_profile(const OrderedTree& tree, const LipschitzProfile& c);

struct DifferenceReport {
  Rational max_excess;  // max |E[f | prefix, a] - E[f | prefix, b]| - effective_c_i
  CouplingContext worst;
};

/// f (with its profile) and joint in tree-position order. Throws InputError
/// when f fails validate_lipschitz.
DifferenceReport verify_difference_bound(const FiniteJoint& joint, const OrderedTree& tree,
                                         const LipschitzFunction& f);

/// max over prefixes x_{[i-1]}, a, b and w of
/// |P(X_{S_i} = w | prefix, a) - P(X_{S_i} = w | prefix, b)|.
Rational verify_independence_lemma(const FiniteJoint& joint, const OrderedTree& tree, int i);

struct MgfReport {
  bool condition_holds = true;
  /// First (i, prefix) where sup - inf of the conditional means exceeds c_i.
  std::optional<CouplingContext> violation;
  double worst_ratio = 0;  // max_s E[exp(s(f - Ef))] / exp(s^2 sum c^2 / 8)
};

/// Coordinates are exposed in the joint's order.
MgfReport mgf_check(const FiniteJoint& joint, const LipschitzFunction& f, std::span<const Rational> effective_c,
                    std::span<const double> s_grid);

Rational expectation(const FiniteJoint& joint, const LipschitzFunction& f);
/// P(f - Ef >= t), exactly.
Rational exact_tail(const FiniteJoint& joint, const LipschitzFunction& f, const Rational& t);

}  // namespace graphdep
