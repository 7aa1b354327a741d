#include "graphdep/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphdep/errors.hpp"

namespace graphdep {

namespace {

constexpr std::size_t kMaxLatentConfigurations = std::size_t{1} << 24;

std::vector<std::size_t> strides_of(const std::vector<int>& radix) {
  std::vector<std::size_t> stride(radix.size(), 1);
  for (int k = static_cast<int>(radix.size()) - 2; k >= 0; --k) stride[k] = stride[k + 1] * radix[k + 1];
  return stride;
}

std::size_t volume(const std::vector<int>& radix) {
  std::size_t total = 1;
  for (int r : radix) total *= static_cast<std::size_t>(r);
  return total;
}

void check_radix(const std::vector<int>& radix) {
  if (radix.empty()) throw InputError("a joint needs at least one coordinate");
  if (static_cast<int>(radix.size()) > kMaxJointCoordinates) {
    throw ScaleError("exact joints are limited to " + std::to_string(kMaxJointCoordinates) + " coordinates");
  }
  for (int r : radix) {
    if (r < 1) throw InputError("alphabets must be nonempty");
    if (r > kMaxAlphabet) {
      throw ScaleError("exact joints are limited to alphabets of " + std::to_string(kMaxAlphabet) + " symbols");
    }
  }
}

Rational abs_diff(const Rational& x, const Rational& y) { return x >= y ? Rational(x - y) : Rational(y - x); }

void decode_into(std::size_t index, const std::vector<int>& radix, Assignment& x) {
  for (int k = static_cast<int>(radix.size()) - 1; k >= 0; --k) {
    x[k] = static_cast<int>(index % radix[k]);
    index /= radix[k];
  }
}

std::vector<Rational> normalized(std::vector<Rational> probs, const char* what) {
  if (probs.empty()) return {Rational(1)};
  Rational total = 0;
  for (auto& p : probs) {
    p.canonicalize();
    if (p < 0) throw InputError(std::string(what) + " latent has a negative probability");
    total += p;
  }
  if (total != 1) throw InputError(std::string(what) + " latent probabilities sum to " + to_string(total));
  return probs;
}

// Conditional-mean tables: level i holds, per prefix x_1..x_i, the mass and
// the f-weighted mass of the assignments extending it.
struct PrefixSums {
  std::vector<std::vector<Rational>> mass;
  std::vector<std::vector<Rational>> weighted;
};

PrefixSums prefix_sums(const FiniteJoint& joint, const LipschitzFunction& f) {
  const int n = joint.size();
  PrefixSums sums;
  sums.mass.resize(n + 1);
  sums.weighted.resize(n + 1);
  sums.mass[n] = joint.pmf();
  sums.weighted[n].resize(joint.support_size());
  for (std::size_t k = 0; k < joint.support_size(); ++k) sums.weighted[n][k] = joint.pmf()[k] * f(k);
  for (int level = n; level >= 1; --level) {
    const int r = joint.radix()[level - 1];
    const std::size_t parents = sums.mass[level].size() / r;
    sums.mass[level - 1].assign(parents, Rational(0));
    sums.weighted[level - 1].assign(parents, Rational(0));
    for (std::size_t q = 0; q < parents; ++q) {
      for (int a = 0; a < r; ++a) {
        sums.mass[level - 1][q] += sums.mass[level][q * r + a];
        sums.weighted[level - 1][q] += sums.weighted[level][q * r + a];
      }
    }
  }
  return sums;
}

Assignment prefix_of(std::size_t q, const std::vector<int>& radix, int length) {
  Assignment x(length);
  for (int k = length - 1; k >= 0; --k) {
    x[k] = static_cast<int>(q % radix[k]);
    q /= radix[k];
  }
  return x;
}

void require_same_radix(const FiniteJoint& joint, const LipschitzFunction& f) {
  if (f.radix != joint.radix()) throw InputError("function and joint are over different alphabets");
}

}  // namespace

FiniteJoint::FiniteJoint(std::vector<int> radix, std::vector<Rational> pmf, Graph dependency)
    : radix_(std::move(radix)), pmf_(std::move(pmf)), dependency_(std::move(dependency)) {
  check_radix(radix_);
  stride_ = strides_of(radix_);
  if (pmf_.size() != volume(radix_)) throw InputError("pmf size does not match the alphabets");
  if (dependency_.order() != size()) throw InputError("dependency graph order does not match the joint");
  Rational total = 0;
  for (auto& p : pmf_) {
    p.canonicalize();
    if (p < 0) throw InputError("pmf has a negative entry");
    total += p;
  }
  if (total != 1) throw InputError("pmf sums to " + to_string(total) + ", not 1");
}

std::size_t FiniteJoint::index(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != size()) throw InputError("assignment has the wrong length");
  std::size_t idx = 0;
  for (int k = 0; k < size(); ++k) {
    if (x[k] < 0 || x[k] >= radix_[k]) throw InputError("assignment value outside its alphabet");
    idx += stride_[k] * x[k];
  }
  return idx;
}

Assignment FiniteJoint::decode(std::size_t index) const {
  Assignment x(size());
  decode_into(index, radix_, x);
  return x;
}

std::vector<Rational> FiniteJoint::marginal(std::span<const int> coordinates) const {
  std::vector<int> sub_radix;
  for (int k : coordinates) {
    if (k < 1 || k > size()) throw InputError("marginal coordinate out of range");
    sub_radix.push_back(radix_[k - 1]);
  }
  const auto sub_stride = strides_of(sub_radix);
  std::vector<Rational> out(volume(sub_radix), Rational(0));
  Assignment x(size());
  for (std::size_t idx = 0; idx < pmf_.size(); ++idx) {
    if (pmf_[idx] == 0) continue;
    decode_into(idx, radix_, x);
    std::size_t sub = 0;
    for (std::size_t j = 0; j < coordinates.size(); ++j) sub += sub_stride[j] * x[coordinates[j] - 1];
    out[sub] += pmf_[idx];
  }
  return out;
}

FiniteJoint FiniteJoint::permuted(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != size()) throw InputError("permutation has the wrong length");
  std::vector<int> position(size() + 1, 0);
  for (int k = 0; k < size(); ++k) {
    const int old = order[k];
    if (old < 1 || old > size() || position[old] != 0) throw InputError("not a permutation");
    position[old] = k + 1;
  }
  std::vector<int> radix(size());
  for (int k = 0; k < size(); ++k) radix[k] = radix_[order[k] - 1];
  const auto stride = strides_of(radix);
  std::vector<Rational> pmf(pmf_.size());
  Assignment x(size());
  for (std::size_t idx = 0; idx < pmf_.size(); ++idx) {
    decode_into(idx, radix_, x);
    std::size_t target = 0;
    for (int k = 0; k < size(); ++k) target += stride[k] * x[order[k] - 1];
    pmf[target] = pmf_[idx];
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : dependency_.edges()) edges.emplace_back(position[e.u], position[e.v]);
  return FiniteJoint(std::move(radix), std::move(pmf), build_graph(size(), edges));
}

LatentTreeSpec::Emit sum_mod_emit(std::vector<int> alphabet) {
  return [alphabet = std::move(alphabet)](int vertex, int vertex_latent, std::span<const int> edge_latents) {
    int total = vertex_latent;
    for (int e : edge_latents) total += e;
    return total % alphabet.at(vertex - 1);
  };
}

FiniteJoint build_tree_joint(const LatentTreeSpec& spec) {
  const Graph& g = spec.graph;
  const int n = g.order();
  if (static_cast<int>(spec.alphabet.size()) != n) throw InputError("one alphabet size per vertex is required");
  check_radix(spec.alphabet);
  if (!spec.emit) throw InputError("latent spec has no emit function");
  if (!spec.vertex_latents.empty() && static_cast<int>(spec.vertex_latents.size()) != n) {
    throw InputError("vertex latents must be given for every vertex or for none");
  }
  if (!spec.edge_latents.empty() && static_cast<int>(spec.edge_latents.size()) != g.edge_count()) {
    throw InputError("edge latents must be given for every edge or for none");
  }

  // Latent slots: vertices first, then edges; only positive-probability values.
  std::vector<std::vector<std::pair<int, Rational>>> slots;
  auto add_slot = [&](std::vector<Rational> probs, const char* what) {
    probs = normalized(std::move(probs), what);
    std::vector<std::pair<int, Rational>> support;
    for (int v = 0; v < static_cast<int>(probs.size()); ++v) {
      if (probs[v] > 0) support.emplace_back(v, probs[v]);
    }
    slots.push_back(std::move(support));
  };
  for (int v = 0; v < n; ++v) add_slot(spec.vertex_latents.empty() ? std::vector<Rational>{} : spec.vertex_latents[v], "vertex");
  for (int e = 0; e < g.edge_count(); ++e) add_slot(spec.edge_latents.empty() ? std::vector<Rational>{} : spec.edge_latents[e], "edge");

  std::size_t configurations = 1;
  for (const auto& s : slots) {
    configurations *= s.size();
    if (configurations > kMaxLatentConfigurations) throw ScaleError("too many latent configurations to enumerate");
  }

  // incident[v]: edge slots of v by ascending neighbour.
  std::vector<std::vector<int>> incident(n);
  for (int v = 1; v <= n; ++v) {
    for (int w : g.neighbors(v)) {
      const Edge key{std::min(v, w), std::max(v, w)};
      const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), key);
      incident[v - 1].push_back(n + static_cast<int>(it - g.edges().begin()));
    }
  }

  const auto stride = strides_of(spec.alphabet);
  std::vector<Rational> pmf(volume(spec.alphabet), Rational(0));
  std::vector<std::size_t> digit(slots.size(), 0);
  std::vector<int> edge_values;
  for (std::size_t config = 0; config < configurations; ++config) {
    Rational p = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) p *= slots[s][digit[s]].second;
    std::size_t idx = 0;
    for (int v = 1; v <= n; ++v) {
      edge_values.clear();
      for (int slot : incident[v - 1]) edge_values.push_back(slots[slot][digit[slot]].first);
      const int x = spec.emit(v, slots[v - 1][digit[v - 1]].first, edge_values);
      if (x < 0 || x >= spec.alphabet[v - 1]) {
        throw InputError("emit produced a value outside the alphabet of vertex " + std::to_string(v));
      }
      idx += stride[v - 1] * x;
    }
    pmf[idx] += p;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (++digit[s] < slots[s].size()) break;
      digit[s] = 0;
    }
  }
  return FiniteJoint(spec.alphabet, std::move(pmf), g);
}

DependencyReport verify_dependency(const FiniteJoint& joint, const Graph& graph) {
  const int n = joint.size();
  if (graph.order() != n) throw InputError("graph order does not match the joint");
  DependencyReport report;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t closed = s;
    for (int v = 1; v <= n; ++v) {
      if (!(s >> (v - 1) & 1)) continue;
      for (int w : graph.neighbors(v)) closed |= std::uint32_t{1} << (w - 1);
    }
    const std::uint32_t t = full & ~closed;
    if (t == 0) continue;

    std::vector<int> coords, s_part, t_part;
    for (int v = 1; v <= n; ++v) {
      if ((s | t) >> (v - 1) & 1) coords.push_back(v);
    }
    const auto table = joint.marginal(coords);
    std::vector<int> sub_radix;
    for (int v : coords) sub_radix.push_back(joint.radix()[v - 1]);
    std::vector<int> s_radix, t_radix;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      (s >> (coords[j] - 1) & 1 ? s_radix : t_radix).push_back(sub_radix[j]);
    }
    const auto s_stride = strides_of(s_radix);
    const auto t_stride = strides_of(t_radix);
    std::vector<Rational> ps(volume(s_radix), Rational(0)), pt(volume(t_radix), Rational(0));
    std::vector<std::pair<std::size_t, std::size_t>> split(table.size());
    Assignment x(coords.size());
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      decode_into(idx, sub_radix, x);
      std::size_t si = 0, ti = 0, sj = 0, tj = 0;
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (s >> (coords[j] - 1) & 1) {
          si += s_stride[sj++] * x[j];
        } else {
          ti += t_stride[tj++] * x[j];
        }
      }
      split[idx] = {si, ti};
      ps[si] += table[idx];
      pt[ti] += table[idx];
    }
    Rational gap = 0;
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      gap += abs_diff(table[idx], ps[split[idx].first] * pt[split[idx].second]);
    }
    gap /= 2;
    if (gap > report.deviation) {
      report.ok = false;
      report.deviation = gap;
      report.s.clear();
      report.t.clear();
      for (int v = 1; v <= n; ++v) {
        if (s >> (v - 1) & 1) report.s.push_back(v);
        if (t >> (v - 1) & 1) report.t.push_back(v);
      }
    }
  }
  return report;
}

FiniteJoint conditional(const FiniteJoint& joint, std::span<const std::optional<int>> fixed) {
  const int n = joint.size();
  if (static_cast<int>(fixed.size()) != n) throw InputError("conditioning pattern has the wrong length");
  std::vector<int> free;
  for (int k = 1; k <= n; ++k) {
    if (!fixed[k - 1]) {
      free.push_back(k);
    } else if (*fixed[k - 1] < 0 || *fixed[k - 1] >= joint.radix()[k - 1]) {
      throw InputError("conditioning value outside its alphabet");
    }
  }
  std::vector<int> radix;
  for (int k : free) radix.push_back(joint.radix()[k - 1]);
  if (radix.empty()) radix.push_back(1);
  const auto stride = strides_of(radix);
  std::vector<Rational> pmf(volume(radix), Rational(0));
  Rational mass = 0;
  Assignment x(n);
  for (std::size_t idx = 0; idx < joint.support_size(); ++idx) {
    const auto& p = joint.pmf()[idx];
    if (p == 0) continue;
    decode_into(idx, joint.radix(), x);
    bool match = true;
    for (int k = 0; k < n && match; ++k) match = !fixed[k] || *fixed[k] == x[k];
    if (!match) continue;
    std::size_t sub = 0;
    for (std::size_t j = 0; j < free.size(); ++j) sub += stride[j] * x[free[j] - 1];
    pmf[sub] += p;
    mass += p;
  }
  if (mass == 0) throw InputError("conditioning on a null event");
  for (auto& p : pmf) p /= mass;
  Graph g = free.empty() ? empty_graph(1) : induced_subgraph(joint.dependency(), free).graph;
  return FiniteJoint(std::move(radix), std::move(pmf), std::move(g));
}

CouplingPair build_coupling(const FiniteJoint& joint, const OrderedTree& tree, const CouplingContext& context,
                            CouplingVariant variant) {
  const int n = joint.size();
  const int i = context.i;
  if (tree.size() != n) throw InputError("tree and joint have different sizes");
  if (i < 1 || i > n) throw InputError("coupling coordinate out of range");
  if (static_cast<int>(context.prefix.size()) != i - 1) throw InputError("prefix must fix exactly x_1..x_{i-1}");
  const auto& radix = joint.radix();
  const int r_i = radix[i - 1];
  if (context.a < 0 || context.a >= r_i || context.b < 0 || context.b >= r_i) {
    throw InputError("substituted value outside the alphabet");
  }
  const auto stride = strides_of(radix);
  std::size_t prefix_base = 0;
  for (int k = 0; k < i - 1; ++k) {
    if (context.prefix[k] < 0 || context.prefix[k] >= radix[k]) throw InputError("prefix value outside its alphabet");
    prefix_base += stride[k] * context.prefix[k];
  }
  const std::size_t future = stride[i - 1];  // number of completions x_{i+1..n}
  const std::size_t base_a = prefix_base + stride[i - 1] * context.a;
  const std::size_t base_b = prefix_base + stride[i - 1] * context.b;
  const auto& pmf = joint.pmf();

  Rational mass_a = 0, mass_b = 0;
  for (std::size_t r = 0; r < future; ++r) {
    mass_a += pmf[base_a + r];
    mass_b += pmf[base_b + r];
  }
  if (mass_a == 0 || mass_b == 0) throw InputError("coupling context conditions on a null event");

  CouplingPair pair;
  pair.context = context;
  pair.parent = tree.parent_of(i);
  const int p = pair.parent;

  auto outcome = [&](std::size_t ry, std::size_t rz, Rational prob) {
    CoupledOutcome o;
    o.y = joint.decode(base_a + ry);
    o.z = joint.decode(base_b + rz);
    o.p = std::move(prob);
    pair.outcomes.push_back(std::move(o));
  };
  const char* not_dependent = "X_{S_i} depends on x_i: the joint is not dependent on this tree";

  if (p == 0) {
    // Root: S_i is the whole future and Z copies it.
    for (std::size_t r = 0; r < future; ++r) {
      if (pmf[base_a + r] * mass_b != pmf[base_b + r] * mass_a) throw KindError(not_dependent);
      if (pmf[base_a + r] != 0) outcome(r, r, pmf[base_a + r] / mass_a);
    }
    return pair;
  }

  const std::size_t p_stride = stride[p - 1];
  const int r_p = radix[p - 1];
  std::vector<Rational> unconditional;
  if (variant == CouplingVariant::kCorruptedMarginal) {
    const int coords[] = {p};
    unconditional = joint.marginal(coords);
  }
  std::vector<Rational> ry(r_p), rz(r_p), diag(r_p);
  for (std::size_t key = 0; key < future; ++key) {
    if ((key / p_stride) % r_p != 0) continue;  // one representative per omega_{S_i}
    Rational ya = 0, zb = 0;
    for (int v = 0; v < r_p; ++v) {
      ry[v] = pmf[base_a + key + v * p_stride];
      rz[v] = pmf[base_b + key + v * p_stride];
      ya += ry[v];
      zb += rz[v];
    }
    if (ya * mass_b != zb * mass_a) throw KindError(not_dependent);
    if (ya == 0) continue;  // omega_{S_i} unreachable: no mass to couple
    for (int v = 0; v < r_p; ++v) {
      ry[v] /= ya;
      rz[v] = variant == CouplingVariant::kCorruptedMarginal ? unconditional[v] : Rational(rz[v] / zb);
    }
    const Rational weight = ya / mass_a;
    Rational residual = 1;
    for (int v = 0; v < r_p; ++v) {
      diag[v] = std::min(ry[v], rz[v]);
      residual -= diag[v];
      if (diag[v] != 0) outcome(key + v * p_stride, key + v * p_stride, weight * diag[v]);
    }
    if (residual == 0) continue;
    for (int u = 0; u < r_p; ++u) {
      const Rational ex_y = ry[u] - diag[u];
      if (ex_y == 0) continue;
      for (int v = 0; v < r_p; ++v) {
        const Rational ex_z = rz[v] - diag[v];
        if (ex_z != 0) outcome(key + u * p_stride, key + v * p_stride, weight * ex_y * ex_z / residual);
      }
    }
  }
  return pair;
}

Rational verify_coupling_marginals(const CouplingPair& pair, const FiniteJoint& joint) {
  const int i = pair.context.i;
  const auto stride = strides_of(joint.radix());
  const std::size_t future = stride[i - 1];
  std::vector<Rational> law_y(future, Rational(0)), law_z(future, Rational(0));
  for (const auto& o : pair.outcomes) {
    law_y[joint.index(o.y) % future] += o.p;
    law_z[joint.index(o.z) % future] += o.p;
  }
  std::size_t prefix_base = 0;
  for (int k = 0; k < i - 1; ++k) prefix_base += stride[k] * pair.context.prefix[k];
  auto deviation = [&](const std::vector<Rational>& law, int value) {
    const std::size_t base = prefix_base + stride[i - 1] * value;
    Rational mass = 0;
    for (std::size_t r = 0; r < future; ++r) mass += joint.pmf()[base + r];
    Rational gap = 0;
    for (std::size_t r = 0; r < future; ++r) gap += abs_diff(law[r], joint.pmf()[base + r] / mass);
    return Rational(gap / 2);
  };
  return std::max(deviation(law_y, pair.context.a), deviation(law_z, pair.context.b));
}

Rational coupling_structure_defect(const CouplingPair& pair) {
  const auto& ctx = pair.context;
  Rational defect = 0;
  for (const auto& o : pair.outcomes) {
    bool bad = o.y[ctx.i - 1] != ctx.a || o.z[ctx.i - 1] != ctx.b;
    for (int k = 0; k < ctx.i - 1; ++k) bad = bad || o.y[k] != ctx.prefix[k] || o.z[k] != ctx.prefix[k];
    for (int j = ctx.i + 1; j <= static_cast<int>(o.y.size()); ++j) {
      if (j != pair.parent) bad = bad || o.y[j - 1] != o.z[j - 1];
    }
    if (bad) defect += o.p;
  }
  return defect;
}

std::vector<CouplingContext> coupling_contexts(const FiniteJoint& joint) {
  const int n = joint.size();
  const auto& radix = joint.radix();
  const auto stride = strides_of(radix);
  std::vector<CouplingContext> contexts;
  for (int i = 1; i < n; ++i) {
    const std::size_t prefixes = joint.support_size() / (stride[i - 1] * radix[i - 1]);
    for (std::size_t q = 0; q < prefixes; ++q) {
      std::vector<int> live;
      for (int a = 0; a < radix[i - 1]; ++a) {
        const std::size_t base = (q * radix[i - 1] + a) * stride[i - 1];
        bool positive = false;
        for (std::size_t r = 0; r < stride[i - 1] && !positive; ++r) positive = joint.pmf()[base + r] != 0;
        if (positive) live.push_back(a);
      }
      const Assignment prefix = prefix_of(q, radix, i - 1);
      for (int a : live) {
        for (int b : live) contexts.push_back({i, prefix, a, b});
      }
    }
  }
  return contexts;
}

LipschitzFunction LipschitzFunction::tabulate(std::vector<int> radix,
                                              const std::function<Rational(const Assignment&)>& f,
                                              LipschitzProfile c) {
  check_radix(radix);
  if (c.size() != static_cast<int>(radix.size())) throw InputError("profile length does not match the alphabets");
  LipschitzFunction out;
  out.values.resize(volume(radix));
  Assignment x(radix.size());
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    decode_into(idx, radix, x);
    out.values[idx] = f(x);
    out.values[idx].canonicalize();
  }
  out.radix = std::move(radix);
  out.c = std::move(c);
  return out;
}

LipschitzFunction LipschitzFunction::coordinate_sum(std::vector<int> radix) {
  std::vector<Rational> c;
  for (int r : radix) c.emplace_back(r - 1);
  return tabulate(
      std::move(radix),
      [](const Assignment& x) { return Rational(std::accumulate(x.begin(), x.end(), 0)); },
      LipschitzProfile(std::move(c)));
}

LipschitzFunction LipschitzFunction::permuted(std::span<const int> order) const {
  const int n = static_cast<int>(radix.size());
  if (static_cast<int>(order.size()) != n) throw InputError("permutation has the wrong length");
  std::vector<int> new_radix(n);
  std::vector<Rational> new_c(n);
  for (int k = 0; k < n; ++k) {
    new_radix[k] = radix[order[k] - 1];
    new_c[k] = c.exact_c(order[k]);
  }
  const auto stride = strides_of(new_radix);
  LipschitzFunction out;
  out.values.resize(values.size());
  Assignment x(n);
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    decode_into(idx, radix, x);
    std::size_t target = 0;
    for (int k = 0; k < n; ++k) target += stride[k] * x[order[k] - 1];
    out.values[target] = values[idx];
  }
  out.radix = std::move(new_radix);
  out.c = LipschitzProfile(std::move(new_c));
  return out;
}

namespace {

// Calls visit(x, j, replacement, |f(x) - f(x')|) once per unordered pair.
template <typename Visit>
void single_changes(const LipschitzFunction& f, Visit&& visit) {
  const int n = static_cast<int>(f.radix.size());
  const auto stride = strides_of(f.radix);
  Assignment x(n);
  for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
    decode_into(idx, f.radix, x);
    for (int j = 0; j < n; ++j) {
      for (int v = x[j] + 1; v < f.radix[j]; ++v) {
        const std::size_t other = idx + stride[j] * (v - x[j]);
        visit(x, j, v, abs_diff(f.values[idx], f.values[other]));
      }
    }
  }
}

}  // namespace

std::optional<LipschitzViolation> validate_lipschitz(const LipschitzFunction& f) {
  std::optional<LipschitzViolation> worst;
  single_changes(f, [&](const Assignment& x, int j, int v, const Rational& change) {
    const Rational excess = change - f.c.exact_c(j + 1);
    if (excess > 0 && (!worst || excess > worst->excess)) worst = LipschitzViolation{x, j + 1, v, excess};
  });
  return worst;
}

LipschitzProfile tight_profile(const LipschitzFunction& f) {
  std::vector<Rational> c(f.radix.size(), Rational(0));
  single_changes(f, [&](const Assignment&, int j, int, const Rational& change) { c[j] = std::max(c[j], change); });
  return LipschitzProfile(std::move(c));
}

std::vector<Rational> effective_profile(const OrderedTree& tree, const LipschitzProfile& c) {
  if (c.size() != tree.size()) throw InputError("profile length does not match the tree");
  std::vector<Rational> eff(tree.size());
  for (int pos = 1; pos <= tree.size(); ++pos) {
    eff[pos - 1] = c.exact_c(pos);
    if (tree.parent_of(pos) != 0) eff[pos - 1] += c.exact_c(tree.parent_of(pos));
  }
  return eff;
}

DifferenceReport verify_difference_bound(const FiniteJoint& joint, const OrderedTree& tree,
                                         const LipschitzFunction& f) {
  require_same_radix(joint, f);
  if (auto bad = validate_lipschitz(f)) {
    throw InputError("declared Lipschitz profile fails at coordinate " + std::to_string(bad->coordinate) +
                     " by " + to_string(bad->excess));
  }
  const auto eff = effective_profile(tree, f.c);
  const auto sums = prefix_sums(joint, f);
  const auto& radix = joint.radix();
  DifferenceReport report;
  bool first = true;
  for (int i = 1; i <= joint.size(); ++i) {
    const int r = radix[i - 1];
    for (std::size_t q = 0; q < sums.mass[i - 1].size(); ++q) {
      std::optional<Rational> hi, lo;
      int arg_hi = 0, arg_lo = 0;
      for (int a = 0; a < r; ++a) {
        const auto& m = sums.mass[i][q * r + a];
        if (m == 0) continue;
        const Rational mean = sums.weighted[i][q * r + a] / m;
        if (!hi || mean > *hi) hi = mean, arg_hi = a;
        if (!lo || mean < *lo) lo = mean, arg_lo = a;
      }
      if (!hi) continue;
      const Rational excess = *hi - *lo - eff[i - 1];
      if (first || excess > report.max_excess) {
        first = false;
        report.max_excess = excess;
        report.worst = {i, prefix_of(q, radix, i - 1), arg_hi, arg_lo};
      }
    }
  }
  return report;
}

Rational verify_independence_lemma(const FiniteJoint& joint, const OrderedTree& tree, int i) {
  const int n = joint.size();
  if (i < 1 || i > n) throw InputError("coordinate out of range");
  const auto& radix = joint.radix();
  const auto stride = strides_of(radix);
  const std::size_t future = stride[i - 1];
  const int p = tree.parent_of(i);
  const std::size_t p_stride = p == 0 ? future : stride[p - 1];
  const int r_p = p == 0 ? 1 : radix[p - 1];
  const std::size_t prefixes = joint.support_size() / (future * radix[i - 1]);
  const auto& pmf = joint.pmf();

  // law[a][key]: P(X_{S_i} = key | prefix, a) for the current prefix.
  Rational worst = 0;
  std::vector<std::vector<Rational>> law(radix[i - 1]);
  for (std::size_t q = 0; q < prefixes; ++q) {
    std::vector<int> live;
    for (int a = 0; a < radix[i - 1]; ++a) {
      const std::size_t base = (q * radix[i - 1] + a) * future;
      law[a].assign(future, Rational(0));
      Rational mass = 0;
      for (std::size_t r = 0; r < future; ++r) {
        const std::size_t key = r - ((r / p_stride) % r_p) * p_stride;
        law[a][key] += pmf[base + r];
        mass += pmf[base + r];
      }
      if (mass == 0) continue;
      for (auto& x : law[a]) x /= mass;
      live.push_back(a);
    }
    for (std::size_t x = 0; x < live.size(); ++x) {
      for (std::size_t y = x + 1; y < live.size(); ++y) {
        for (std::size_t key = 0; key < future; ++key) worst = std::max(worst, abs_diff(law[live[x]][key], law[live[y]][key]));
      }
    }
  }
  return worst;
}

Rational expectation(const FiniteJoint& joint, const LipschitzFunction& f) {
  require_same_radix(joint, f);
  Rational mean = 0;
  for (std::size_t k = 0; k < joint.support_size(); ++k) mean += joint.pmf()[k] * f(k);
  return mean;
}

Rational exact_tail(const FiniteJoint& joint, const LipschitzFunction& f, const Rational& t) {
  const Rational threshold = expectation(joint, f) + t;
  Rational tail = 0;
  for (std::size_t k = 0; k < joint.support_size(); ++k) {
    if (f(k) >= threshold) tail += joint.pmf()[k];
  }
  return tail;
}

MgfReport mgf_check(const FiniteJoint& joint, const LipschitzFunction& f, std::span<const Rational> effective_c,
                    std::span<const double> s_grid) {
  require_same_radix(joint, f);
  if (static_cast<int>(effective_c.size()) != joint.size()) throw InputError("one effective c per coordinate");
  MgfReport report;
  const auto sums = prefix_sums(joint, f);
  const auto& radix = joint.radix();
  for (int i = 1; i <= joint.size() && report.condition_holds; ++i) {
    const int r = radix[i - 1];
    for (std::size_t q = 0; q < sums.mass[i - 1].size(); ++q) {
      std::optional<Rational> hi, lo;
      int arg_hi = 0, arg_lo = 0;
      for (int a = 0; a < r; ++a) {
        const auto& m = sums.mass[i][q * r + a];
        if (m == 0) continue;
        const Rational mean = sums.weighted[i][q * r + a] / m;
        if (!hi || mean > *hi) hi = mean, arg_hi = a;
        if (!lo || mean < *lo) lo = mean, arg_lo = a;
      }
      if (hi && *hi - *lo > effective_c[i - 1]) {
        report.condition_holds = false;
        report.violation = CouplingContext{i, prefix_of(q, radix, i - 1), arg_hi, arg_lo};
        return report;
      }
    }
  }
  const double mean = expectation(joint, f).get_d();
  double sum_sq = 0;
  for (const auto& c : effective_c) sum_sq += c.get_d() * c.get_d();
  for (double s : s_grid) {
    if (!(s > 0)) throw InputError("mgf grid points must be positive");
    double mgf = 0;
    for (std::size_t k = 0; k < joint.support_size(); ++k) {
      if (joint.pmf()[k] != 0) mgf += joint.pmf()[k].get_d() * std::exp(s * (f(k).get_d() - mean));
    }
    report.worst_ratio = std::max(report.worst_ratio, mgf / std::exp(s * s * sum_sq / 8));
  }
  return report;
}

}  // namespace graphdep
