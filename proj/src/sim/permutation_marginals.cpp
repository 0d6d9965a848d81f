// enqode: exact marginals for circuits wider than the dense limit
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/sim/permutation_marginals.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "enqode/errors.hpp"
#include "enqode/sim/simulator.hpp"

namespace enqode {

namespace {

// Per-qubit constraint: -1 free, otherwise the required bit.
using Assignment = std::vector<signed char>;

struct Block {
  std::vector<int> qubits;
  std::vector<double> probs;
  std::unordered_map<std::uint64_t, double> cache;

  double match(std::uint64_t mask, std::uint64_t value) {
    const std::uint64_t key = (mask << 32) | value;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double s = 0.0;
    for (std::uint64_t i = 0; i < probs.size(); ++i)
      if ((i & mask) == value) s += probs[i];
    cache.emplace(key, s);
    return s;
  }
};

int find_root(std::vector<int>& parent, int q) {
  while (parent[q] != q) q = parent[q] = parent[parent[q]];
  return q;
}

class TailEvaluator {
 public:
  TailEvaluator(const Circuit& c, int max_block, std::size_t max_branches)
      : n_(c.n_qubits()), max_branches_(max_branches) {
    const auto& gates = c.gates();
    std::size_t split = 0;
    for (std::size_t i = 0; i < gates.size(); ++i)
      if (!gates[i].is_classical() && !gates[i].is_diagonal()) split = i + 1;
    for (std::size_t i = split; i < gates.size(); ++i)
      if (!gates[i].is_diagonal()) suffix_.push_back(&gates[i]);

    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> touched(n_, 0);
    for (std::size_t i = 0; i < split; ++i) {
      const auto q = gates[i].qubits();
      for (int x : q) touched[x] = 1;
      for (std::size_t k = 1; k < q.size(); ++k)
        parent[find_root(parent, q[k])] = find_root(parent, q[0]);
    }
    std::vector<int> block_of_root(n_, -1);
    block_of_.assign(n_, -1);
    local_.assign(n_, -1);
    for (int q = 0; q < n_; ++q) {
      if (!touched[q]) continue;
      const int r = find_root(parent, q);
      if (block_of_root[r] < 0) {
        block_of_root[r] = static_cast<int>(blocks_.size());
        blocks_.emplace_back();
      }
      auto& b = blocks_[block_of_root[r]];
      block_of_[q] = block_of_root[r];
      local_[q] = static_cast<int>(b.qubits.size());
      b.qubits.push_back(q);
    }
    for (auto& b : blocks_) {
      if (static_cast<int>(b.qubits.size()) > max_block)
        throw CapacityError("prefix block of " + std::to_string(b.qubits.size()) +
                            " qubits exceeds the block limit");
      Circuit sub(static_cast<int>(b.qubits.size()));
      std::vector<int> to_local(n_, -1);
      for (std::size_t k = 0; k < b.qubits.size(); ++k) to_local[b.qubits[k]] = static_cast<int>(k);
      for (std::size_t i = 0; i < split; ++i) {
        const auto q = gates[i].qubits();
        if (q.empty() || to_local[q[0]] < 0) continue;
        Gate g = gates[i];
        for (int& x : g.targets) x = to_local[x];
        for (int& x : g.controls) x = to_local[x];
        for (int& x : g.selectors) x = to_local[x];
        sub.add(std::move(g));
      }
      const auto s = simulate(sub);
      b.probs.resize(s.dimension());
      for (std::size_t i = 0; i < s.dimension(); ++i) b.probs[i] = std::norm(s[i]);
    }
  }

  double probability(const Assignment& final_constraints) {
    struct Item {
      std::size_t remaining;
      Assignment a;
    };
    std::vector<Item> stack;
    stack.push_back({suffix_.size(), final_constraints});
    double total = 0.0;
    while (!stack.empty()) {
      Item it = std::move(stack.back());
      stack.pop_back();
      bool dropped = false;
      while (it.remaining > 0 && !dropped) {
        const Gate& g = *suffix_[it.remaining - 1];
        if (!relevant(g, it.a)) {
          --it.remaining;
          continue;
        }
        // Resolve controls first; an unknown control forks the history.
        int free_control = -1;
        bool fires = true;
        for (int c : g.controls) {
          if (it.a[c] == 0) fires = false;
          if (it.a[c] < 0 && free_control < 0) free_control = c;
        }
        if (fires && free_control >= 0) {
          branch_budget();
          Item other{it.remaining, it.a};
          other.a[free_control] = 0;
          stack.push_back(std::move(other));
          it.a[free_control] = 1;
          continue;
        }
        --it.remaining;
        if (!fires) continue;
        if (g.kind == GateKind::X) {
          it.a[g.targets[0]] ^= 1;
        } else if (g.kind == GateKind::Swap) {
          std::swap(it.a[g.targets[0]], it.a[g.targets[1]]);
        } else {
          // Permutation: every preimage consistent with the known output bits.
          const auto& table = *g.table;
          std::uint64_t mask = 0, value = 0;
          for (std::size_t k = 0; k < g.targets.size(); ++k) {
            const auto v = it.a[g.targets[k]];
            if (v >= 0) {
              mask |= 1ULL << k;
              value |= static_cast<std::uint64_t>(v) << k;
            }
          }
          bool first = true;
          Assignment base = it.a;
          for (std::uint64_t x = 0; x < table.size(); ++x) {
            if ((table[x] & mask) != value) continue;
            Assignment pre = base;
            for (std::size_t k = 0; k < g.targets.size(); ++k)
              pre[g.targets[k]] = static_cast<signed char>((x >> k) & 1);
            if (first) {
              it.a = std::move(pre);
              first = false;
            } else {
              branch_budget();
              stack.push_back({it.remaining, std::move(pre)});
            }
          }
          if (first) dropped = true;
        }
      }
      if (!dropped) total += prefix_probability(it.a);
    }
    return total;
  }

 private:
  static bool relevant(const Gate& g, const Assignment& a) {
    for (int t : g.targets)
      if (a[t] >= 0) return true;
    return false;
  }

  void branch_budget() {
    if (++branches_ > max_branches_)
      throw CapacityError("classical tail evaluation exceeded its branch limit");
  }

  double prefix_probability(const Assignment& a) {
    std::vector<std::uint64_t> mask(blocks_.size(), 0), value(blocks_.size(), 0);
    for (int q = 0; q < n_; ++q) {
      if (a[q] < 0) continue;
      const int b = block_of_[q];
      if (b < 0) {
        if (a[q] == 1) return 0.0;
        continue;
      }
      mask[b] |= 1ULL << local_[q];
      if (a[q] == 1) value[b] |= 1ULL << local_[q];
    }
    double p = 1.0;
    for (std::size_t b = 0; b < blocks_.size() && p > 0.0; ++b)
      if (mask[b]) p *= blocks_[b].match(mask[b], value[b]);
    return p;
  }

  int n_;
  std::size_t max_branches_;
  std::size_t branches_ = 0;
  std::vector<const Gate*> suffix_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
  std::vector<int> local_;
};

}  // namespace

std::vector<double> classical_tail_marginals(const Circuit& c, std::span<const int> qubits,
                                             int max_block, std::size_t max_branches) {
  if (qubits.empty()) throw ArgumentError("marginal over an empty register");
  if (qubits.size() > 24) throw CapacityError("marginal register too large");
  TailEvaluator ev(c, max_block, max_branches);
  std::vector<double> out(std::size_t{1} << qubits.size());
  for (std::uint64_t v = 0; v < out.size(); ++v) {
    Assignment a(c.n_qubits(), -1);
    for (std::size_t k = 0; k < qubits.size(); ++k)
      a[qubits[k]] = static_cast<signed char>((v >> k) & 1);
    out[v] = ev.probability(a);
  }
  return out;
}

std::vector<double> circuit_marginals(const Circuit& c, std::span<const int> qubits) {
  if (c.n_qubits() <= 20) return marginal_probabilities(simulate(c), qubits);
  return classical_tail_marginals(c, qubits);
}

}  // namespace enqode
