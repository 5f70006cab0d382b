#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mds/bits.hpp"

namespace mds {

// Finite partial order on indices 0..n-1. Construction validates
// reflexivity, antisymmetry and transitivity and reports the offending pair.
class Poset {
 public:
  static Poset from_less_equal(int n, const std::function<bool(int, int)>& leq);

  int size() const { return n_; }
  Bits universe() const { return full_set(n_); }

  bool leq(int a, int b) const { return has(up_[a], b); }

  // {j : i <= j} and {j : j <= i} as masks.
  Bits up_of(int i) const { return up_[i]; }
  Bits down_of(int i) const { return dn_[i]; }

  Bits up_closure(Bits s) const;
  Bits down_closure(Bits s) const;

  bool is_upset(Bits s) const { return up_closure(s) == s; }
  bool is_downset(Bits s) const { return down_closure(s) == s; }

  // s is directed when every pair of members has an upper bound in s.
  // The empty set counts as directed, and dually.
  bool is_directed(Bits s) const;
  bool is_dually_directed(Bits s) const;

  // All upsets as a sorted family; 2^n scan.
  Family all_upsets() const;
  Family all_downsets() const;

  // Cover pairs (a, b) with a < b and nothing strictly between, sorted.
  std::vector<std::pair<int, int>> covers() const;

  // Indices of maximal/minimal members of s.
  Bits maximal_members(Bits s) const;
  Bits minimal_members(Bits s) const;

  // Some linear extension: a permutation of 0..n-1 listing smaller
  // elements first; deterministic (smallest index first among ready ones).
  std::vector<int> linear_extension() const;

 private:
  Poset(int n, std::vector<Bits> up, std::vector<Bits> dn)
      : n_(n), up_(std::move(up)), dn_(std::move(dn)) {}

  int n_ = 0;
  std::vector<Bits> up_;
  std::vector<Bits> dn_;
};

}  // namespace mds
