#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mds {

// Ground sets are dense index ranges 0..n-1 with n <= kMaxGround.
// Subsets are bit masks; exhaustive 2^n loops dominate the workload.
using Bits = std::uint32_t;

inline constexpr int kMaxGround = 16;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

inline constexpr Bits bit(int i) { return Bits{1} << i; }

inline constexpr bool has(Bits s, int i) { return (s >> i) & 1u; }

inline constexpr bool is_subset(Bits a, Bits b) { return (a & ~b) == 0; }

inline constexpr Bits full_set(int n) {
  return n == 0 ? Bits{0} : ((Bits{1} << n) - 1);
}

inline int count(Bits s) { return std::popcount(s); }

// Lowest set index; s must be nonzero.
inline int lowest(Bits s) { return std::countr_zero(s); }

// Calls f(i) for each member of s in increasing order.
template <typename F>
void for_each_member(Bits s, F f) {
  for (Bits t = s; t != 0; t &= t - 1) f(std::countr_zero(t));
}

// Calls f(sub) for every subset of mask, the empty set included.
template <typename F>
void for_each_subset(Bits mask, F f) {
  Bits sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

// A family of subsets, kept sorted and unique so families compare with ==.
using Family = std::vector<Bits>;

inline Family family_from(std::vector<Bits> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool family_has(const Family& f, Bits s) {
  return std::binary_search(f.begin(), f.end(), s);
}

// Index of s in f, or -1.
inline int family_index(const Family& f, Bits s) {
  auto it = std::lower_bound(f.begin(), f.end(), s);
  if (it == f.end() || *it != s) return -1;
  return static_cast<int>(it - f.begin());
}

inline Family family_intersect(const Family& a, const Family& b) {
  Family out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline Family family_union(const Family& a, const Family& b) {
  Family out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline bool family_subset(const Family& a, const Family& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace mds
