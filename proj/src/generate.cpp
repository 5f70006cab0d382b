#include "mds/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mds {

int Rng::below(int n) {
  if (n <= 0) throw Error("Rng::below requires a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return static_cast<int>(v % n);
}

Bits Rng::subset_of(Bits mask) {
  Bits out = 0;
  for_each_member(mask, [&](int i) {
    if (coin()) out |= bit(i);
  });
  return out;
}

int Rng::pick_member(Bits s) {
  const int k = count(s);
  if (k == 0) throw Error("Rng::pick_member requires a nonempty set");
  int want = below(k);
  int found = -1;
  for_each_member(s, [&](int i) {
    if (want == 0 && found < 0) found = i;
    --want;
  });
  return found;
}

Poset random_poset(Rng& rng, int n) {
  if (n < 0 || n > kMaxGround) throw Error("random_poset: size out of range");
  // Strict predecessors of j are drawn among 0..j-1 and closed downward,
  // so the identity labeling is a linear extension.
  std::vector<Bits> below(n, 0);
  for (int j = 0; j < n; ++j) {
    Bits d = 0;
    for (int i = 0; i < j; ++i) {
      if (rng.coin() && rng.coin()) d |= bit(i) | below[i];
    }
    below[j] = d;
  }
  return Poset::from_less_equal(n, [&](int x, int y) {
    return x == y || has(below[y], x);
  });
}

namespace {

MeetSemilattice upset_algebra(const Poset& p) {
  const Family ups = p.all_upsets();
  FamilyAlgebra fa = algebra_from_family(ups, p.universe());
  return fa.alg;
}

}  // namespace

MeetSemilattice random_distributive(Rng& rng, int max_size) {
  if (max_size < 1 || max_size > kMaxGround)
    throw Error("random_distributive: size bound out of range");
  for (int attempt = 0; attempt < 512; ++attempt) {
    if (rng.coin()) {
      const int pts = rng.below(5);
      const Poset p = random_poset(rng, pts);
      if (static_cast<int>(p.all_upsets().size()) > max_size) continue;
      return upset_algebra(p);
    }
    const int ground = 1 + rng.below(4);
    const Bits full = full_set(ground);
    std::vector<Bits> seed = {full};
    const int extra = 1 + rng.below(6);
    for (int i = 0; i < extra; ++i) seed.push_back(rng.subset_of(full));
    // Close under pairwise intersection, to a fixpoint.
    Family fam = family_from(std::move(seed));
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Bits> added;
      for (Bits x : fam)
        for (Bits y : fam)
          if (!family_has(fam, x & y)) added.push_back(x & y);
      if (!added.empty()) {
        grew = true;
        for (Bits s : added) fam.push_back(s);
        fam = family_from(std::move(fam));
      }
    }
    if (static_cast<int>(fam.size()) > max_size) continue;
    FamilyAlgebra fa = algebra_from_family(fam, full);
    if (fa.alg.distributivity_witness().has_value()) continue;
    return fa.alg;
  }
  // A one-point poset always fits any bound.
  return upset_algebra(Poset::from_less_equal(1, [](int, int) { return true; }));
}

std::vector<int> random_monotone_op(Rng& rng, const MeetSemilattice& a) {
  const std::vector<int> order = a.order().linear_extension();
  std::vector<int> m(a.size(), -1);
  for (int e : order) {
    Bits allowed = full_set(a.size());
    for (int b : order) {
      if (m[b] >= 0 && a.leq(b, e)) allowed &= a.up(m[b]);
    }
    m[e] = rng.pick_member(allowed);
  }
  return m;
}

std::vector<int> random_modal_op(Rng& rng, const AlgebraDual& dual) {
  const DsSpace& x = dual.space();
  const std::vector<int> order = x.order().linear_extension();
  std::vector<Bits> nbhd(x.size(), 0);
  for (int p : order) {
    Bits bound = x.universe();
    for (int q : order) {
      if (q != p && x.order().leq(q, p)) bound &= nbhd[q];
    }
    nbhd[p] = x.order().up_closure(rng.subset_of(bound));
  }
  const MeetSemilattice& a = dual.algebra();
  std::vector<int> m(a.size(), -1);
  for (int e = 0; e < a.size(); ++e) {
    Bits img = 0;
    for (int p = 0; p < x.size(); ++p) {
      if (is_subset(nbhd[p], dual.beta(e))) img |= bit(p);
    }
    m[e] = dual.beta_preimage(img);
    if (m[e] < 0) throw Error("random_modal_op: image escaped the upset family");
  }
  return m;
}

MeetRelation random_meet_relation(Rng& rng, const DsSpace& from,
                                  const DsSpace& to) {
  const std::vector<int> order = from.order().linear_extension();
  MeetRelation s(from.size(), 0);
  for (int p : order) {
    Bits bound = to.universe();
    for (int q : order) {
      if (q != p && from.order().leq(q, p)) bound &= s[q];
    }
    s[p] = to.order().up_closure(rng.subset_of(bound));
  }
  return s;
}

std::vector<int> random_homomorphism(Rng& rng, const AlgebraDual& a_dual,
                                     const AlgebraDual& b_dual) {
  const MeetRelation s =
      random_meet_relation(rng, b_dual.space(), a_dual.space());
  const MeetSemilattice& a = a_dual.algebra();
  std::vector<int> h(a.size(), -1);
  for (int e = 0; e < a.size(); ++e) {
    h[e] = b_dual.beta_preimage(h_s(s, a_dual.beta(e)));
    if (h[e] < 0) throw Error("random_homomorphism: image escaped the upsets");
  }
  return h;
}

std::string canonical_order_key(const MeetSemilattice& a) {
  const int n = a.size();
  if (n > 8) throw Error("canonical_order_key: instance too large");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur(static_cast<std::size_t>(n) * n, '0');
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cur[static_cast<std::size_t>(i) * n + j] =
            a.leq(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const MeetSemilattice& a, const MeetSemilattice& b) {
  // Meets are greatest lower bounds, so the order determines the algebra.
  return a.size() == b.size() &&
         canonical_order_key(a) == canonical_order_key(b);
}

namespace {

// Emits every poset whose identity labeling is a linear extension and whose
// last element is the top, then keeps the distributive semilattices.
void enumerate_with_top(int n, std::vector<MeetSemilattice>& out,
                        std::map<std::string, bool>& seen) {
  if (n == 0) return;
  std::vector<Bits> below(n, 0);
  std::vector<std::vector<Bits>> downsets(n);

  // Downsets of the prefix poset on 0..j-1, used as predecessor choices.
  auto prefix_downsets = [&](int j) {
    std::vector<Bits> ds;
    for_each_subset(full_set(j), [&](Bits s) {
      for (int i = 0; i < j; ++i) {
        if (has(s, i) && !is_subset(below[i], s)) return;
      }
      ds.push_back(s);
    });
    return ds;
  };

  auto emit = [&]() {
    auto leq = [&](int x, int y) { return x == y || has(below[y], x); };
    // Greatest lower bounds must exist for every pair.
    std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        Bits lower = 0;
        for (int z = 0; z < n; ++z) {
          if (leq(z, x) && leq(z, y)) lower |= bit(z);
        }
        int g = -1;
        for_each_member(lower, [&](int z) {
          bool greatest = true;
          for_each_member(lower, [&](int w) {
            if (!leq(w, z)) greatest = false;
          });
          if (greatest) g = z;
        });
        if (g < 0) return;
        meet[x][y] = g;
      }
    }
    MeetSemilattice alg = MeetSemilattice::from_table(n, n - 1, meet);
    if (alg.distributivity_witness().has_value()) return;
    const std::string key = canonical_order_key(alg);
    if (seen.emplace(key, true).second) out.push_back(std::move(alg));
  };

  // Depth-first over predecessor downsets for elements 1..n-2; element
  // n-1 is forced above everything.
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n - 1) {
      below[j] = n == 1 ? 0 : full_set(n - 1);
      emit();
      return;
    }
    for (Bits d : prefix_downsets(j)) {
      below[j] = d;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<MeetSemilattice> distributive_catalog(int max_size) {
  if (max_size < 1 || max_size > 7)
    throw Error("distributive_catalog: bound out of range");
  std::vector<MeetSemilattice> out;
  std::map<std::string, bool> seen;
  for (int n = 1; n <= max_size; ++n) enumerate_with_top(n, out, seen);
  std::stable_sort(out.begin(), out.end(),
                   [](const MeetSemilattice& a, const MeetSemilattice& b) {
                     return a.size() < b.size();
                   });
  return out;
}

}  // namespace mds
