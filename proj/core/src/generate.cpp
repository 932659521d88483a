#include "attractor/generate.hpp"

#include <algorithm>
#include <set>

namespace attractor {

namespace {

// All ordered forests with exactly n nodes whose roots are
// (parent,first), (parent,first+1), ...  A complete base is exactly such a
// forest with parent = ().
std::vector<std::vector<VecKey>> forest_sets(const VecKey& parent, int first,
                                             int n) {
  std::vector<std::vector<VecKey>> result;
  if (n == 0) {
    result.emplace_back();
    return result;
  }
  VecKey root = parent;
  root.push_back(first);
  for (int k = 1; k <= n; ++k) {
    const auto children = forest_sets(root, 1, k - 1);
    const auto rest = forest_sets(parent, first + 1, n - k);
    for (const auto& c : children)
      for (const auto& r : rest) {
        std::vector<VecKey> keys;
        keys.reserve(1 + c.size() + r.size());
        keys.push_back(root);
        keys.insert(keys.end(), c.begin(), c.end());
        keys.insert(keys.end(), r.begin(), r.end());
        result.push_back(std::move(keys));
      }
  }
  return result;
}

}  // namespace

FeasibleSet random_feasible(std::mt19937_64& rng, int max_keys) {
  for (;;) {
    const int n = draw_int(rng, 2, max_keys);
    std::vector<VecKey> keys;
    keys.push_back({1});
    keys.push_back({1, 1});  // guarantees a length-2 key
    while (static_cast<int>(keys.size()) < n) {
      // parent index -1 stands for the virtual root (adds a new sector)
      const int pi = draw_int(rng, -1, static_cast<int>(keys.size()) - 1);
      const VecKey parent =
          pi < 0 ? VecKey{} : keys[static_cast<std::size_t>(pi)];
      int max_sibling = 0;
      for (const VecKey& k : keys)
        if (k.size() == parent.size() + 1 &&
            std::equal(parent.begin(), parent.end(), k.begin()))
          max_sibling = std::max(max_sibling, k.back());
      VecKey child = parent;
      child.push_back(max_sibling + 1);
      keys.push_back(std::move(child));
    }
    std::set<VecKey> key_set(keys.begin(), keys.end());
    CompleteBase base = CompleteBase::validate(key_set);

    std::map<VecKey, int> rho, sigma;
    for (const auto& [v, lam] : base.lambdas()) {
      const int s = draw_int(rng, 0, lam);
      sigma[v] = s;
      if (v.size() >= 2) rho[v] = draw_int(rng, 0, s);
    }
    try {
      return FeasibleSet::validate(std::move(base), std::move(rho),
                                   std::move(sigma));
    } catch (const FeasibleError&) {
      // conditions (iii)/(iv) rejected the draw; resample
    }
  }
}

std::vector<FeasibleSet> enumerate_feasible(int max_keys) {
  std::vector<FeasibleSet> out;
  for (int n = 2; n <= max_keys; ++n) {
    for (const auto& keys : forest_sets({}, 1, n)) {
      std::set<VecKey> key_set(keys.begin(), keys.end());
      CompleteBase base = CompleteBase::validate(key_set);

      std::vector<VecKey> order;
      for (const auto& [v, lam] : base.lambdas()) order.push_back(v);

      std::map<VecKey, int> rho, sigma;
      auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
          try {
            out.push_back(FeasibleSet::validate(base, rho, sigma));
          } catch (const FeasibleError&) {
          }
          return;
        }
        const VecKey& v = order[idx];
        const int lam = base.lambda(v);
        for (int s = 0; s <= lam; ++s) {
          sigma[v] = s;
          if (v.size() >= 2) {
            for (int r = 0; r <= s; ++r) {
              rho[v] = r;
              self(self, idx + 1);
            }
            rho.erase(v);
          } else {
            self(self, idx + 1);
          }
        }
        sigma.erase(v);
      };
      rec(rec, 0);
    }
  }
  return out;
}

}  // namespace attractor
