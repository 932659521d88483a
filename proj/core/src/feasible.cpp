#include "attractor/feasible.hpp"

#include <algorithm>

namespace attractor {

std::string key_str(const VecKey& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string element_str(const Element& e) {
  std::string s = "(";
  for (int x : e.key) s += std::to_string(x) + ",";
  s += e.last.str();
  s += ")";
  return s;
}

CompleteBase CompleteBase::validate(const std::set<VecKey>& keys) {
  if (keys.empty())
    throw FeasibleError(FeasibleError::Code::EmptyBase, {}, "base is empty");

  for (const VecKey& v : keys) {
    if (v.empty())
      throw FeasibleError(FeasibleError::Code::MissingPrefix, v,
                          "empty key is not allowed");
    for (int x : v)
      if (x < 1)
        throw FeasibleError(FeasibleError::Code::MissingSibling, v,
                            "key " + key_str(v) + " has a non-positive entry");
    VecKey prefix;
    for (std::size_t m = 0; m + 1 < v.size(); ++m) {
      prefix.push_back(v[m]);
      if (!keys.count(prefix))
        throw FeasibleError(
            FeasibleError::Code::MissingPrefix, v,
            "key " + key_str(v) + " requires prefix " + key_str(prefix));
    }
    VecKey sib = v;
    for (int i = 1; i < v.back(); ++i) {
      sib.back() = i;
      if (!keys.count(sib))
        throw FeasibleError(
            FeasibleError::Code::MissingSibling, v,
            "key " + key_str(v) + " requires sibling " + key_str(sib));
    }
  }

  CompleteBase base;
  for (const VecKey& v : keys) base.lambda_[v] = 0;
  for (const VecKey& v : keys) {
    if (v.size() == 1) {
      base.lambda_root_ = std::max(base.lambda_root_, v[0]);
    } else {
      VecKey parent(v.begin(), v.end() - 1);
      int& l = base.lambda_[parent];
      l = std::max(l, v.back());
    }
  }
  return base;
}

int CompleteBase::lambda(const VecKey& v) const {
  auto it = lambda_.find(v);
  if (it == lambda_.end())
    throw FeasibleError(FeasibleError::Code::MissingPrefix, v,
                        "key " + key_str(v) + " is not in the base");
  return it->second;
}

std::strong_ordering compare_lex(const Element& a, const Element& b) {
  auto comp = [](const Element& e, std::size_t i) {
    return i < e.key.size() ? Third::of_int(e.key[i]) : e.last;
  };
  const std::size_t la = a.key.size() + 1, lb = b.key.size() + 1;
  for (std::size_t i = 0; i < std::min(la, lb); ++i) {
    auto c = comp(a, i) <=> comp(b, i);
    if (c != std::strong_ordering::equal) return c;
  }
  if (la == lb) return std::strong_ordering::equal;
  throw FeasibleError(FeasibleError::Code::PrefixTie, a.key,
                      "element " + element_str(a) + " is a strict prefix of " +
                          element_str(b) + "; unreachable for a valid set");
}

std::vector<Element> derive_elements(const CompleteBase& base,
                                     const std::map<VecKey, int>& rho,
                                     const std::map<VecKey, int>& sigma) {
  std::vector<Element> out;
  for (const auto& [v, lam] : base.lambdas()) {
    const int s = sigma.at(v);
    if (v.size() == 1) {
      out.push_back({v, Third::of_int(lam + 1)});
      out.push_back({v, Third::of_int(s) + kTwoThirds});
    } else {
      const int r = rho.at(v);
      out.push_back({v, Third::of_int(0)});
      out.push_back({v, Third::of_int(lam + 1)});
      out.push_back({v, Third::of_int(r) + kOneThird});
      out.push_back({v, Third::of_int(s) + kTwoThirds});
    }
  }
  std::sort(out.begin(), out.end(), ElementLess{});
  return out;
}

FeasibleSet FeasibleSet::validate(CompleteBase base, std::map<VecKey, int> rho,
                                  std::map<VecKey, int> sigma) {
  for (const auto& [v, r] : rho)
    if (!base.contains(v) || v.size() < 2)
      throw FeasibleError(FeasibleError::Code::RhoSigmaOutOfRange, v,
                          "rho given for unknown or length-1 key " +
                              key_str(v));
  for (const auto& [v, s] : sigma)
    if (!base.contains(v))
      throw FeasibleError(FeasibleError::Code::RhoSigmaOutOfRange, v,
                          "sigma given for unknown key " + key_str(v));

  for (const auto& [v, lam] : base.lambdas()) {
    auto is = sigma.find(v);
    if (is == sigma.end())
      throw FeasibleError(FeasibleError::Code::RhoSigmaOutOfRange, v,
                          "sigma missing for key " + key_str(v));
    const int s = is->second;
    if (s < 0 || s > lam)
      throw FeasibleError(FeasibleError::Code::RhoSigmaOutOfRange, v,
                          "sigma(" + key_str(v) + ") = " + std::to_string(s) +
                              " outside [0, " + std::to_string(lam) + "]");
    if (v.size() >= 2) {
      auto ir = rho.find(v);
      if (ir == rho.end())
        throw FeasibleError(FeasibleError::Code::RhoSigmaOutOfRange, v,
                            "rho missing for key " + key_str(v));
      const int r = ir->second;
      if (r < 0 || r > s)
        throw FeasibleError(FeasibleError::Code::RhoSigmaOutOfRange, v,
                            "rho(" + key_str(v) + ") = " + std::to_string(r) +
                                " outside [0, sigma = " + std::to_string(s) +
                                "]");
    } else if (rho.count(v)) {
      throw FeasibleError(FeasibleError::Code::RhoSigmaOutOfRange, v,
                          "rho given for length-1 key " + key_str(v));
    }
  }

  const int t = base.lambda_root();
  bool has_depth = false;
  for (int i = 1; i <= t; ++i)
    if (base.lambda({i}) >= 1) has_depth = true;
  if (!has_depth)
    throw FeasibleError(FeasibleError::Code::NoLengthTwoKey, {},
                        "no length-1 key has a child; the base must contain "
                        "a key of length 2");

  // Condition (iii), cyclic over the sectors: the rightmost marker of
  // sector i and the leftmost marker of sector i+1 cannot both be extreme.
  for (int i = 1; i <= t; ++i) {
    const int next = (i == t) ? 1 : i + 1;
    if (sigma.at({i}) == base.lambda({i}) && sigma.at({next}) == 0)
      throw FeasibleError(
          FeasibleError::Code::ConditionIII, {i},
          "condition (iii) fails at sector pair (" + std::to_string(i) + "," +
              std::to_string(next) + "): sigma(" + std::to_string(i) +
              ") = lambda(" + std::to_string(i) + ") and sigma(" +
              std::to_string(next) + ") = 0");
  }

  for (const auto& [v, lam] : base.lambdas()) {
    if (v.size() < 2 || lam != 1) continue;
    VecKey child = v;
    child.push_back(1);
    if (rho.at(v) == 0 && sigma.at(v) == 1 && rho.at(child) == 0 &&
        sigma.at(child) == base.lambda(child))
      throw FeasibleError(
          FeasibleError::Code::ConditionIV, v,
          "condition (iv) fails at key " + key_str(v) +
              ": rho = 0, sigma = 1, rho(child) = 0, sigma(child) = lambda");
  }

  FeasibleSet L;
  L.base_ = std::move(base);
  L.rho_ = std::move(rho);
  L.sigma_ = std::move(sigma);
  L.elements_ = derive_elements(L.base_, L.rho_, L.sigma_);
  for (const auto& [v, lam] : L.base_.lambdas())
    L.max_len_ = std::max(L.max_len_, static_cast<int>(v.size()));
  return L;
}

int FeasibleSet::rho(const VecKey& v) const {
  if (v.size() == 1) return 0;
  return rho_.at(v);
}

int FeasibleSet::sigma(const VecKey& v) const { return sigma_.at(v); }

std::map<VecKey, Parity> parity_map(const FeasibleSet& L) {
  std::map<VecKey, Parity> parity;
  // Keys sorted by (length, value) so parents are always seen first; the
  // std::map order already guarantees prefixes precede extensions.
  for (const auto& [v, lam] : L.base().lambdas()) {
    if (v.size() == 1) {
      parity[v] = Parity::Even;
      continue;
    }
    VecKey parent(v.begin(), v.end() - 1);
    const int j = v.back();
    const bool same = L.rho(parent) < j && j <= L.sigma(parent);
    const Parity p = parity.at(parent);
    parity[v] = same ? p : (p == Parity::Even ? Parity::Odd : Parity::Even);
  }
  return parity;
}

EndKind end_kind(const FeasibleSet& L, const std::map<VecKey, Parity>& parity,
                 const Element& e) {
  const VecKey& v = e.key;
  const Third h = e.last;
  if (parity.at(v) == Parity::Even) {
    if (h == Third::of_int(0) || h == Third::of_int(L.rho(v)) + kOneThird)
      return EndKind::Alpha;
  } else {
    if (h == Third::of_int(L.lambda(v) + 1) ||
        h == Third::of_int(L.sigma(v)) + kTwoThirds)
      return EndKind::Alpha;
  }
  return EndKind::Omega;
}

std::vector<EndKind> classify_ends(const FeasibleSet& L) {
  const auto parity = parity_map(L);
  std::vector<EndKind> out;
  out.reserve(L.elements().size());
  for (const Element& e : L.elements()) out.push_back(end_kind(L, parity, e));
  return out;
}

}  // namespace attractor
