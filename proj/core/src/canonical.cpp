#include "attractor/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "word_analysis.hpp"

namespace attractor {

std::vector<std::string> het_separatrices(const Configuration& cfg) {
  std::vector<std::string> out;
  for (const Mark& mk : cfg.marks())
    if (mk.cls == MarkClass::HetSep) out.push_back(mk.orbit);
  return out;
}

namespace {

using detail::Chord;
using detail::WordInfo;

struct Extraction {
  std::set<VecKey> keys;
  std::map<VecKey, int> rho, sigma;
  std::map<VecKey, int> sep_lo, sep_hi;  // chord / closing-HetSep positions
  std::map<VecKey, int> rep_lo, rep_hi;  // representative positions
};

// q_{v,k} comparisons use the true omega-points of the child chords; y (and
// x) are the representative's extreme positions, which already encode its
// parity: the alpha-point comes first exactly when the orbit is even.
void extract_chord(const WordInfo& w, int ci, const VecKey& key,
                   Extraction& ex) {
  const Chord& c = w.chords[static_cast<std::size_t>(ci)];
  const Chord& rep = w.chords[static_cast<std::size_t>(c.rep)];
  ex.keys.insert(key);
  ex.sep_lo[key] = c.lo;
  ex.sep_hi[key] = c.hi;
  ex.rep_lo[key] = rep.lo;
  ex.rep_hi[key] = rep.hi;
  int r = 0, s = 0;
  for (int k : c.hom_children) {
    const int q = w.chords[static_cast<std::size_t>(k)].omega_pos;
    if (q < rep.lo) ++r;
    if (q < rep.hi) ++s;
  }
  ex.rho[key] = r;
  ex.sigma[key] = s;
  int child_index = 1;
  for (int k : c.hom_children) {
    VecKey child = key;
    child.push_back(child_index++);
    extract_chord(w, k, child, ex);
  }
}

}  // namespace

FeasibleSet canonical_feasible_set(const Configuration& cfg, Orientation theta,
                                   const std::string& sigma_orbit,
                                   MarkBijection* bijection) {
  const auto& stored = cfg.marks();
  const int m = static_cast<int>(stored.size());

  int sigma_pos = -1;
  for (int p = 0; p < m; ++p) {
    const Mark& mk = stored[static_cast<std::size_t>(p)];
    if (mk.orbit == sigma_orbit) {
      if (mk.cls != MarkClass::HetSep)
        throw ConfigError(ConfigError::Code::NotHeteroclinic,
                          "orbit " + sigma_orbit +
                              " is not a heteroclinic separatrix");
      sigma_pos = p;
    }
  }
  if (sigma_pos < 0)
    throw ConfigError(ConfigError::Code::NotHeteroclinic,
                      "orbit " + sigma_orbit + " does not appear");

  // Arc A: marks ordered by the chosen orientation with the omega-point of
  // sigma maximal. The stored word is the counterclockwise order.
  std::vector<Mark> linear;
  std::vector<int> stored_pos;  // linear index -> stored index
  linear.reserve(stored.size());
  stored_pos.reserve(stored.size());
  if (theta == Orientation::CCW) {
    for (int k = 1; k <= m; ++k) {
      const int p = (sigma_pos + k) % m;
      linear.push_back(stored[static_cast<std::size_t>(p)]);
      stored_pos.push_back(p);
    }
  } else {
    for (int k = 1; k <= m; ++k) {
      const int p = (sigma_pos - k + 2 * m) % m;
      linear.push_back(stored[static_cast<std::size_t>(p)]);
      stored_pos.push_back(p);
    }
  }

  const WordInfo w = detail::analyze_word(linear);
  const int t = static_cast<int>(w.het_sep_pos.size());

  Extraction ex;
  for (int j = 0; j < t; ++j) {
    const VecKey key{j + 1};
    ex.keys.insert(key);
    ex.sep_hi[key] = w.het_sep_pos[static_cast<std::size_t>(j)];
    ex.rep_hi[key] = w.sector_rep_pos[static_cast<std::size_t>(j)];
    int s = 0;
    for (int ci : w.sector_chords[static_cast<std::size_t>(j)]) {
      const int q = w.chords[static_cast<std::size_t>(ci)].omega_pos;
      if (q < w.sector_rep_pos[static_cast<std::size_t>(j)]) ++s;
    }
    ex.sigma[key] = s;
    int child_index = 1;
    for (int ci : w.sector_chords[static_cast<std::size_t>(j)]) {
      VecKey child = key;
      child.push_back(child_index++);
      extract_chord(w, ci, child, ex);
    }
  }

  FeasibleSet L = [&] {
    try {
      return FeasibleSet::validate(CompleteBase::validate(ex.keys), ex.rho,
                                   ex.sigma);
    } catch (const FeasibleError& e) {
      throw ConfigError(ConfigError::Code::NonRealizable,
                        std::string("extracted set is not feasible: ") +
                            e.what());
    }
  }();

  // The bijection element -> mark built above must also preserve flow
  // directions; a mismatch means the mark labelling fits no actual flow.
  const auto parity = parity_map(L);
  MarkBijection positions;
  positions.reserve(L.elements().size());
  for (const Element& e : L.elements()) {
    const VecKey& v = e.key;
    int pos;
    if (v.size() == 1) {
      pos = e.last == Third::of_int(L.lambda(v) + 1) ? ex.sep_hi.at(v)
                                                     : ex.rep_hi.at(v);
    } else if (e.last == Third::of_int(0)) {
      pos = ex.sep_lo.at(v);
    } else if (e.last == Third::of_int(L.lambda(v) + 1)) {
      pos = ex.sep_hi.at(v);
    } else if (e.last == Third::of_int(L.rho(v)) + kOneThird) {
      pos = ex.rep_lo.at(v);
    } else {
      pos = ex.rep_hi.at(v);
    }
    const EndKind expected = end_kind(L, parity, e);
    const EndKind actual = linear[static_cast<std::size_t>(pos)].end;
    if (expected != actual)
      throw ConfigError(
          ConfigError::Code::NonRealizable,
          "direction mismatch: element " + element_str(e) + " maps to a " +
              (actual == EndKind::Alpha ? "alpha" : "omega") +
              " mark of orbit " + linear[static_cast<std::size_t>(pos)].orbit +
              " but classifies as " +
              (expected == EndKind::Alpha ? "alpha" : "omega"));
    positions.push_back(
        static_cast<std::size_t>(stored_pos[static_cast<std::size_t>(pos)]));
  }
  if (bijection) *bijection = std::move(positions);
  return L;
}

EquivalenceResult decide_equivalence(const Configuration& a,
                                     const Configuration& b) {
  const auto seps_a = het_separatrices(a);
  const auto seps_b = het_separatrices(b);
  constexpr Orientation kOrients[] = {Orientation::CCW, Orientation::CW};

  std::vector<std::pair<EquivalenceWitness, FeasibleSet>> left, right;
  for (Orientation ta : kOrients)
    for (const auto& sa : seps_a)
      left.push_back({{ta, sa, Orientation::CCW, ""},
                      canonical_feasible_set(a, ta, sa)});
  for (Orientation tb : kOrients)
    for (const auto& sb : seps_b)
      right.push_back({{Orientation::CCW, "", tb, sb},
                       canonical_feasible_set(b, tb, sb)});

  for (const auto& [wa, La] : left)
    for (const auto& [wb, Lb] : right)
      if (La == Lb) {
        EquivalenceWitness witness{wa.theta1, wa.sigma1, wb.theta2, wb.sigma2};
        return {true, witness};
      }
  return {false, std::nullopt};
}

}  // namespace attractor
