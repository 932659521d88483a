#include "attractor/configuration.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "word_analysis.hpp"

namespace attractor {

namespace detail {

WordInfo analyze_word(const std::vector<Mark>& linear) {
  using Code = ConfigError::Code;
  const int m = static_cast<int>(linear.size());

  struct OrbitInfo {
    MarkClass cls;
    std::vector<int> positions;
    int alphas = 0;
  };
  std::map<std::string, OrbitInfo> orbits;
  for (int p = 0; p < m; ++p) {
    const Mark& mk = linear[static_cast<std::size_t>(p)];
    auto [it, fresh] = orbits.try_emplace(mk.orbit, OrbitInfo{mk.cls, {}, 0});
    if (!fresh && it->second.cls != mk.cls)
      throw ConfigError(Code::BadMarkCount,
                        "orbit " + mk.orbit + " has marks of mixed classes");
    it->second.positions.push_back(p);
    if (mk.end == EndKind::Alpha) ++it->second.alphas;
  }

  for (const auto& [name, info] : orbits) {
    if (is_het(info.cls)) {
      if (info.positions.size() != 1)
        throw ConfigError(Code::BadMarkCount,
                          "heteroclinic orbit " + name +
                              " must have exactly one mark, has " +
                              std::to_string(info.positions.size()));
      if (info.alphas != 0)
        throw ConfigError(Code::BadMarkCount,
                          "heteroclinic orbit " + name +
                              " carries an alpha mark");
    } else {
      if (info.positions.size() != 2)
        throw ConfigError(Code::BadMarkCount,
                          "homoclinic orbit " + name +
                              " must have exactly two marks, has " +
                              std::to_string(info.positions.size()));
      if (info.alphas != 1)
        throw ConfigError(Code::BadMarkCount,
                          "homoclinic orbit " + name +
                              " must have one alpha and one omega mark");
    }
  }

  WordInfo w;
  for (int p = 0; p < m; ++p) {
    const Mark& mk = linear[static_cast<std::size_t>(p)];
    if (mk.cls == MarkClass::HetSep) {
      w.het_sep_pos.push_back(p);
      w.het_sep_orbit.push_back(mk.orbit);
    }
  }
  if (w.het_sep_pos.empty())
    throw ConfigError(Code::BadMarkCount, "no heteroclinic separatrix mark");
  bool any_hom_sep = false;
  for (const auto& [name, info] : orbits)
    if (info.cls == MarkClass::HomSep) any_hom_sep = true;
  if (!any_hom_sep)
    throw ConfigError(Code::TrivialCase,
                      "no homoclinic separatrix: the flow is the trivial "
                      "positively stable case");

  // Here the caller guarantees the last mark is a HetSep omega-point, so no
  // chord wraps the cut: an inner arc containing the cut would contain that
  // heteroclinic mark and is rejected below anyway.
  std::vector<int> het_prefix(static_cast<std::size_t>(m) + 1, 0);
  for (int p = 0; p < m; ++p)
    het_prefix[static_cast<std::size_t>(p) + 1] =
        het_prefix[static_cast<std::size_t>(p)] +
        (is_het(linear[static_cast<std::size_t>(p)].cls) ? 1 : 0);

  std::map<std::string, int> chord_of_orbit;
  for (const auto& [name, info] : orbits) {
    if (is_het(info.cls)) continue;
    Chord c;
    c.orbit = name;
    c.cls = info.cls;
    c.lo = info.positions[0];
    c.hi = info.positions[1];
    c.omega_pos =
        linear[static_cast<std::size_t>(c.lo)].end == EndKind::Omega ? c.lo
                                                                     : c.hi;
    if (het_prefix[static_cast<std::size_t>(c.hi)] -
            het_prefix[static_cast<std::size_t>(c.lo) + 1] >
        0)
      throw ConfigError(Code::HetInsideHom,
                        "heteroclinic mark inside the chord of orbit " + name);
    chord_of_orbit[name] = static_cast<int>(w.chords.size());
    w.chords.push_back(std::move(c));
  }

  // Well-nestedness and parent links in one sweep.
  std::vector<int> stack;
  for (int p = 0; p < m; ++p) {
    const Mark& mk = linear[static_cast<std::size_t>(p)];
    if (is_het(mk.cls)) continue;
    const int ci = chord_of_orbit.at(mk.orbit);
    Chord& c = w.chords[static_cast<std::size_t>(ci)];
    if (p == c.lo) {
      c.parent = stack.empty() ? -1 : stack.back();
      stack.push_back(ci);
    } else {
      if (stack.empty() || stack.back() != ci)
        throw ConfigError(
            Code::CrossingChords,
            "chords of orbits " + c.orbit + " and " +
                w.chords[static_cast<std::size_t>(stack.back())].orbit +
                " interleave");
      stack.pop_back();
    }
  }

  const int t = static_cast<int>(w.het_sep_pos.size());
  auto sector_of = [&](int pos) {
    // sector j = positions in (het_sep_pos[j-1], het_sep_pos[j])
    const int j = static_cast<int>(
        std::lower_bound(w.het_sep_pos.begin(), w.het_sep_pos.end(), pos) -
        w.het_sep_pos.begin());
    return j;
  };

  for (auto& c : w.chords) {
    for (int a = c.parent; a != -1;
         a = w.chords[static_cast<std::size_t>(a)].parent) {
      if (w.chords[static_cast<std::size_t>(a)].cls == MarkClass::HomSep) {
        c.hom_parent = a;
        break;
      }
    }
    if (c.hom_parent == -1) c.sector = sector_of(c.lo);
  }

  w.sector_chords.assign(static_cast<std::size_t>(t), {});
  for (int ci = 0; ci < static_cast<int>(w.chords.size()); ++ci) {
    Chord& c = w.chords[static_cast<std::size_t>(ci)];
    if (c.cls == MarkClass::HomSep) {
      if (c.hom_parent >= 0)
        w.chords[static_cast<std::size_t>(c.hom_parent)].hom_children
            .push_back(ci);
      else
        w.sector_chords[static_cast<std::size_t>(c.sector)].push_back(ci);
    } else {  // HomRep
      if (c.hom_parent < 0)
        throw ConfigError(Code::MissingRepresentative,
                          "representative orbit " + c.orbit +
                              " is not inside any homoclinic separatrix");
      Chord& owner = w.chords[static_cast<std::size_t>(c.hom_parent)];
      if (owner.rep != -1)
        throw ConfigError(Code::MissingRepresentative,
                          "separatrix " + owner.orbit +
                              " has more than one direct representative");
      owner.rep = ci;
    }
  }
  for (const auto& c : w.chords) {
    if (c.cls == MarkClass::HomSep && c.rep == -1)
      throw ConfigError(Code::MissingRepresentative,
                        "separatrix " + c.orbit +
                            " has no direct representative orbit");
  }
  for (auto& c : w.chords)
    std::sort(c.hom_children.begin(), c.hom_children.end(),
              [&](int a, int b) {
                return w.chords[static_cast<std::size_t>(a)].lo <
                       w.chords[static_cast<std::size_t>(b)].lo;
              });
  for (auto& sc : w.sector_chords)
    std::sort(sc.begin(), sc.end(), [&](int a, int b) {
      return w.chords[static_cast<std::size_t>(a)].lo <
             w.chords[static_cast<std::size_t>(b)].lo;
    });

  w.sector_rep_pos.assign(static_cast<std::size_t>(t), -1);
  w.sector_rep_orbit.assign(static_cast<std::size_t>(t), {});
  for (int p = 0; p < m; ++p) {
    const Mark& mk = linear[static_cast<std::size_t>(p)];
    if (mk.cls != MarkClass::HetRep) continue;
    const int j = sector_of(p);
    if (w.sector_rep_pos[static_cast<std::size_t>(j)] != -1)
      throw ConfigError(Code::MissingRepresentative,
                        "sector closed by " +
                            w.het_sep_orbit[static_cast<std::size_t>(j)] +
                            " has more than one representative");
    w.sector_rep_pos[static_cast<std::size_t>(j)] = p;
    w.sector_rep_orbit[static_cast<std::size_t>(j)] = mk.orbit;
  }
  for (int j = 0; j < t; ++j)
    if (w.sector_rep_pos[static_cast<std::size_t>(j)] == -1)
      throw ConfigError(Code::MissingRepresentative,
                        "sector closed by " +
                            w.het_sep_orbit[static_cast<std::size_t>(j)] +
                            " has no representative");
  return w;
}

}  // namespace detail

namespace {

std::vector<Mark> rotate_to_het_sep_end(const std::vector<Mark>& marks) {
  // Cut just after the last HetSep in stored order, so the word ends at a
  // HetSep omega-point and no valid chord wraps the cut.
  const int m = static_cast<int>(marks.size());
  int last_het = -1;
  for (int p = 0; p < m; ++p)
    if (marks[static_cast<std::size_t>(p)].cls == MarkClass::HetSep)
      last_het = p;
  if (last_het < 0)
    throw ConfigError(ConfigError::Code::BadMarkCount,
                      "no heteroclinic separatrix mark");
  std::vector<Mark> linear;
  linear.reserve(marks.size());
  for (int k = 1; k <= m; ++k)
    linear.push_back(marks[static_cast<std::size_t>((last_het + k) % m)]);
  return linear;
}

}  // namespace

Configuration Configuration::validate(std::vector<Mark> marks) {
  if (marks.empty())
    throw ConfigError(ConfigError::Code::BadMarkCount, "empty configuration");
  detail::analyze_word(rotate_to_het_sep_end(marks));
  Configuration cfg;
  cfg.marks_ = std::move(marks);
  return cfg;
}

Configuration Configuration::rotated(std::size_t shift) const {
  std::vector<Mark> marks;
  marks.reserve(marks_.size());
  for (std::size_t k = 0; k < marks_.size(); ++k)
    marks.push_back(marks_[(k + shift) % marks_.size()]);
  return validate(std::move(marks));
}

Configuration Configuration::mirrored() const {
  std::vector<Mark> marks(marks_.rbegin(), marks_.rend());
  return validate(std::move(marks));
}

Configuration Configuration::relabeled(const std::string& prefix) const {
  std::vector<Mark> marks = marks_;
  for (Mark& mk : marks) mk.orbit = prefix + mk.orbit;
  return validate(std::move(marks));
}

namespace {

using nlohmann::json;

constexpr const char* kClassNames[] = {"het_sep", "hom_sep", "het_rep",
                                       "hom_rep"};

MarkClass class_from_string(const std::string& s) {
  for (int i = 0; i < 4; ++i)
    if (s == kClassNames[i]) return static_cast<MarkClass>(i);
  throw ConfigError(ConfigError::Code::SyntaxError,
                    "unknown mark class \"" + s + "\"");
}

}  // namespace

Configuration config_from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigError::Code::SyntaxError,
                      std::string("json parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("marks") || !j["marks"].is_array())
    throw ConfigError(ConfigError::Code::SyntaxError,
                      "expected an object with a \"marks\" array");
  std::vector<Mark> marks;
  for (const auto& jm : j["marks"]) {
    if (!jm.is_object() || !jm.contains("orbit") || !jm.contains("end") ||
        !jm.contains("class"))
      throw ConfigError(ConfigError::Code::SyntaxError,
                        "each mark needs \"orbit\", \"end\" and \"class\"");
    Mark mk;
    mk.orbit = jm["orbit"].get<std::string>();
    const std::string end = jm["end"].get<std::string>();
    if (end == "alpha")
      mk.end = EndKind::Alpha;
    else if (end == "omega")
      mk.end = EndKind::Omega;
    else
      throw ConfigError(ConfigError::Code::SyntaxError,
                        "mark end must be \"alpha\" or \"omega\"");
    mk.cls = class_from_string(jm["class"].get<std::string>());
    marks.push_back(std::move(mk));
  }
  return Configuration::validate(std::move(marks));
}

std::string config_to_json_text(const Configuration& cfg) {
  json j;
  j["marks"] = json::array();
  for (const Mark& mk : cfg.marks()) {
    json jm;
    jm["orbit"] = mk.orbit;
    jm["end"] = mk.end == EndKind::Alpha ? "alpha" : "omega";
    jm["class"] = kClassNames[static_cast<int>(mk.cls)];
    j["marks"].push_back(std::move(jm));
  }
  return j.dump(2) + "\n";
}

namespace {

ChordNode build_node(const detail::WordInfo& w, int ci) {
  const detail::Chord& c = w.chords[static_cast<std::size_t>(ci)];
  ChordNode node;
  node.orbit = c.orbit;
  node.rep_orbit = w.chords[static_cast<std::size_t>(c.rep)].orbit;
  for (int k : c.hom_children) node.children.push_back(build_node(w, k));
  return node;
}

}  // namespace

NestingTree nesting_tree(const Configuration& cfg) {
  const auto linear = rotate_to_het_sep_end(cfg.marks());
  const detail::WordInfo w = detail::analyze_word(linear);
  NestingTree tree;
  for (std::size_t j = 0; j < w.het_sep_pos.size(); ++j) {
    Sector s;
    s.het_sep = w.het_sep_orbit[j];
    s.het_rep = w.sector_rep_orbit[j];
    for (int ci : w.sector_chords[j]) s.chords.push_back(build_node(w, ci));
    tree.sectors.push_back(std::move(s));
  }
  return tree;
}

}  // namespace attractor
