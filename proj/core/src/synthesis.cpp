#include "attractor/synthesis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace attractor {

std::string sep_orbit_id(const VecKey& v) { return "sep:" + key_str(v); }
std::string rep_orbit_id(const VecKey& v) { return "rep:" + key_str(v); }

Configuration synthesize_configuration(const FeasibleSet& L) {
  const auto ends = classify_ends(L);
  std::vector<Mark> marks;
  marks.reserve(L.elements().size());
  for (std::size_t k = 0; k < L.elements().size(); ++k) {
    const Element& e = L.elements()[k];
    const VecKey& v = e.key;
    Mark mk;
    mk.end = ends[k];
    if (v.size() == 1) {
      if (e.last == Third::of_int(L.lambda(v) + 1)) {
        mk.cls = MarkClass::HetSep;
        mk.orbit = sep_orbit_id(v);
      } else {
        mk.cls = MarkClass::HetRep;
        mk.orbit = rep_orbit_id(v);
      }
    } else {
      if (e.last == Third::of_int(0) ||
          e.last == Third::of_int(L.lambda(v) + 1)) {
        mk.cls = MarkClass::HomSep;
        mk.orbit = sep_orbit_id(v);
      } else {
        mk.cls = MarkClass::HomRep;
        mk.orbit = rep_orbit_id(v);
      }
    }
    marks.push_back(std::move(mk));
  }
  return Configuration::validate(std::move(marks));
}

bool ZeroSet::contains(double x) const {
  for (const auto& [lo, hi] : intervals)
    if (x >= lo && x <= hi) return true;
  return false;
}

std::vector<std::pair<double, double>> ZeroSet::gaps() const {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k + 1 < intervals.size(); ++k)
    if (intervals[k].second < intervals[k + 1].first)
      out.emplace_back(intervals[k].second, intervals[k + 1].first);
  return out;
}

double kappa_eval(const ZeroSet& zeros, double x_local) {
  if (zeros.contains(x_local)) return 0;
  for (const auto& [a, b] : zeros.gaps())
    if (x_local > a && x_local < b) {
      const double s = std::sin(M_PI * (x_local - a) / (b - a));
      return s * s;
    }
  return 0;  // outside the base interval
}

namespace {

void merge_touching(std::vector<std::pair<double, double>>& iv) {
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& [lo, hi] : iv) {
    if (!merged.empty() && lo <= merged.back().second)
      merged.back().second = std::max(merged.back().second, hi);
    else
      merged.emplace_back(lo, hi);
  }
  iv = std::move(merged);
}

}  // namespace

ZeroSet f_zero_set(int s, int j) {
  ZeroSet z;
  if (s == 0)
    z.intervals.emplace_back(-1.0, 0.0);
  else
    for (int i = 0; i <= s; ++i) {
      const double x = -static_cast<double>(i) / s;
      z.intervals.emplace_back(x, x);
    }
  if (s == j)
    z.intervals.emplace_back(0.0, 1.0);
  else
    for (int i = 0; i <= j - s; ++i) {
      const double x = static_cast<double>(i) / (j - s);
      z.intervals.emplace_back(x, x);
    }
  merge_touching(z.intervals);
  return z;
}

ZeroSet g_zero_set(int r, int s, int j) {
  ZeroSet z;
  if (r == 0)
    z.intervals.emplace_back(-1.0, -0.5);
  else
    for (int i = 0; i <= r; ++i) {
      const double x = -1.0 + static_cast<double>(i) / (2 * r);
      z.intervals.emplace_back(x, x);
    }
  if (r == s)
    z.intervals.emplace_back(-0.5, 0.5);
  else
    for (int i = 0; i <= s - r; ++i) {
      const double x = -0.5 + static_cast<double>(i) / (s - r);
      z.intervals.emplace_back(x, x);
    }
  if (s == j)
    z.intervals.emplace_back(0.5, 1.0);
  else
    for (int i = 0; i <= j - s; ++i) {
      const double x = 0.5 + static_cast<double>(i) / (2 * (j - s));
      z.intervals.emplace_back(x, x);
    }
  merge_touching(z.intervals);
  return z;
}

Vec2 f_base(double x, double y) { return {x * (x * x - 1), -y}; }

Vec2 g_base(double x, double y) {
  const double w = 1 - (1 - y) * (1 - y) / 2;
  return {(x * x - 1) * (x * x - w * w), y * (y - 1) * x};
}

Vec2 eval_block_local(const BlockSpec& block, double x_local, double y_local) {
  switch (block.kind) {
    case BlockSpec::Kind::F: {
      const double factor =
          kappa_eval(block.zeros, x_local) + y_local * y_local;
      return factor * f_base(x_local, y_local);
    }
    case BlockSpec::Kind::GPlus:
    case BlockSpec::Kind::GMinus: {
      const double factor =
          (kappa_eval(block.zeros, x_local) + y_local * y_local) *
          (1 - x_local * x_local);
      Vec2 v = factor * g_base(x_local, y_local);
      if (block.kind == BlockSpec::Kind::GMinus) v = -1.0 * v;
      return v;
    }
    case BlockSpec::Kind::Null:
      return {0, 0};
  }
  return {0, 0};
}

StripField build_block_layout(const FeasibleSet& L) {
  const int t = L.sector_count();
  const int n = L.max_key_length();
  const auto parity = parity_map(L);

  BlockLayout lay;
  lay.t = t;
  lay.n = n;
  lay.bands.assign(static_cast<std::size_t>(n), {});

  for (const auto& [v, p] : parity)
    lay.rightward[v] =
        v.size() == 1 ? true : (p == Parity::Even);  // Even flows rightward

  for (int i = 1; i <= t; ++i) {
    const VecKey key{i};
    BlockSpec b;
    b.kind = BlockSpec::Kind::F;
    b.key = key;
    b.x_lo = i - 1.0;
    b.x_hi = i;
    b.y_lo = 0;
    b.y_hi = std::numeric_limits<double>::infinity();
    b.s = L.sigma(key);
    b.j = L.lambda(key);
    b.zeros = f_zero_set(b.s, b.j);
    lay.f_blocks.push_back(lay.blocks.size());
    lay.bands[0].push_back(lay.blocks.size());
    lay.blocks.push_back(std::move(b));

    OrbitLine sep;
    sep.vertical = true;
    sep.x = i;
    lay.orbit_lines[key] = sep;
    OrbitLine rep;
    rep.vertical = true;
    rep.x = i - 0.5;
    lay.rep_rays[key] = rep;
  }

  // Band by band: gaps of the base edge above spawn the blocks of the next
  // level, zero intervals and null footprints continue as null blocks.
  for (int band = 1; band <= n - 1; ++band) {
    const double y_hi = -band + 1.0;
    const double y_lo = -static_cast<double>(band);
    std::vector<std::pair<double, double>> null_iv;
    std::vector<BlockSpec> added;

    for (std::size_t bi : lay.bands[static_cast<std::size_t>(band - 1)]) {
      const BlockSpec parent = lay.blocks[bi];  // copy: blocks vector grows
      if (parent.kind == BlockSpec::Kind::Null) {
        null_iv.emplace_back(parent.x_lo, parent.x_hi);
        continue;
      }
      const double mid = (parent.x_lo + parent.x_hi) / 2;
      const double half = (parent.x_hi - parent.x_lo) / 2;
      // local +-1 map to the parent's own edge doubles so that shared block
      // boundaries compare exactly equal
      auto to_global = [&](double xl) {
        if (xl == -1) return parent.x_lo;
        if (xl == 1) return parent.x_hi;
        return mid + half * xl;
      };

      for (const auto& [zl, zh] : parent.zeros.intervals)
        if (zl < zh) null_iv.emplace_back(to_global(zl), to_global(zh));

      const auto gaps = parent.zeros.gaps();
      assert(static_cast<int>(gaps.size()) == L.lambda(parent.key));
      int k = 1;
      for (const auto& [gl, gh] : gaps) {
        VecKey child = parent.key;
        child.push_back(k++);
        BlockSpec b;
        b.kind = lay.rightward.at(child) ? BlockSpec::Kind::GPlus
                                         : BlockSpec::Kind::GMinus;
        b.key = child;
        b.x_lo = to_global(gl);
        b.x_hi = to_global(gh);
        b.y_lo = y_lo;
        b.y_hi = y_hi;
        b.r = L.rho(child);
        b.s = L.sigma(child);
        b.j = L.lambda(child);
        b.zeros = g_zero_set(b.r, b.s, b.j);

        OrbitLine line;
        line.vertical = false;
        line.x_lo = b.x_lo;
        line.x_hi = b.x_hi;
        line.y = y_hi;
        lay.orbit_lines[child] = line;
        lay.rep_seeds[child] = Vec2{(b.x_lo + b.x_hi) / 2, y_lo + 0.5};

        added.push_back(std::move(b));
      }
    }

    merge_touching(null_iv);
    for (const auto& [lo, hi] : null_iv) {
      BlockSpec b;
      b.kind = BlockSpec::Kind::Null;
      b.x_lo = lo;
      b.x_hi = hi;
      b.y_lo = y_lo;
      b.y_hi = y_hi;
      added.push_back(std::move(b));
    }

    std::sort(added.begin(), added.end(),
              [](const BlockSpec& a, const BlockSpec& b) {
                return a.x_lo < b.x_lo;
              });
    for (auto& b : added) {
      lay.bands[static_cast<std::size_t>(band)].push_back(lay.blocks.size());
      lay.blocks.push_back(std::move(b));
    }
  }

  return StripField{std::move(lay)};
}

Vec2 eval_strip_field(const StripField& field, Vec2 p) {
  const BlockLayout& lay = field.layout;
  const int t = lay.t;
  double x = std::fmod(p.x, static_cast<double>(t));
  if (x < 0) x += t;
  const double y = p.y;

  if (y >= 0) {
    int i = static_cast<int>(std::floor(x)) + 1;
    if (i > t) i = t;
    const BlockSpec& b =
        field.layout.blocks[lay.f_blocks[static_cast<std::size_t>(i - 1)]];
    return eval_block_local(b, 2 * x - 2 * i + 1, y);
  }

  const int band = static_cast<int>(std::ceil(-y));
  if (band >= lay.n) return {0, 0};  // at or below the bottom null line

  const auto& row = lay.bands[static_cast<std::size_t>(band)];
  // rightmost block with x_lo <= x
  std::size_t lo = 0, hi = row.size();
  while (lo + 1 < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (lay.blocks[row[mid]].x_lo <= x)
      lo = mid;
    else
      hi = mid;
  }
  const BlockSpec& b = lay.blocks[row[lo]];
  if (x < b.x_lo || x > b.x_hi) return {0, 0};
  if (b.kind == BlockSpec::Kind::Null) return {0, 0};
  const double xl = (2 * x - b.x_lo - b.x_hi) / (b.x_hi - b.x_lo);
  const double yl = y + band;
  return eval_block_local(b, xl, yl);
}

Vec2 map_to_plane(int t, Vec2 strip_point) {
  const double angle = 2 * M_PI * strip_point.x / t;
  const double radius = std::exp(strip_point.y);
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace attractor
