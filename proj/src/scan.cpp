// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#include <hundq/scan.hpp>

#include <hundq/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace hundq {

namespace {

// Geometry values are matched on a 1e-6 grid.
using Key = long long;
Key key_of(double x) { return std::llround(x * 1e6); }
double value_of(Key k) { return static_cast<double>(k) * 1e-6; }

std::string describe(const std::vector<double>& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  return os.str();
}

[[noreturn]] void report_missing(const std::vector<Key>& missing, const std::string& what) {
  std::ostringstream os;
  os << what << ": " << missing.size() << " grid point(s) missing from the manifest:";
  const std::size_t shown = std::min<std::size_t>(missing.size(), 12);
  for (std::size_t i = 0; i < shown; ++i) os << ' ' << value_of(missing[i]);
  if (shown < missing.size()) os << " ...";
  throw InputError(os.str());
}

// Runs energy() over `points` with a bounded worker pool; results keep input order.
std::vector<double> evaluate(const std::vector<const ScanPoint*>& points, const PointEnergy& energy,
                             int jobs) {
  std::vector<double> out(points.size(), 0.0);
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) {
      try {
        out[i] = energy(*points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n_threads = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  if (n_threads == 1 || points.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(n_threads, points.size()); ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

void validate_grid(const ScanSpec& spec) {
  const std::size_t dims = spec.parameters.size();
  if (dims != 1 && dims != 2) throw InputError("scans support one or two geometry parameters");
  for (const auto& p : spec.points)
    if (p.geometry.size() != dims)
      throw InputError("point " + describe(p.geometry) + " does not have " + std::to_string(dims) +
                       " coordinate(s)");
  if (spec.points.empty()) throw InputError("scan manifest has no points");

  if (dims == 1) {
    for (std::size_t i = 1; i < spec.points.size(); ++i)
      if (key_of(spec.points[i].geometry[0]) <= key_of(spec.points[i - 1].geometry[0]))
        throw InputError("bond lengths must be strictly increasing (at " +
                         describe(spec.points[i].geometry) + ")");
    return;
  }
  std::set<Key> xs, ys;
  std::set<std::pair<Key, Key>> present;
  for (const auto& p : spec.points) {
    xs.insert(key_of(p.geometry[0]));
    ys.insert(key_of(p.geometry[1]));
    if (!present.emplace(key_of(p.geometry[0]), key_of(p.geometry[1])).second)
      throw InputError("duplicate grid point " + describe(p.geometry));
  }
  std::ostringstream gaps;
  std::size_t n_gaps = 0;
  for (const auto x : xs)
    for (const auto y : ys)
      if (!present.count({x, y})) {
        if (n_gaps++ < 12) gaps << " (" << value_of(x) << "," << value_of(y) << ")";
      }
  if (n_gaps)
    throw InputError("incomplete 2D grid, " + std::to_string(n_gaps) + " point(s) missing:" +
                     gaps.str());
}

void summarize(ScanResult& r, bool one_dimensional) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.points.size(); ++i)
    if (r.points[i].energy < r.points[best].energy) best = i;
  r.argmin = r.points[best].geometry;
  r.energy_min = r.points[best].energy;
  if (one_dimensional) {
    r.asymptote = r.points.back().geometry;
    r.energy_asymptote = r.points.back().energy;
    r.dissociation_energy = r.points.back().energy - r.energy_min;
  }
}

}  // namespace

ScanSpec parse_scan_spec(std::string_view json, const std::filesystem::path& base_dir) {
  ScanSpec spec;
  try {
    const auto doc = nlohmann::json::parse(json);
    spec.name = doc.value("name", "");
    spec.parameters = doc.at("parameters").get<std::vector<std::string>>();
    for (const auto& p : doc.at("points")) {
      ScanPoint pt;
      pt.geometry = p.at("geometry").get<std::vector<double>>();
      pt.path = p.at("path").get<std::string>();
      if (pt.path.is_relative()) pt.path = base_dir / pt.path;
      spec.points.push_back(std::move(pt));
    }
    if (doc.contains("refinement")) {
      const auto& j = doc.at("refinement");
      Refinement ref;
      const auto range = j.at("range").get<std::vector<double>>();
      if (range.size() != 2 || !(range[0] < range[1])) throw InputError("refinement range must be [lo, hi]");
      ref.lo = range[0];
      ref.hi = range[1];
      ref.coarse_step = j.value("coarse_step", ref.coarse_step);
      ref.default_step = j.value("default_step", ref.default_step);
      if (j.contains("tiers")) {
        ref.tiers.clear();
        for (const auto& t : j.at("tiers")) ref.tiers.push_back({t.at("within").get<double>(), t.at("step").get<double>()});
      }
      std::sort(ref.tiers.begin(), ref.tiers.end(), [](auto a, auto b) { return a.within < b.within; });
      for (const auto& t : ref.tiers)
        if (!(t.step > 0) || !(t.within >= 0)) throw InputError("refinement tiers need positive steps");
      if (!(ref.coarse_step > 0) || !(ref.default_step > 0)) throw InputError("refinement steps must be positive");
      spec.refinement = ref;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid scan manifest: ") + e.what(), 0);
  }
  if (spec.refinement && spec.parameters.size() != 1)
    throw InputError("the refinement protocol applies to one-parameter scans only");
  return spec;
}

ScanSpec load_scan_spec(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw InputError("cannot open " + manifest.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scan_spec(buf.str(), manifest.parent_path());
}

ScanResult run_scan(const ScanSpec& spec, const PointEnergy& energy, int jobs) {
  validate_grid(spec);
  const bool one_d = spec.parameters.size() == 1;
  ScanResult result;

  if (!spec.refinement) {
    std::vector<const ScanPoint*> all;
    for (const auto& p : spec.points) all.push_back(&p);
    const auto e = evaluate(all, energy, jobs);
    for (std::size_t i = 0; i < all.size(); ++i) result.points.push_back({all[i]->geometry, e[i]});
    summarize(result, one_d);
    return result;
  }

  const auto& ref = *spec.refinement;
  std::map<Key, const ScanPoint*> available;
  for (const auto& p : spec.points) available[key_of(p.geometry[0])] = &p;
  const Key lo = key_of(ref.lo), hi = key_of(ref.hi);

  auto grid = [&](double origin, double step, double radius_lo, double radius_hi, std::set<Key>& out) {
    // points origin + i*step inside [lo, hi] with radius_lo < |offset| <= radius_hi
    const Key o = key_of(origin), s = key_of(step);
    const Key r_lo = key_of(radius_lo), r_hi = key_of(radius_hi);
    for (Key k = o - ((o - lo) / s) * s; k <= hi; k += s) {
      const Key d = std::llabs(k - o);
      if (k >= lo && d <= r_hi && d > r_lo) out.insert(k);
    }
  };

  std::set<Key> coarse_keys;
  grid(ref.lo, ref.coarse_step, -1.0, ref.hi - ref.lo, coarse_keys);
  std::vector<Key> missing;
  std::vector<const ScanPoint*> coarse;
  for (const auto k : coarse_keys) {
    const auto it = available.find(k);
    if (it == available.end()) missing.push_back(k);
    else coarse.push_back(it->second);
  }
  if (!missing.empty()) report_missing(missing, "coarse pre-scan");

  const auto coarse_e = evaluate(coarse, energy, jobs);
  std::map<Key, double> energies;
  std::size_t best = 0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    energies[key_of(coarse[i]->geometry[0])] = coarse_e[i];
    if (coarse_e[i] < coarse_e[best]) best = i;
  }
  const double center = coarse[best]->geometry[0];
  result.coarse_argmin = center;

  std::set<Key> targets;
  for (const auto& t : ref.tiers) grid(center, t.step, -1.0, t.within, targets);
  const double outer = ref.tiers.empty() ? -1.0 : ref.tiers.back().within;
  grid(ref.lo, ref.default_step, outer, ref.hi - ref.lo, targets);

  std::vector<const ScanPoint*> fine;
  for (const auto k : targets) {
    if (energies.count(k)) continue;
    const auto it = available.find(k);
    if (it == available.end()) missing.push_back(k);
    else fine.push_back(it->second);
  }
  if (!missing.empty()) report_missing(missing, "refined scan around " + describe({center}));
  const auto fine_e = evaluate(fine, energy, jobs);
  for (std::size_t i = 0; i < fine.size(); ++i) energies[key_of(fine[i]->geometry[0])] = fine_e[i];

  for (const auto k : targets) result.points.push_back({available.at(k)->geometry, energies.at(k)});
  summarize(result, true);
  return result;
}

}  // namespace hundq
