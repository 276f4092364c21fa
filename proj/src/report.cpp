#include "momhist/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace momhist::report {

namespace {

std::string fmt(double x, int significant = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, x);
  return buf;
}

std::string opt_fmt(const std::optional<double>& x, int significant = 6) {
  return x ? fmt(*x, significant) : std::string("-");
}

std::string opt_rank(const std::optional<int>& r) {
  if (!r) return "-";
  return (*r > 0 ? "+" : "") + std::to_string(*r);
}

Json opt_number(const std::optional<double>& x) { return x ? Json(approx(*x)) : Json(nullptr); }

Json class_counts(const ClassificationReport& classes, std::optional<std::size_t> max_bins) {
  const auto t = classes.tally(max_bins);
  Json j = Json::object();
  for (std::size_t i = 0; i < t.size(); ++i) j[std::string(to_string(static_cast<ConsistencyClass>(i)))] = t[i];
  j["mean_or_variance"] = classes.mean_or_variance(max_bins);
  return j;
}

std::vector<int> counts_from(const Json& j) { return j.get<std::vector<int>>(); }

Point point_from(const Json& j) { return {rational_from(j.at(0)), rational_from(j.at(1))}; }

}  // namespace

double approx(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(fmt(x, 12));
}

Json rational(const Scalar& x) { return Json{{"exact", x.to_ratio_string()}, {"approx", approx(x.to_double())}}; }

Scalar rational_from(const Json& j) {
  if (j.is_object()) return Scalar::parse(j.at("exact").get<std::string>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational");
}

Json point(const Point& p) { return Json::array({rational(p.t0), rational(p.h)}); }

Json counts(const Shape& s) { return Json(s.counts()); }

std::string_view to_string(BinCountMode mode) { return mode == BinCountMode::AtMost ? "at-most" : "exactly"; }

std::string_view to_string(VarianceFlavor flavor) {
  return flavor == VarianceFlavor::Frequency ? "frequency" : "density";
}

// ---------------------------------------------------------------- catalog

Json catalog_json(const Catalog& c) {
  Json j;
  j["n"] = c.n;
  j["max_bins"] = c.max_bins;
  j["mode"] = to_string(c.mode);
  j["dataset_digest"] = [&] {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(c.dataset_digest));
    return std::string(buf);
  }();
  j["delta"] = rational(c.domain.delta);
  j["h_cap"] = rational(c.domain.h_cap);
  Json dom = Json::array();
  for (const auto& v : c.domain.vertices) dom.push_back(point(v));
  j["domain"] = dom;
  j["S"] = c.size();
  Json shapes = Json::array();
  for (const auto& ls : c.level_sets) {
    Json e;
    e["K_s"] = ls.shape.bins();
    e["counts"] = counts(ls.shape);
    e["V_s"] = ls.vertices.size();
    Json verts = Json::array();
    for (const auto& v : ls.vertices) verts.push_back(point(v));
    e["vertices"] = verts;
    e["h_min"] = rational(ls.h_min);
    e["h_max"] = rational(ls.h_max);
    e["centroid"] = point(ls.centroid);
    e["area"] = rational(ls.area);
    if (ls.merged_faces != 1) e["merged_faces"] = ls.merged_faces;
    shapes.push_back(e);
  }
  j["shapes"] = shapes;
  if (!c.anomalies.empty()) {
    Json an = Json::array();
    for (const auto& a : c.anomalies) {
      Json pieces = Json::array();
      for (const auto& poly : a.pieces) {
        Json verts = Json::array();
        for (const auto& v : poly) verts.push_back(point(v));
        pieces.push_back(verts);
      }
      an.push_back(Json{{"counts", counts(a.shape)}, {"pieces", pieces}});
    }
    j["anomalies"] = an;
  }
  return j;
}

Catalog catalog_from_json(const Json& j) {
  Catalog c;
  c.n = j.at("n").get<std::size_t>();
  c.max_bins = j.at("max_bins").get<int>();
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "at-most") c.mode = BinCountMode::AtMost;
  else if (mode == "exactly") c.mode = BinCountMode::Exactly;
  else throw std::invalid_argument("unknown mode " + mode);
  c.dataset_digest = std::stoull(j.at("dataset_digest").get<std::string>(), nullptr, 16);
  c.domain.max_bins = c.max_bins;
  c.domain.mode = c.mode;
  c.domain.delta = rational_from(j.at("delta"));
  c.domain.h_cap = rational_from(j.at("h_cap"));
  for (const auto& v : j.at("domain")) c.domain.vertices.push_back(point_from(v));
  for (const auto& e : j.at("shapes")) {
    LevelSet ls;
    ls.shape = Shape(counts_from(e.at("counts")));
    for (const auto& v : e.at("vertices")) ls.vertices.push_back(point_from(v));
    if (ls.vertices.size() != e.at("V_s").get<std::size_t>()) throw std::invalid_argument("V_s mismatch");
    ls.h_min = rational_from(e.at("h_min"));
    ls.h_max = rational_from(e.at("h_max"));
    ls.centroid = point_from(e.at("centroid"));
    ls.area = rational_from(e.at("area"));
    ls.merged_faces = e.value("merged_faces", std::size_t{1});
    c.level_sets.push_back(std::move(ls));
  }
  if (j.contains("anomalies")) {
    for (const auto& a : j.at("anomalies")) {
      CatalogAnomaly an{Shape(counts_from(a.at("counts"))), {}};
      for (const auto& piece : a.at("pieces")) {
        Polygon poly;
        for (const auto& v : piece) poly.push_back(point_from(v));
        an.pieces.push_back(std::move(poly));
      }
      c.anomalies.push_back(std::move(an));
    }
  }
  return c;
}

bool same_catalog(const Catalog& a, const Catalog& b) {
  if (a.n != b.n || a.max_bins != b.max_bins || a.mode != b.mode || a.dataset_digest != b.dataset_digest) return false;
  if (a.domain.delta != b.domain.delta || a.domain.h_cap != b.domain.h_cap) return false;
  if (a.domain.vertices != b.domain.vertices || a.level_sets.size() != b.level_sets.size()) return false;
  for (std::size_t i = 0; i < a.level_sets.size(); ++i) {
    const auto& x = a.level_sets[i];
    const auto& y = b.level_sets[i];
    if (x.shape != y.shape || x.vertices != y.vertices || x.h_min != y.h_min || x.h_max != y.h_max ||
        x.centroid != y.centroid || x.area != y.area || x.merged_faces != y.merged_faces) {
      return false;
    }
  }
  if (a.anomalies.size() != b.anomalies.size()) return false;
  for (std::size_t i = 0; i < a.anomalies.size(); ++i) {
    if (a.anomalies[i].shape != b.anomalies[i].shape || a.anomalies[i].pieces != b.anomalies[i].pieces) return false;
  }
  return true;
}

std::string catalog_text(const Catalog& c) {
  std::ostringstream os;
  os << "S = " << c.size() << " shapes, n = " << c.n << ", K = " << c.max_bins << " (" << to_string(c.mode) << ")\n";
  os << std::left << std::setw(24) << "shape" << std::setw(5) << "V_s" << std::setw(12) << "h_min" << std::setw(12)
     << "h_max" << "vertices\n";
  for (const auto& ls : c.level_sets) {
    os << std::left << std::setw(24) << ls.shape.to_string() << std::setw(5) << ls.vertices.size() << std::setw(12)
       << ls.h_min.to_decimal_string(6) << std::setw(12) << ls.h_max.to_decimal_string(6);
    for (std::size_t i = 0; i < ls.vertices.size(); ++i) {
      os << (i ? " " : "") << '(' << ls.vertices[i].t0.to_decimal_string(6) << ','
         << ls.vertices[i].h.to_decimal_string(6) << ')';
    }
    os << '\n';
  }
  for (const auto& a : c.anomalies) {
    os << "anomaly: " << a.shape.to_string() << " spans " << a.pieces.size() << " pieces\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- classify

Json classification_json(const Catalog& c, const ClassificationReport& classes, const SkewRankReport& ranks) {
  Json j;
  j["flavor"] = to_string(classes.flavor);
  j["S"] = c.size();
  j["sample_fps"] = approx(ranks.sample_fps);
  j["sample_fpas"] = opt_number(ranks.sample_fpas);
  j["band_T"] = ranks.wide_band;
  j["band_F"] = ranks.narrow_band;
  j["counts"] = class_counts(classes, std::nullopt);
  Json by_bins = Json::object();
  for (int k = 1; k <= c.max_bins; ++k) by_bins[std::to_string(k)] = class_counts(classes, static_cast<std::size_t>(k));
  j["counts_up_to_bins"] = by_bins;
  Json shapes = Json::array();
  for (std::size_t i = 0; i < classes.entries.size(); ++i) {
    const auto& e = classes.entries[i];
    const auto& r = ranks.entries[i];
    Json s;
    s["counts"] = counts(e.shape);
    s["class"] = to_string(e.cls);
    s["mean_consistent"] = e.mean_consistent;
    s["variance_consistent"] = e.variance_consistent;
    if (e.mom) {
      s["h_mom"] = approx(e.mom->h_mom);
      s["t0_mom"] = approx(e.mom->t0_mom);
      s["h_mom_squared"] = rational(e.mom->point.h_squared);
      s["recomputed"] = e.mom->recomputed;
    } else {
      s["h_mom"] = nullptr;
      s["t0_mom"] = nullptr;
      s["h_mom_squared"] = nullptr;
      s["recomputed"] = nullptr;
    }
    s["FPS_g"] = opt_number(r.fps);
    s["FPAS_g"] = opt_number(r.fpas);
    s["signed_rank"] = r.rank ? Json(*r.rank) : Json(nullptr);
    s["tied"] = r.tied;
    s["in_T"] = r.in_wide;
    s["in_F"] = r.in_narrow;
    s["in_T_and_Jg"] = r.in_wide_and_joint;
    shapes.push_back(s);
  }
  j["shapes"] = shapes;
  return j;
}

std::string classification_text(const Catalog& c, const ClassificationReport& classes,
                                const SkewRankReport& ranks) {
  std::ostringstream os;
  const auto t = classes.tally();
  os << "flavor " << to_string(classes.flavor) << ", S = " << c.size() << ", FPS_x = " << fmt(ranks.sample_fps)
     << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << "  " << std::left << std::setw(10) << to_string(static_cast<ConsistencyClass>(i)) << t[i] << '\n';
  }
  os << "  mean or variance consistent: " << classes.mean_or_variance() << "\n\n";
  os << std::left << std::setw(24) << "shape" << std::setw(11) << "class" << std::setw(11) << "t0_mom" << std::setw(11)
     << "h_mom" << std::setw(11) << "FPS_g" << std::setw(6) << "rank" << "bands\n";
  for (std::size_t i = 0; i < classes.entries.size(); ++i) {
    const auto& e = classes.entries[i];
    const auto& r = ranks.entries[i];
    std::string bands;
    if (r.in_wide) bands += "T";
    if (r.in_narrow) bands += "F";
    if (r.in_wide_and_joint) bands += " T&J";
    os << std::left << std::setw(24) << e.shape.to_string() << std::setw(11) << to_string(e.cls) << std::setw(11)
       << (e.mom ? fmt(e.mom->t0_mom) : "-") << std::setw(11) << (e.mom ? fmt(e.mom->h_mom) : "-") << std::setw(11)
       << opt_fmt(r.fps) << std::setw(6) << opt_rank(r.rank) << bands << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- rank

Json rank_json(const SkewRankReport& ranks, const std::vector<MlScore>& ml) {
  Json j;
  j["sample_fps"] = approx(ranks.sample_fps);
  j["sample_fpas"] = opt_number(ranks.sample_fpas);
  j["band_T"] = ranks.wide_band;
  j["band_F"] = ranks.narrow_band;
  std::vector<const SkewRank*> ranked;
  for (const auto& e : ranks.entries) {
    if (e.rank) ranked.push_back(&e);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const SkewRank* a, const SkewRank* b) {
    const int ra = *a->rank;
    const int rb = *b->rank;
    if ((ra > 0) != (rb > 0)) return ra < rb;
    return std::abs(ra) < std::abs(rb);
  });
  Json skew = Json::array();
  for (const auto* e : ranked) {
    skew.push_back(Json{{"counts", counts(e->shape)},
                        {"FPS_g", opt_number(e->fps)},
                        {"FPAS_g", opt_number(e->fpas)},
                        {"signed_rank", *e->rank},
                        {"tied", e->tied},
                        {"in_T", e->in_wide},
                        {"in_F", e->in_narrow},
                        {"in_T_and_Jg", e->in_wide_and_joint}});
  }
  Json unranked = Json::array();
  for (const auto& e : ranks.entries) {
    if (!e.rank) unranked.push_back(counts(e.shape));
  }
  j["skewness"] = skew;
  j["skewness_undefined"] = unranked;
  Json like = Json::array();
  for (std::size_t i = 0; i < ml.size(); ++i) {
    like.push_back(Json{{"position", i + 1},
                        {"counts", counts(ml[i].shape)},
                        {"h_min", rational(ml[i].h_min)},
                        {"log_likelihood", approx(ml[i].log_likelihood)},
                        {"open", ml[i].open}});
  }
  j["max_likelihood"] = like;
  return j;
}

std::string rank_text(const SkewRankReport& ranks, const std::vector<MlScore>& ml) {
  std::ostringstream os;
  os << "FPS_x = " << fmt(ranks.sample_fps) << ", bands T = +-" << ranks.wide_band << ", F = +-" << ranks.narrow_band
     << "\n\nskewness ranks within T\n";
  for (const auto& e : ranks.entries) {
    if (!e.in_wide) continue;
    os << "  " << std::left << std::setw(6) << opt_rank(e.rank) << std::setw(24) << e.shape.to_string()
       << std::setw(11) << opt_fmt(e.fps) << (e.in_wide_and_joint ? "joint" : "") << '\n';
  }
  os << "\nmaximum likelihood at minimum width\n";
  for (std::size_t i = 0; i < ml.size(); ++i) {
    os << "  " << std::left << std::setw(5) << (i + 1) << std::setw(24) << ml[i].shape.to_string() << std::setw(12)
       << ml[i].h_min.to_decimal_string(6) << std::setw(14) << fmt(ml[i].log_likelihood, 8)
       << (ml[i].open ? "open" : "") << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- stability

Json stability_json(const StabilityReport& r) {
  Json j;
  j["max_bins"] = r.max_bins;
  j["mode"] = to_string(r.mode);
  Json bp = Json::array();
  for (const auto& b : r.breakpoints) bp.push_back(rational(b));
  j["breakpoints"] = bp;
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json shapes = Json::array();
    for (const auto& s : c.shapes) shapes.push_back(counts(s));
    cells.push_back(Json{{"h_lo", rational(c.h_lo)}, {"h_hi", rational(c.h_hi)}, {"shapes", shapes}, {"count", c.count()}});
  }
  j["cells"] = cells;
  Json best = Json::array();
  for (auto i : r.most_stable) best.push_back(Json{{"h_lo", rational(r.cells[i].h_lo)}, {"h_hi", rational(r.cells[i].h_hi)}});
  j["most_stable"] = best;
  return j;
}

std::string stability_text(const StabilityReport& r) {
  std::ostringstream os;
  os << "stability cells, K = " << r.max_bins << " (" << to_string(r.mode) << ")\n";
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    const auto& c = r.cells[i];
    const bool best = std::find(r.most_stable.begin(), r.most_stable.end(), i) != r.most_stable.end();
    os << (best ? "* " : "  ") << '(' << c.h_lo.to_decimal_string(6) << ", " << c.h_hi.to_decimal_string(6) << ")  "
       << c.count() << " shapes:";
    for (const auto& s : c.shapes) os << ' ' << s.to_string();
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- reversals

Json reversals_json(bool symmetric, const ReversalReport& r, const std::vector<ModeInversion>& inversions) {
  Json j;
  j["exactly_symmetric"] = symmetric;
  j["full_coverage"] = r.full_coverage();
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(Json{{"counts", counts(p.shape)},
                         {"reversed", counts(p.reversed)},
                         {"palindrome", p.shape == p.reversed},
                         {"witness", point(p.witness)},
                         {"reversed_witness", point(p.reversed_witness)}});
  }
  j["pairs"] = pairs;
  Json unpaired = Json::array();
  for (const auto& s : r.unpaired) unpaired.push_back(counts(s));
  j["unpaired"] = unpaired;
  Json inv = Json::array();
  for (const auto& m : inversions) {
    Json e{{"interior_modal", counts(m.interior_modal)},
           {"interior_modes", m.interior_modes},
           {"interior_witness", point(m.interior_witness)},
           {"boundary_modal", counts(m.boundary_modal)},
           {"boundary_modes", m.boundary_modes},
           {"boundary_witness", point(m.boundary_witness)}};
    if (m.interior_class) e["interior_class"] = to_string(*m.interior_class);
    if (m.boundary_class) e["boundary_class"] = to_string(*m.boundary_class);
    inv.push_back(e);
  }
  j["mode_inversions"] = inv;
  return j;
}

std::string reversals_text(bool symmetric, const ReversalReport& r, const std::vector<ModeInversion>& inversions) {
  std::ostringstream os;
  os << "exactly symmetric: " << (symmetric ? "yes" : "no") << "\n";
  os << "reversal pairs: " << r.pairs.size() << ", unpaired shapes: " << r.unpaired.size() << "\n";
  for (const auto& p : r.pairs) {
    os << "  " << std::left << std::setw(24) << p.shape.to_string() << std::setw(24) << p.reversed.to_string() << '('
       << p.witness.t0.to_decimal_string(6) << ',' << p.witness.h.to_decimal_string(6) << ") ("
       << p.reversed_witness.t0.to_decimal_string(6) << ',' << p.reversed_witness.h.to_decimal_string(6) << ")\n";
  }
  for (const auto& s : r.unpaired) os << "  unpaired " << s.to_string() << '\n';
  os << "mode inversions: " << inversions.size() << "\n";
  for (const auto& m : inversions) {
    os << "  " << std::left << std::setw(24) << m.interior_modal.to_string() << m.boundary_modal.to_string() << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- dotplot

Json dotplot_json(const Dataset& d, const ExactMomentGrid& g) {
  Json j;
  j["m"] = g.m;
  j["Q"] = g.lcm.get_str();
  j["t0"] = rational(g.grid.t0);
  j["h"] = rational(g.grid.h);
  j["bins"] = g.shape.bins();
  Json occupied = Json::array();
  for (std::size_t k = 0; k < g.shape.bins(); ++k) {
    if (g.shape[k] == 0) continue;
    const Scalar mid = g.grid.t0 + (Scalar(static_cast<long>(k)) + Scalar(1, 2)) * g.grid.h;
    occupied.push_back(Json{{"bin", k + 1}, {"midpoint", rational(mid)}, {"count", g.shape[k]}});
  }
  j["occupied"] = occupied;
  Json moments = Json::array();
  for (unsigned r = 1; r <= 6; ++r) {
    const Scalar data = raw_moment(d, r);
    const Scalar grouped = grouped_raw_moment(g.grid, g.shape, r);
    moments.push_back(Json{{"order", r}, {"data", rational(data)}, {"grouped", rational(grouped)}, {"exact_match", data == grouped}});
  }
  j["moments"] = moments;
  if (d.size() >= 2) {
    const Scalar dens = grouped_variance(g.grid, g.shape, VarianceFlavor::Density);
    j["density_variance_excess"] = rational(dens - d.variance());
  }
  return j;
}

std::string dotplot_text(const Dataset& d, const ExactMomentGrid& g) {
  std::ostringstream os;
  os << "m = " << g.m << ", Q = " << g.lcm.get_str() << ", h = " << g.grid.h.to_ratio_string()
     << ", t0 = " << g.grid.t0.to_ratio_string() << ", " << g.shape.bins() << " bins\n";
  for (unsigned r = 1; r <= 6; ++r) {
    const Scalar data = raw_moment(d, r);
    const Scalar grouped = grouped_raw_moment(g.grid, g.shape, r);
    os << "  order " << r << ": data " << data.to_decimal_string(12) << ", grouped " << grouped.to_decimal_string(12)
       << (data == grouped ? "  exact" : "  DIFFERENT") << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- audit

Json audit_json(const AuditVerdict& v) {
  Json j;
  j["t0"] = rational(v.grid.t0);
  j["h"] = rational(v.grid.h);
  j["max_bins"] = v.grid.max_bins;
  j["counts"] = counts(v.shape);
  j["FPS_g"] = opt_number(v.fps);
  j["FPS_x"] = approx(v.sample_fps);
  j["sign_conflict"] = v.sign_conflict;
  j["class"] = v.cls ? Json(to_string(*v.cls)) : Json(nullptr);
  j["signed_rank"] = v.rank ? Json(*v.rank) : Json(nullptr);
  Json hits = Json::array();
  for (const auto& x : v.edge_collisions) hits.push_back(rational(x));
  j["edge_collisions"] = hits;
  if (v.alternative) {
    j["alternative"] = Json{{"counts", counts(v.alternative->shape)},
                            {"FPS_g", approx(v.alternative->fps)},
                            {"signed_rank", v.alternative->rank},
                            {"t0_mom", approx(v.alternative->t0_mom)},
                            {"h_mom", approx(v.alternative->h_mom)}};
  } else {
    j["alternative"] = nullptr;
  }
  return j;
}

std::string audit_text(const AuditVerdict& v) {
  std::ostringstream os;
  os << "grid t0 = " << v.grid.t0.to_decimal_string() << ", h = " << v.grid.h.to_decimal_string()
     << ", K = " << v.grid.max_bins << "\n";
  os << "shape " << v.shape.to_string() << "\n";
  os << "FPS_g " << opt_fmt(v.fps) << ", FPS_x " << fmt(v.sample_fps) << "\n";
  os << "sign conflict: " << (v.sign_conflict ? "yes" : "no") << "\n";
  os << "class: " << (v.cls ? std::string(to_string(*v.cls)) : std::string("outside domain")) << ", rank "
     << opt_rank(v.rank) << "\n";
  os << "values on bin edges: " << v.edge_collisions.size() << "\n";
  if (v.alternative) {
    os << "suggested: " << v.alternative->shape.to_string() << " at t0 = " << fmt(v.alternative->t0_mom)
       << ", h = " << fmt(v.alternative->h_mom) << " (FPS_g " << fmt(v.alternative->fps) << ", rank "
       << opt_rank(v.alternative->rank) << ")\n";
  } else {
    os << "suggested: none\n";
  }
  return os.str();
}

}  // namespace momhist::report
