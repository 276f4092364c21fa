#pragma once

#include <string>

#include <json.hpp>

#include "momhist/diagnostics.hpp"
#include "momhist/selection.hpp"

namespace momhist::report {

using Json = nlohmann::ordered_json;

/// {"exact": "p/q", "approx": 12-significant-digit number}. "exact" is canonical.
Json rational(const Scalar& x);
Scalar rational_from(const Json& j);
Json point(const Point& p);
Json counts(const Shape& s);
double approx(double x);  // rounded to 12 significant digits

std::string_view to_string(BinCountMode mode);
std::string_view to_string(VarianceFlavor flavor);

Json catalog_json(const Catalog& c);
/// Inverse of catalog_json. Domain constraints are not serialized, so the
/// result carries the domain polygon only.
Catalog catalog_from_json(const Json& j);
/// Field-by-field comparison of everything catalog_json writes.
bool same_catalog(const Catalog& a, const Catalog& b);

Json classification_json(const Catalog& c, const ClassificationReport& classes, const SkewRankReport& ranks);
Json rank_json(const SkewRankReport& ranks, const std::vector<MlScore>& ml);
Json stability_json(const StabilityReport& r);
Json reversals_json(bool symmetric, const ReversalReport& r, const std::vector<ModeInversion>& inversions);
Json dotplot_json(const Dataset& d, const ExactMomentGrid& g);
Json audit_json(const AuditVerdict& v);

std::string catalog_text(const Catalog& c);
std::string classification_text(const Catalog& c, const ClassificationReport& classes,
                                const SkewRankReport& ranks);
std::string rank_text(const SkewRankReport& ranks, const std::vector<MlScore>& ml);
std::string stability_text(const StabilityReport& r);
std::string reversals_text(bool symmetric, const ReversalReport& r, const std::vector<ModeInversion>& inversions);
std::string dotplot_text(const Dataset& d, const ExactMomentGrid& g);
std::string audit_text(const AuditVerdict& v);

}  // namespace momhist::report
