#include "momhist/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace momhist::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Golden-angle hue walk: neighbours in catalog order get distinct colours.
std::string colour(std::size_t i) {
  const double hue = std::fmod(static_cast<double>(i) * 137.508, 360.0);
  char buf[40];
  std::snprintf(buf, sizeof buf, "hsl(%.1f,65%%,%d%%)", hue, i % 2 ? 62 : 72);
  return buf;
}

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;
  double x(double v) const { return kMargin + (v - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); }
  double y(double v) const { return kHeight - kMargin - (v - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); }
};

void axes(std::ostringstream& os, const Frame& f, const std::string& x_label, const std::string& y_label) {
  os << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin) << "\" x2=\"" << num(kWidth - kMargin)
     << "\" y2=\"" << num(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin) << "\" x2=\"" << num(kMargin) << "\" y2=\""
     << num(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double vx = f.x_lo + (f.x_hi - f.x_lo) * i / 4.0;
    const double vy = f.y_lo + (f.y_hi - f.y_lo) * i / 4.0;
    char bx[32];
    char by[32];
    std::snprintf(bx, sizeof bx, "%.4g", vx);
    std::snprintf(by, sizeof by, "%.4g", vy);
    os << "<text x=\"" << num(f.x(vx)) << "\" y=\"" << num(kHeight - kMargin + 18)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << bx << "</text>\n";
    os << "<text x=\"" << num(kMargin - 6) << "\" y=\"" << num(f.y(vy) + 4)
       << "\" font-size=\"11\" text-anchor=\"end\">" << by << "</text>\n";
  }
  os << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 15) << "\" font-size=\"13\" text-anchor=\"middle\">"
     << escape(x_label) << "</text>\n";
  os << "<text x=\"18\" y=\"" << num(kHeight / 2) << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << num(kHeight / 2) << ")\">" << escape(y_label) << "</text>\n";
}

std::string open_svg() {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

std::string level_set_map(const Catalog& c) {
  if (c.empty()) throw std::invalid_argument("cannot draw an empty catalog");
  Frame f{1e300, -1e300, 0.0, -1e300};
  for (const auto& v : c.domain.vertices) {
    f.x_lo = std::min(f.x_lo, v.t0.to_double());
    f.x_hi = std::max(f.x_hi, v.t0.to_double());
    f.y_hi = std::max(f.y_hi, v.h.to_double());
  }
  if (f.x_hi <= f.x_lo) f.x_hi = f.x_lo + 1.0;
  if (f.y_hi <= f.y_lo) f.y_hi = f.y_lo + 1.0;

  std::ostringstream os;
  os << open_svg();
  os << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">Shape level sets, S = "
     << c.size() << ", K = " << c.max_bins << "</text>\n";
  axes(os, f, "anchor t0", "width h");
  for (std::size_t i = 0; i < c.level_sets.size(); ++i) {
    const auto& ls = c.level_sets[i];
    os << "<polygon points=\"";
    for (std::size_t k = 0; k < ls.vertices.size(); ++k) {
      os << (k ? " " : "") << num(f.x(ls.vertices[k].t0.to_double())) << ',' << num(f.y(ls.vertices[k].h.to_double()));
    }
    os << "\" fill=\"" << colour(i) << "\" stroke=\"#333\" stroke-width=\"0.5\"><title>" << escape(ls.shape.to_string())
       << "</title></polygon>\n";
  }
  // Labels last so polygons never cover them.
  const double font = c.size() > 40 ? 7.0 : 11.0;
  for (const auto& ls : c.level_sets) {
    os << "<text x=\"" << num(f.x(ls.centroid.t0.to_double())) << "\" y=\"" << num(f.y(ls.centroid.h.to_double()))
       << "\" font-size=\"" << font << "\" text-anchor=\"middle\">" << escape(ls.shape.to_string()) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string histogram(const Shape& s, const BinGrid& g, const std::string& title) {
  if (s.bins() == 0) throw std::invalid_argument("cannot draw an empty histogram");
  const int top = *std::max_element(s.counts().begin(), s.counts().end());
  const double t0 = g.t0.to_double();
  const double h = g.h.to_double();
  Frame f{t0, t0 + h * static_cast<double>(s.bins()), 0.0, static_cast<double>(top)};

  std::ostringstream os;
  os << open_svg();
  os << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">" << escape(title)
     << "</text>\n";
  axes(os, f, "value", "count");
  for (std::size_t k = 0; k < s.bins(); ++k) {
    const double lo = t0 + h * static_cast<double>(k);
    const double hi = lo + h;
    const double x0 = f.x(lo);
    const double x1 = f.x(hi);
    const double y1 = f.y(s[k]);
    os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y1) << "\" width=\"" << num(x1 - x0) << "\" height=\""
       << num(f.y(0) - y1) << "\" fill=\"steelblue\" stroke=\"white\"/>\n";
    os << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(y1 - 4) << "\" font-size=\"11\" text-anchor=\"middle\">"
       << s[k] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace momhist::svg
