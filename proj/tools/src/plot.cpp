#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "umbrella/errors.hpp"
#include "umbrella_cli/cli.hpp"

namespace umbrella::cli {

namespace {

struct Pt {
  double x = 0, y = 0;
};

Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
Pt operator*(double s, Pt a) { return {s * a.x, s * a.y}; }
double dot(Pt a, Pt b) { return a.x * b.x + a.y * b.y; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

// A piece of a facet as drawn: a segment, or a ray when `ray` is set.
struct Piece {
  Pt from, to;
  bool ray = false;
};

class Canvas {
 public:
  Canvas(double min_x, double max_x, double min_y, double max_y) : min_x_(min_x), max_y_(max_y) {
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    scale_ = 400.0 / span;
    width_ = (max_x - min_x) * scale_ + 2 * kMargin;
    height_ = (max_y - min_y) * scale_ + 2 * kMargin;
  }
  double width() const { return width_; }
  double height() const { return height_; }
  double reach() const { return (width_ + height_) / scale_; }
  std::string x(double v) const { return num(kMargin + (v - min_x_) * scale_); }
  std::string y(double v) const { return num(kMargin + (max_y_ - v) * scale_); }
  std::string xy(Pt p) const { return x(p.x) + "," + y(p.y); }

 private:
  static constexpr double kMargin = 40;
  double min_x_, max_y_, scale_ = 1, width_ = 0, height_ = 0;
};

Pt to_pt(const ZVector& v) { return {v[0].get_d(), v[1].get_d()}; }

}  // namespace

std::string render_svg(const ToricMatrix& a, const WeightVector& l, const Umbrella& umb) {
  if (a.d() != 2) throw ValidationError("plot-needs-d2", "plot is only available for d = 2");
  const std::size_t n = a.n();
  std::vector<Pt> col(n);
  std::vector<std::optional<Pt>> scaled(n);
  std::vector<int> sign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    col[j] = to_pt(a.column(j));
    if (l[j] != 0) {
      scaled[j] = (1.0 / l[j].get_d()) * col[j];
      sign[j] = l[j] > 0 ? 1 : -1;
    }
  }

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  auto grow = [&](Pt p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (std::size_t j = 0; j < n; ++j) {
    grow(col[j]);
    if (scaled[j]) grow(*scaled[j]);
  }
  const Canvas cv(min_x - 0.5, max_x + 0.5, min_y - 0.5, max_y + 0.5);
  const double far = cv.reach();

  // Facet pieces. Points of opposite weight sign are joined through infinity,
  // so their hull edge is drawn as two outward rays.
  std::vector<Piece> pieces;
  for (const auto& tau : umb.facet_sets()) {
    std::vector<std::size_t> finite, infinite;
    for (auto j : tau) (scaled[j] ? finite : infinite).push_back(j);
    if (finite.empty()) continue;
    if (finite.size() >= 2) {
      const Pt base = *scaled[finite[0]];
      Pt dir{0, 0};
      for (auto j : finite)
        if (dot(*scaled[j] - base, *scaled[j] - base) > dot(dir, dir)) dir = *scaled[j] - base;
      auto t = [&](std::size_t j) { return dot(*scaled[j] - base, dir); };
      std::vector<std::size_t> pos, neg;
      for (auto j : finite) (sign[j] > 0 ? pos : neg).push_back(j);
      auto by_t = [&](std::size_t i, std::size_t j) { return t(i) < t(j); };
      std::sort(pos.begin(), pos.end(), by_t);
      std::sort(neg.begin(), neg.end(), by_t);
      for (const auto* group : {&pos, &neg})
        if (group->size() >= 2) pieces.push_back({*scaled[group->front()], *scaled[group->back()], false});
      if (!pos.empty() && !neg.empty()) {
        const bool pos_first = t(pos.back()) < t(neg.front());
        const auto& lower = pos_first ? pos : neg;
        const auto& upper = pos_first ? neg : pos;
        const Pt lo = *scaled[lower.front()], hi = *scaled[upper.back()];
        pieces.push_back({lo, lo - (far / std::sqrt(dot(dir, dir))) * dir, true});
        pieces.push_back({hi, hi + (far / std::sqrt(dot(dir, dir))) * dir, true});
      }
    }
    for (auto k : infinite) {
      // From the finite point furthest along the direction of a_k.
      std::size_t best = finite.front();
      for (auto j : finite)
        if (sign[j] * dot(*scaled[j], col[k]) > sign[best] * dot(*scaled[best], col[k])) best = j;
      const Pt dir = (double(sign[best]) / std::sqrt(dot(col[k], col[k]))) * col[k];
      pieces.push_back({*scaled[best], *scaled[best] + far * dir, true});
    }
  }

  std::string svg;
  auto line = [&](const std::string& s) { svg += s + "\n"; };
  line("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
  line("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(cv.width()) + "\" height=\"" + num(cv.height()) +
       "\" viewBox=\"0 0 " + num(cv.width()) + " " + num(cv.height()) + "\">");
  line("<rect x=\"0\" y=\"0\" width=\"" + num(cv.width()) + "\" height=\"" + num(cv.height()) + "\" fill=\"white\"/>");
  line("<g id=\"hull\" fill=\"#d0d8e8\" fill-opacity=\"0.6\" stroke=\"none\">");
  for (const auto& p : pieces)
    line("  <polygon points=\"" + cv.xy({0, 0}) + " " + cv.xy(p.from) + " " + cv.xy(p.to) + "\"/>");
  line("</g>");
  line("<g id=\"axes\" stroke=\"#888888\" stroke-width=\"1\">");
  line("  <line x1=\"" + cv.x(min_x - 0.5) + "\" y1=\"" + cv.y(0) + "\" x2=\"" + cv.x(max_x + 0.5) + "\" y2=\"" +
       cv.y(0) + "\"/>");
  line("  <line x1=\"" + cv.x(0) + "\" y1=\"" + cv.y(min_y - 0.5) + "\" x2=\"" + cv.x(0) + "\" y2=\"" +
       cv.y(max_y + 0.5) + "\"/>");
  line("</g>");
  line("<g id=\"zero-weight-rays\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"4,3\">");
  for (std::size_t j = 0; j < n; ++j) {
    if (scaled[j]) continue;
    const Pt end = (far / std::sqrt(dot(col[j], col[j]))) * col[j];
    line("  <line x1=\"" + cv.x(0) + "\" y1=\"" + cv.y(0) + "\" x2=\"" + cv.x(end.x) + "\" y2=\"" + cv.y(end.y) +
         "\"/>");
  }
  line("</g>");
  line("<g id=\"umbrella\" stroke=\"black\" stroke-width=\"3\" fill=\"none\">");
  for (const auto& p : pieces)
    line("  <line x1=\"" + cv.x(p.from.x) + "\" y1=\"" + cv.y(p.from.y) + "\" x2=\"" + cv.x(p.to.x) + "\" y2=\"" +
         cv.y(p.to.y) + "\"/>");
  line("</g>");
  line("<g id=\"points\" font-family=\"sans-serif\" font-size=\"12\">");
  line("  <circle cx=\"" + cv.x(0) + "\" cy=\"" + cv.y(0) + "\" r=\"3\" fill=\"black\"/>");
  for (std::size_t j = 0; j < n; ++j) {
    const std::string label = "a" + std::to_string(j + 1);
    line("  <circle cx=\"" + cv.x(col[j].x) + "\" cy=\"" + cv.y(col[j].y) + "\" r=\"4\" fill=\"black\"/>");
    line("  <text x=\"" + cv.x(col[j].x + 0.1) + "\" y=\"" + cv.y(col[j].y + 0.1) + "\">" + label + "</text>");
    if (scaled[j] && l[j] != 1) {
      const Pt p = *scaled[j];
      line("  <circle cx=\"" + cv.x(p.x) + "\" cy=\"" + cv.y(p.y) +
           "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>");
      line("  <text x=\"" + cv.x(p.x + 0.1) + "\" y=\"" + cv.y(p.y - 0.3) + "\">" + label + "^L</text>");
    }
  }
  line("</g>");
  line("</svg>");
  return svg;
}

}  // namespace umbrella::cli
