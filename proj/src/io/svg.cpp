#include "simson/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace simson::io {

namespace {

struct Box {
  double min_x, max_x, min_y, max_y;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
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

// Segment of a*x + b*y + c = 0 inside the box, if any.
std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>> clip(double a, double b, double c,
                                                                                    const Box& box) {
  std::vector<std::pair<double, double>> hits;
  auto add = [&](double x, double y) {
    const double tol = 1e-12 * std::max({1.0, std::abs(box.max_x - box.min_x), std::abs(box.max_y - box.min_y)});
    if (x < box.min_x - tol || x > box.max_x + tol || y < box.min_y - tol || y > box.max_y + tol) return;
    for (const auto& h : hits) {
      if (std::abs(h.first - x) <= tol && std::abs(h.second - y) <= tol) return;
    }
    hits.emplace_back(x, y);
  };
  if (b != 0.0) {
    add(box.min_x, -(a * box.min_x + c) / b);
    add(box.max_x, -(a * box.max_x + c) / b);
  }
  if (a != 0.0) {
    add(-(b * box.min_y + c) / a, box.min_y);
    add(-(b * box.max_y + c) / a, box.max_y);
  }
  if (hits.size() < 2) return std::nullopt;
  // Corner hits can produce more than two entries; keep the farthest pair.
  std::pair<std::size_t, std::size_t> best{0, 1};
  double widest = -1.0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      const double d = std::hypot(hits[i].first - hits[j].first, hits[i].second - hits[j].second);
      if (d > widest) {
        widest = d;
        best = {i, j};
      }
    }
  }
  return std::make_pair(hits[best.first], hits[best.second]);
}

template <class T>
std::vector<std::pair<std::string, const T*>> sorted(std::vector<std::pair<std::string, const T*>> items) {
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return items;
}

}  // namespace

std::string render_svg(const scene::Scene& scene, const SvgOptions& options) {
  const auto points = sorted(scene.named_points());
  const auto lines = sorted(scene.named_lines());
  const auto circles = sorted(scene.named_circles());

  Box box{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& [name, p] : points) {
    const double x = p->x.to_double(), y = p->y.to_double();
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    box.min_x = std::min(box.min_x, x);
    box.max_x = std::max(box.max_x, x);
    box.min_y = std::min(box.min_y, y);
    box.max_y = std::max(box.max_y, y);
  }
  if (!std::isfinite(box.min_x)) box = {-1.0, 1.0, -1.0, 1.0};
  const double span_x = box.max_x - box.min_x > 0 ? box.max_x - box.min_x : 1.0;
  const double span_y = box.max_y - box.min_y > 0 ? box.max_y - box.min_y : 1.0;
  box.min_x -= options.margin * span_x;
  box.max_x += options.margin * span_x;
  box.min_y -= options.margin * span_y;
  box.max_y += options.margin * span_y;

  const double scale = options.width_px / (box.max_x - box.min_x);
  const double height_px = (box.max_y - box.min_y) * scale;
  auto px = [&](double x) { return fmt((x - box.min_x) * scale); };
  auto py = [&](double y) { return fmt((box.max_y - y) * scale); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(options.width_px) +
         "\" height=\"" + fmt(height_px) + "\" viewBox=\"0.000000 0.000000 " + fmt(options.width_px) + " " +
         fmt(height_px) + "\">\n";
  out += "<title>" + escape("Generalized Wallace-Simson line, " + scene.params.to_string()) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(options.width_px) + "\" height=\"" + fmt(height_px) +
         "\" fill=\"white\"/>\n";

  out += "<g id=\"points\" fill=\"black\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const auto& [name, p] : points) {
    const double x = p->x.to_double(), y = p->y.to_double();
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    out += "  <circle id=\"pt-" + name + "\" cx=\"" + px(x) + "\" cy=\"" + py(y) + "\" r=\"2\"/>\n";
    out += "  <text x=\"" + fmt((x - box.min_x) * scale + 4) + "\" y=\"" + fmt((box.max_y - y) * scale - 4) +
           "\">" + escape(name) + "</text>\n";
  }
  out += "</g>\n";

  out += "<g id=\"lines\" fill=\"none\" stroke-width=\"1\">\n";
  for (const auto& [name, l] : lines) {
    const auto seg = clip(l->a().to_double(), l->b().to_double(), l->c().to_double(), box);
    if (!seg) continue;
    const char* stroke = name == "gwsLine" ? "crimson" : (name.rfind("alt", 0) == 0 ? "gray" : "steelblue");
    out += "  <line id=\"ln-" + name + "\" x1=\"" + px(seg->first.first) + "\" y1=\"" + py(seg->first.second) +
           "\" x2=\"" + px(seg->second.first) + "\" y2=\"" + py(seg->second.second) + "\" stroke=\"" + stroke +
           "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"circles\" fill=\"none\" stroke=\"darkgreen\" stroke-width=\"1\">\n";
  for (const auto& [name, c] : circles) {
    const geom::Point center = c->center();
    const double r = std::sqrt(std::max(0.0, c->squared_radius().to_double()));
    out += "  <circle id=\"cr-" + name + "\" cx=\"" + px(center.x.to_double()) + "\" cy=\"" +
           py(center.y.to_double()) + "\" r=\"" + fmt(r * scale) + "\"/>\n";
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace simson::io
