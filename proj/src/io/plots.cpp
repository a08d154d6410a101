#include "ofdrshape/io/plots.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ofdrshape/error.hpp"
#include "ofdrshape/io/csv.hpp"

namespace ofdrshape::io {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 460.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Bounds {
  double x0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  void pad() {
    if (x1 - x0 < 1e-9) { x0 -= 1.0; x1 += 1.0; }
    if (y1 - y0 < 1e-9) { y0 -= 1.0; y1 += 1.0; }
    const double px = 0.04 * (x1 - x0);
    const double py = 0.06 * (y1 - y0);
    x0 -= px; x1 += px; y0 -= py; y1 += py;
  }
  // Equal units on both axes, for shape plots.
  void equalize() {
    const double sx = (x1 - x0) / (kWidth - kMarginLeft - kMarginRight);
    const double sy = (y1 - y0) / (kHeight - kMarginTop - kMarginBottom);
    const double s = std::max(sx, sy);
    const double cx = 0.5 * (x0 + x1);
    const double cy = 0.5 * (y0 + y1);
    const double hx = 0.5 * s * (kWidth - kMarginLeft - kMarginRight);
    const double hy = 0.5 * s * (kHeight - kMarginTop - kMarginBottom);
    x0 = cx - hx; x1 = cx + hx; y0 = cy - hy; y1 = cy + hy;
  }
};

double nice_step(double range) {
  const double raw = range / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

std::string num(double v) {
  const std::string s = fmt::format("{:.2f}", v);
  return s == "-0.00" ? "0.00" : s;
}

class SvgCanvas {
 public:
  SvgCanvas(const Bounds& b, const std::string& title, const std::string& xlabel,
            const std::string& ylabel)
      : b_(b) {
    out_ += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
        kWidth, kHeight);
    out_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out_ += fmt::format("<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
                        "text-anchor=\"middle\">{}</text>\n",
                        num(kWidth / 2), escape(title));
    axes(xlabel, ylabel);
  }

  double px(double x) const {
    return kMarginLeft + (x - b_.x0) / (b_.x1 - b_.x0) * (kWidth - kMarginLeft - kMarginRight);
  }
  double py(double y) const {
    return kHeight - kMarginBottom - (y - b_.y0) / (b_.y1 - b_.y0) * (kHeight - kMarginTop - kMarginBottom);
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color,
                double width, const std::string& dash = "") {
    if (pts.empty()) return;
    out_ += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(width) + "\"";
    if (!dash.empty()) out_ += " stroke-dasharray=\"" + dash + "\"";
    out_ += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ += ' ';
      out_ += num(px(pts[i].first)) + "," + num(py(pts[i].second));
    }
    out_ += "\"/>\n";
  }

  void legend(std::size_t row, const std::string& color, const std::string& text,
              const std::string& dash = "") {
    const double y = kMarginTop + 14.0 + 16.0 * static_cast<double>(row);
    const double x = kWidth - kMarginRight - 170.0;
    out_ += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"{}/>\n",
                        num(x), num(y), num(x + 22), num(y), color,
                        dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"");
    out_ += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                        num(x + 28), num(y + 4), escape(text));
  }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  static std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
      switch (c) {
        case '<': r += "&lt;"; break;
        case '>': r += "&gt;"; break;
        case '&': r += "&amp;"; break;
        default: r += c;
      }
    }
    return r;
  }

  void axes(const std::string& xlabel, const std::string& ylabel) {
    const double left = kMarginLeft;
    const double right = kWidth - kMarginRight;
    const double top = kMarginTop;
    const double bottom = kHeight - kMarginBottom;
    out_ += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                        num(left), num(top), num(right - left), num(bottom - top));
    const double xs = nice_step(b_.x1 - b_.x0);
    for (double t = std::ceil(b_.x0 / xs) * xs; t <= b_.x1; t += xs) {
      const double x = px(t);
      out_ += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#dddddd\"/>\n",
                          num(x), num(top), num(bottom));
      out_ += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" "
                          "text-anchor=\"middle\">{}</text>\n",
                          num(x), num(bottom + 16), fmt::format("{:g}", std::abs(t) < 1e-9 ? 0.0 : t));
    }
    const double ys = nice_step(b_.y1 - b_.y0);
    for (double t = std::ceil(b_.y0 / ys) * ys; t <= b_.y1; t += ys) {
      const double y = py(t);
      out_ += fmt::format("<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#dddddd\"/>\n",
                          num(y), num(left), num(right));
      out_ += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" "
                          "text-anchor=\"end\">{}</text>\n",
                          num(left - 6), num(y + 4), fmt::format("{:g}", std::abs(t) < 1e-9 ? 0.0 : t));
    }
    out_ += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" "
                        "text-anchor=\"middle\">{}</text>\n",
                        num((left + right) / 2), num(kHeight - 12), escape(xlabel));
    out_ += fmt::format("<text x=\"16\" y=\"{0}\" font-family=\"sans-serif\" font-size=\"13\" "
                        "text-anchor=\"middle\" transform=\"rotate(-90 16 {0})\">{1}</text>\n",
                        num((top + bottom) / 2), escape(ylabel));
  }

  Bounds b_;
  std::string out_;
};

std::vector<std::pair<double, double>> offset_curve(const PlanarShape& shape, double offset) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(shape.size());
  for (const auto& p : shape.points) {
    pts.emplace_back(p.x - offset * std::sin(p.theta), p.y + offset * std::cos(p.theta));
  }
  return pts;
}

}  // namespace

std::string strain_plot_svg(const simulator::FrameSeries& series, const std::string& title) {
  if (series.frames.empty()) throw DomainError("strain plot: no frames");
  Bounds b;
  for (const auto& f : series.frames) {
    for (std::size_t i = 0; i < f.profile.size(); ++i) b.add(f.profile.position(i), f.profile.samples[i]);
  }
  b.add(b.x0, 0.0);
  b.pad();
  SvgCanvas canvas(b, title, "arc position along trajectory (mm)", "strain (µε)");
  for (std::size_t k = 0; k < series.frames.size(); ++k) {
    const auto& f = series.frames[k];
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < f.profile.size(); ++i) pts.emplace_back(f.profile.position(i), f.profile.samples[i]);
    const char* color = kPalette[k % kPalette.size()];
    canvas.polyline(pts, color, 1.5);
    canvas.legend(k, color, fmt::format("depth {:g} mm", f.depth_mm));
  }
  return canvas.finish();
}

std::string shape_plot_svg(const std::vector<PlanarShape>& measured, const PlanarShape& expected,
                           double tube_radius_mm, const std::string& title) {
  if (expected.empty()) throw DomainError("shape plot: empty expected shape");
  const auto inner = offset_curve(expected, tube_radius_mm);
  const auto outer = offset_curve(expected, -tube_radius_mm);
  Bounds b;
  for (const auto& [x, y] : inner) b.add(x, y);
  for (const auto& [x, y] : outer) b.add(x, y);
  for (const auto& shape : measured) {
    for (const auto& p : shape.points) b.add(p.x, p.y);
  }
  b.pad();
  b.equalize();
  SvgCanvas canvas(b, title, "x (mm)", "y (mm)");
  canvas.polyline(inner, "#999999", 1.0);
  canvas.polyline(outer, "#999999", 1.0);
  std::vector<std::pair<double, double>> mid;
  for (const auto& p : expected.points) mid.emplace_back(p.x, p.y);
  canvas.polyline(mid, "#000000", 1.2, "6,4");
  canvas.legend(0, "#000000", "expected midline", "6,4");
  canvas.legend(1, "#999999", "tube walls");
  for (std::size_t k = 0; k < measured.size(); ++k) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : measured[k].points) pts.emplace_back(p.x, p.y);
    const char* color = kPalette[k % kPalette.size()];
    canvas.polyline(pts, color, 1.6);
    canvas.legend(k + 2, color, fmt::format("measured {}", k));
  }
  return canvas.finish();
}

void emit_strain_plot(const std::filesystem::path& path, const simulator::FrameSeries& series,
                      const std::string& title) {
  write_text(path, strain_plot_svg(series, title));
}

void emit_shape_plot(const std::filesystem::path& path, const std::vector<PlanarShape>& measured,
                     const PlanarShape& expected, const std::string& title, double tube_radius_mm) {
  write_text(path, shape_plot_svg(measured, expected, tube_radius_mm, title));
}

}  // namespace ofdrshape::io
