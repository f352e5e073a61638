#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "wglab/errors.hpp"
#include "wglab/experiments.hpp"
#include "wglab/limit_theory.hpp"

namespace wglab {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;
constexpr int kCurvePoints = 200;
constexpr double kErrorBarZ = 2.58;

constexpr std::array<const char*, 6> kPalette = {"#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#17becf"};

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string coord(double x) { return fmt("%.2f", x); }

}  // namespace

std::string render_figure1_svg(const std::vector<SweepRow>& rows) {
  std::set<double> distinct_c;
  for (const SweepRow& r : rows) distinct_c.insert(r.c);
  if (distinct_c.size() < 5) {
    throw ConfigError("figure needs at least 5 distinct c values, got " + std::to_string(distinct_c.size()));
  }
  const double c_min = *distinct_c.begin();
  const double c_max = *distinct_c.rbegin();
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double c) { return kLeft + (c - c_min) / (c_max - c_min) * plot_w; };
  auto py = [&](double tv) { return kTop + (1.0 - std::clamp(tv, 0.0, 1.0)) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

  // axes
  svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop + plot_h) + "\" x2=\"" +
         coord(kLeft + plot_w) + "\" y2=\"" + coord(kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop) + "\" x2=\"" + coord(kLeft) +
         "\" y2=\"" + coord(kTop + plot_h) + "\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double c = c_min + (c_max - c_min) * k / 5.0;
    svg += "<line x1=\"" + coord(px(c)) + "\" y1=\"" + coord(kTop + plot_h) + "\" x2=\"" + coord(px(c)) +
           "\" y2=\"" + coord(kTop + plot_h + 5.0) + "\"/>\n";
    const double tv = k / 5.0;
    svg += "<line x1=\"" + coord(kLeft - 5.0) + "\" y1=\"" + coord(py(tv)) + "\" x2=\"" + coord(kLeft) +
           "\" y2=\"" + coord(py(tv)) + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int k = 0; k <= 5; ++k) {
    const double c = c_min + (c_max - c_min) * k / 5.0;
    svg += "<text x=\"" + coord(px(c)) + "\" y=\"" + coord(kTop + plot_h + 20.0) +
           "\" text-anchor=\"middle\">" + fmt("%.4g", c) + "</text>\n";
    const double tv = k / 5.0;
    svg += "<text x=\"" + coord(kLeft - 8.0) + "\" y=\"" + coord(py(tv) + 4.0) +
           "\" text-anchor=\"end\">" + fmt("%.1f", tv) + "</text>\n";
  }
  svg += "<text x=\"" + coord(kLeft + plot_w / 2.0) + "\" y=\"" + coord(kHeight - 15.0) +
         "\" text-anchor=\"middle\">c = d / n^3</text>\n";
  svg += "<text x=\"18\" y=\"" + coord(kTop + plot_h / 2.0) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         coord(kTop + plot_h / 2.0) + ")\">TV(W(n,d), M(n,d))</text>\n";
  svg += "</g>\n";

  // closed-form limit curve
  svg += "<polyline id=\"limit-curve\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (int k = 0; k < kCurvePoints; ++k) {
    const double c = c_min + (c_max - c_min) * k / (kCurvePoints - 1.0);
    const double tv = limiting_tv_closed_form(LimitParams{c});
    if (k > 0) svg += ' ';
    svg += coord(px(c)) + ',' + coord(py(tv));
  }
  svg += "\"/>\n";

  // Monte Carlo points, one colour per n
  std::map<std::size_t, std::vector<const SweepRow*>> by_n;
  for (const SweepRow& r : rows) by_n[r.n].push_back(&r);
  std::size_t series = 0;
  for (const auto& [n, points] : by_n) {
    const char* colour = kPalette[series % kPalette.size()];
    svg += "<g class=\"mc\" data-n=\"" + std::to_string(n) + "\" stroke=\"" + colour + "\" fill=\"" +
           colour + "\">\n";
    for (const SweepRow* r : points) {
      const double half = kErrorBarZ * r->tv_stderr;
      svg += "<line x1=\"" + coord(px(r->c)) + "\" y1=\"" + coord(py(r->tv_mc - half)) + "\" x2=\"" +
             coord(px(r->c)) + "\" y2=\"" + coord(py(r->tv_mc + half)) + "\"/>\n";
      svg += "<circle cx=\"" + coord(px(r->c)) + "\" cy=\"" + coord(py(r->tv_mc)) + "\" r=\"3\" data-c=\"" +
             format_double(r->c) + "\" data-d=\"" + std::to_string(r->d) + "\" data-tv=\"" +
             format_double(r->tv_mc) + "\" data-stderr=\"" + format_double(r->tv_stderr) + "\"/>\n";
    }
    svg += "</g>\n";
    ++series;
  }

  // legend
  const double lx = kLeft + plot_w - 190.0;
  double ly = kTop + 15.0;
  svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<line x1=\"" + coord(lx) + "\" y1=\"" + coord(ly - 4.0) + "\" x2=\"" + coord(lx + 20.0) + "\" y2=\"" +
         coord(ly - 4.0) + "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  svg += "<text x=\"" + coord(lx + 26.0) + "\" y=\"" + coord(ly) + "\">limit Erf(1/(4 sqrt(3c)))</text>\n";
  series = 0;
  for (const auto& [n, points] : by_n) {
    ly += 18.0;
    const char* colour = kPalette[series % kPalette.size()];
    svg += "<circle cx=\"" + coord(lx + 10.0) + "\" cy=\"" + coord(ly - 4.0) + "\" r=\"3\" fill=\"" + colour +
           "\"/>\n";
    svg += "<text x=\"" + coord(lx + 26.0) + "\" y=\"" + coord(ly) + "\">Monte Carlo, n = " + std::to_string(n) +
           " (99% bars)</text>\n";
    ++series;
  }
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace wglab
