// Copyright 2026 The amongus-sim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace amongus::svg {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 150;
constexpr double kRight = 30;
constexpr double kTop = 40;
constexpr double kBottom = 50;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
                               "#bcbd22", "#17becf", "#393b79", "#637939"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string label_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string header(const std::string& title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" +
         "<text x=\"" + num(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
         escape(title) + "</text>\n";
}

std::string axes(const std::string& x_label, double x0, double x1, bool log_x) {
  const double y = kHeight - kBottom;
  std::string s = "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
                  num(kWidth - kRight) + "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
       "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    const double v = log_x ? std::exp(std::log(x0) + f * (std::log(x1) - std::log(x0)))
                           : x0 + f * (x1 - x0);
    const double px = kLeft + f * (kWidth - kLeft - kRight);
    s += "<text x=\"" + num(px) + "\" y=\"" + num(y + 15) +
         "\" text-anchor=\"middle\">" + label_num(v) + "</text>\n";
  }
  s += "<text x=\"" + num((kLeft + kWidth - kRight) / 2) + "\" y=\"" +
       num(kHeight - 12) + "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  return s;
}

}  // namespace

std::string step_plot(const std::string& title, const std::string& x_label,
                      const std::vector<StepSeries>& series) {
  double x0 = 0, x1 = 1;
  bool any = false;
  for (const auto& s : series) {
    for (const auto& [x, f] : s.steps) {
      x0 = any ? std::min(x0, x) : x;
      x1 = any ? std::max(x1, x) : x;
      any = true;
    }
  }
  if (x1 <= x0) x1 = x0 + 1;
  const double w = kWidth - kLeft - kRight;
  const double h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * w; };
  auto py = [&](double f) { return kTop + (1 - f) * h; };
  std::string out = header(title) + axes(x_label, x0, x1, false);
  for (int i = 0; i <= 4; ++i) {
    out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(i / 4.0) + 4) +
           "\" text-anchor=\"end\">" + label_num(i / 4.0) + "</text>\n";
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kColors[i % std::size(kColors)];
    std::string d = "M" + num(px(x0)) + "," + num(py(0));
    double prev = 0;
    for (const auto& [x, f] : s.steps) {
      d += " L" + num(px(x)) + "," + num(py(prev)) + " L" + num(px(x)) + "," + num(py(f));
      prev = f;
    }
    d += " L" + num(px(x1)) + "," + num(py(prev));
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\"/>\n";
    out += "<text x=\"" + num(kLeft + 8) + "\" y=\"" + num(kTop + 12 + 13.0 * i) +
           "\" fill=\"" + color + "\">" + escape(s.name) + "</text>\n";
  }
  return out + "</svg>\n";
}

std::string interval_plot(const std::string& title, const std::string& x_label,
                          const std::vector<Interval>& rows, double ref, bool log_x) {
  auto tx = [&](double v) { return log_x ? std::log(std::max(v, 1e-12)) : v; };
  double lo = tx(ref), hi = tx(ref);
  for (const auto& r : rows) {
    for (double v : {r.low, r.high, r.estimate}) {
      if (std::isfinite(tx(v))) {
        lo = std::min(lo, tx(v));
        hi = std::max(hi, tx(v));
      }
    }
  }
  if (hi <= lo) hi = lo + 1;
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double w = kWidth - kLeft - kRight;
  const double h = kHeight - kTop - kBottom;
  auto px = [&](double v) {
    return kLeft + (std::clamp(tx(v), lo, hi) - lo) / (hi - lo) * w;
  };
  std::string out = header(title) +
                    axes(x_label, log_x ? std::exp(lo) : lo, log_x ? std::exp(hi) : hi, log_x);
  out += "<line x1=\"" + num(px(ref)) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(px(ref)) +
         "\" y2=\"" + num(kHeight - kBottom) + "\" stroke=\"gray\" stroke-dasharray=\"4,3\"/>\n";
  const double step = rows.empty() ? h : h / rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double y = kTop + step * (i + 0.5);
    out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\">" + escape(r.label) + "</text>\n";
    out += "<line x1=\"" + num(px(r.low)) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(px(r.high)) + "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
    out += "<circle cx=\"" + num(px(r.estimate)) + "\" cy=\"" + num(y) +
           "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";
  }
  return out + "</svg>\n";
}

}  // namespace amongus::svg
