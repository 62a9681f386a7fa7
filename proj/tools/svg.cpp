#include "svg.hpp"

#include <array>
#include <cstdio>
#include <string>

namespace jacang::cli {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 60, kRight = 20, kTop = 20, kBottom = 50;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double px(double x) { return kLeft + x * (kWidth - kLeft - kRight); }
double py(double y, double ymax) { return kHeight - kBottom - y / ymax * (kHeight - kTop - kBottom); }

const std::array<const char*, 5> kDash{"", "8,5", "8,4,2,4", "16,6", "2,4"};

void polyline(std::string& out, const std::string& pts, const char* dash) {
  out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
  if (*dash) out += std::string(" stroke-dasharray=\"") + dash + "\"";
  out += " points=\"" + pts + "\"/>\n";
}

}  // namespace

std::string density_svg(const std::vector<DensityCurve>& curves, double ymax) {
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
       num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  // axes
  s += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0, ymax)) + "\" x2=\"" + num(px(1)) +
       "\" y2=\"" + num(py(0, ymax)) + "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0, ymax)) + "\" x2=\"" + num(px(0)) +
       "\" y2=\"" + num(py(ymax, ymax)) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    double x = 0.2 * i;
    s += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(py(0, ymax)) + "\" x2=\"" + num(px(x)) +
         "\" y2=\"" + num(py(0, ymax) + 5) + "\" stroke=\"black\"/>\n";
    char lab[16];
    std::snprintf(lab, sizeof lab, "%.1f", x);
    s += "<text x=\"" + num(px(x)) + "\" y=\"" + num(py(0, ymax) + 20) +
         "\" text-anchor=\"middle\">" + lab + "</text>\n";
  }
  int yt = static_cast<int>(ymax * 2 + 0.5);
  for (int i = 0; i <= yt; ++i) {
    double y = 0.5 * i;
    s += "<line x1=\"" + num(px(0) - 5) + "\" y1=\"" + num(py(y, ymax)) + "\" x2=\"" + num(px(0)) +
         "\" y2=\"" + num(py(y, ymax)) + "\" stroke=\"black\"/>\n";
    char lab[16];
    std::snprintf(lab, sizeof lab, "%.1f", y);
    s += "<text x=\"" + num(px(0) - 8) + "\" y=\"" + num(py(y, ymax) + 4) +
         "\" text-anchor=\"end\">" + lab + "</text>\n";
  }
  s += "<text x=\"" + num(px(0.5)) + "\" y=\"" + num(kHeight - 10) +
       "\" text-anchor=\"middle\">x</text>\n";
  s += "<text x=\"15\" y=\"" + num(py(ymax / 2, ymax)) + "\" text-anchor=\"middle\">u</text>\n";

  // curves, split where they leave the box
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const char* dash = kDash[c % kDash.size()];
    std::string pts;
    for (const auto& p : curves[c].samples) {
      if (p.u > ymax) {
        if (!pts.empty()) polyline(s, pts, dash);
        pts.clear();
        continue;
      }
      if (!pts.empty()) pts += ' ';
      pts += num(px(p.x)) + "," + num(py(p.u, ymax));
    }
    if (!pts.empty()) polyline(s, pts, dash);
  }

  // legend
  double lx = px(0.06), ly = py(ymax, ymax) + 10;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    double y = ly + 18 * c;
    std::string pts = num(lx) + "," + num(y) + " " + num(lx + 40) + "," + num(y);
    polyline(s, pts, kDash[c % kDash.size()]);
    s += "<text x=\"" + num(lx + 48) + "\" y=\"" + num(y + 4) + "\">r = " +
         std::to_string(curves[c].r) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace jacang::cli
