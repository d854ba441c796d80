#include <frontcalc/trace_io.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace frontcalc {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void write_csv(const EvolutionTrace& trace, std::ostream& out) {
  for (std::size_t i = 1; i <= trace.dim; ++i) out << 'u' << i << ',';
  out << "s,ped_x,ped_y,wf_x,wf_y,t_x,t_y\n";
  for (const auto& m : trace.members) {
    if (!m.error.empty()) continue;
    std::string prefix;
    for (double u : m.u) prefix += format_double(u) + ',';
    const auto& t = m.trace;
    for (std::size_t k = 0; k < t.s.size(); ++k) {
      out << prefix << format_double(t.s[k]) << ','
          << format_double(t.ped[k].x) << ',' << format_double(t.ped[k].y)
          << ',' << format_double(t.wf[k].x) << ','
          << format_double(t.wf[k].y) << ',' << format_double(t.tangent[k].x)
          << ',' << format_double(t.tangent[k].y) << '\n';
    }
  }
}

namespace {

struct Box {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  void add(Vec2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
};

constexpr double kPanel = 400;
constexpr double kMargin = 20;

void panel(std::ostream& out, const EvolutionTrace& trace, bool pedal,
           double x0, const std::string& title) {
  Box box;
  for (const auto& m : trace.members) {
    if (!m.error.empty()) continue;
    for (const Vec2& p : pedal ? m.trace.ped : m.trace.wf) box.add(p);
  }
  if (!(box.xmin <= box.xmax)) box = {-1, 1, -1, 1};
  const double span =
      std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-12});
  const double k = (kPanel - 2 * kMargin) / span;
  auto map = [&](Vec2 p) {
    return Vec2{x0 + kMargin + (p.x - box.xmin) * k,
                kPanel - kMargin - (p.y - box.ymin) * k};
  };
  out << "<g>\n<rect x=\"" << x0 << "\" y=\"0\" width=\"" << kPanel
      << "\" height=\"" << kPanel
      << "\" fill=\"white\" stroke=\"#999\"/>\n<text x=\"" << x0 + 8
      << "\" y=\"16\" font-size=\"12\">" << title << "</text>\n";
  const std::size_t count = trace.members.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& m = trace.members[i];
    if (!m.error.empty()) continue;
    const int hue = count > 1 ? int(240.0 * double(i) / double(count - 1)) : 0;
    out << "<polyline fill=\"none\" stroke-width=\"1\" stroke=\"hsl(" << hue
        << ",70%,40%)\" points=\"";
    for (const Vec2& p : pedal ? m.trace.ped : m.trace.wf) {
      const Vec2 q = map(p);
      out << format_double(std::round(q.x * 100) / 100) << ','
          << format_double(std::round(q.y * 100) / 100) << ' ';
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
}

}  // namespace

void write_svg(const EvolutionTrace& trace, std::ostream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kPanel
      << "\" height=\"" << kPanel << "\" viewBox=\"0 0 " << 2 * kPanel << ' '
      << kPanel << "\">\n";
  panel(out, trace, true, 0, "pedal curves");
  panel(out, trace, false, kPanel, "wave fronts");
  out << "</svg>\n";
}

}  // namespace frontcalc
