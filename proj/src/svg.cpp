#include "ivdyn/svg.hpp"

#include <cstdio>
#include <sstream>

#include "ivdyn/orbit.hpp"
#include "ivdyn/report.hpp"

namespace ivdyn {

namespace {

constexpr double kCanvas = 500.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSvgSignificantDigits, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps domain coordinates onto the square plot area, y growing upwards.
struct Frame {
  ClosedInterval domain;
  double px(const Rational& x) const {
    return kMargin + ((x - domain.lo) / domain.length()).to_double() * (kCanvas - 2 * kMargin);
  }
  double py(const Rational& y) const {
    return kCanvas - kMargin - ((y - domain.lo) / domain.length()).to_double() * (kCanvas - 2 * kMargin);
  }
};

std::string header(const std::string& comment, double height) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kCanvas) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(kCanvas) << " " << num(height) << "\">\n"
      << "<!-- " << comment << "; coordinates rendered with " << kSvgSignificantDigits
      << " significant digits -->\n";
  return out.str();
}

}  // namespace

std::string cobweb_svg(const MapModel& m, const CobwebOptions& options) {
  const Frame frame{m.domain()};
  std::vector<Breakpoint> graph;
  std::string comment = "cobweb of " + m.name() + ", seed " + options.seed.str() + ", " +
                        std::to_string(options.steps) + " steps";
  if (m.is_pl()) {
    graph = m.as_pl().breakpoints();
  } else {
    graph = StaircaseMap{}.truncated_breakpoints(options.staircase_truncation);
    comment += "; staircase graph truncated at piece n=" + std::to_string(options.staircase_truncation);
  }

  std::ostringstream out;
  out << header(escape(comment), kCanvas);
  const ClosedInterval& d = frame.domain;
  out << "<rect class=\"frame\" x=\"" << num(frame.px(d.lo)) << "\" y=\"" << num(frame.py(d.hi)) << "\" width=\""
      << num(frame.px(d.hi) - frame.px(d.lo)) << "\" height=\"" << num(frame.py(d.lo) - frame.py(d.hi))
      << "\" fill=\"none\" stroke=\"#888\"/>\n";
  out << "<line class=\"diagonal\" x1=\"" << num(frame.px(d.lo)) << "\" y1=\"" << num(frame.py(d.lo))
      << "\" x2=\"" << num(frame.px(d.hi)) << "\" y2=\"" << num(frame.py(d.hi))
      << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  out << "<polyline class=\"graph\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    out << (i ? " " : "") << num(frame.px(graph[i].x)) << "," << num(frame.py(graph[i].y));
  }
  out << "\"/>\n";

  const OrbitRecord r = orbit(m, options.seed, options.steps);
  out << "<g class=\"cobweb\" stroke=\"#c0392b\" stroke-width=\"0.8\">\n";
  for (std::size_t i = 0; i + 1 < r.points.size(); ++i) {
    const Rational& x = r.points[i];
    const Rational& y = r.points[i + 1];
    out << "<line class=\"cobweb\" x1=\"" << num(frame.px(x)) << "\" y1=\"" << num(frame.py(x)) << "\" x2=\""
        << num(frame.px(x)) << "\" y2=\"" << num(frame.py(y)) << "\"/>\n";
    out << "<line class=\"cobweb\" x1=\"" << num(frame.px(x)) << "\" y1=\"" << num(frame.py(y)) << "\" x2=\""
        << num(frame.px(y)) << "\" y2=\"" << num(frame.py(y)) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string sets_svg(const ClosedInterval& domain, const std::vector<LabeledSet>& rows, const std::string& title) {
  const double row_height = 36.0;
  const double height = 2 * kMargin + row_height * static_cast<double>(rows.size());
  const Frame frame{domain};

  std::ostringstream out;
  out << header(escape(title) + "; domain " + domain.str(), height);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double y = kMargin + row_height * static_cast<double>(i);
    const auto& row = rows[i];
    out << "<g class=\"row\">\n";
    out << "<text x=\"4\" y=\"" << num(y + 12) << "\" font-size=\"10\">" << escape(row.label) << ": "
        << escape(row.set.str()) << "</text>\n";
    out << "<rect class=\"track\" x=\"" << num(frame.px(domain.lo)) << "\" y=\"" << num(y + 16) << "\" width=\""
        << num(frame.px(domain.hi) - frame.px(domain.lo)) << "\" height=\"12\" fill=\"#eee\"/>\n";
    for (const auto& c : row.set.components()) {
      const double x0 = frame.px(c.lo);
      const double w = c.degenerate() ? 1.0 : frame.px(c.hi) - x0;
      out << "<rect class=\"component\" x=\"" << num(x0) << "\" y=\"" << num(y + 16) << "\" width=\"" << num(w)
          << "\" height=\"12\" fill=\"#2e86c1\"><title>" << c.str() << "</title></rect>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void render_cobweb(const MapModel& m, const CobwebOptions& options, const std::filesystem::path& out) {
  write_file_atomically(out, cobweb_svg(m, options));
}

void render_sets(const ClosedInterval& domain, const std::vector<LabeledSet>& rows, const std::string& title,
                 const std::filesystem::path& out) {
  write_file_atomically(out, sets_svg(domain, rows, title));
}

}  // namespace ivdyn
