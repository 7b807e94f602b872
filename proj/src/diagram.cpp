#include "cgf/diagram.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "cgf/io.hpp"

namespace cgf {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
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

std::string exact_point(const Point2& p) { return format_qnum(p.x) + ", " + format_qnum(p.y); }

}  // namespace

std::vector<LimitCone> limit_cones(const AdditivityReport& report) {
  std::vector<LimitCone> out;
  const DeltaComplex& dc = report.complex;
  for (std::size_t i = 0; i < dc.size(); ++i) {
    if (report.classes[i] != FaceClass::limit_additive) continue;
    const Face2D& F = dc[i];
    double cx = 0, cy = 0;
    for (const auto& v : F.vertices) {
      cx += v.x.to_double();
      cy += v.y.to_double();
    }
    cx /= static_cast<double>(F.vertices.size());
    cy /= static_cast<double>(F.vertices.size());
    for (std::size_t k = 0; k < F.vertices.size(); ++k) {
      if (!report.slacks[i][k].is_zero()) continue;
      const double dx = cx - F.vertices[k].x.to_double();
      const double dy = cy - F.vertices[k].y.to_double();
      const double n = std::hypot(dx, dy);
      out.push_back({i, F.vertices[k], dx / n, dy / n});
    }
  }
  return out;
}

std::string render_svg(const PwlFunction& pi, const AdditivityReport& report, const DiagramOptions& opts) {
  const DeltaComplex& dc = report.complex;
  const double S = opts.size;
  const double pad = 20;
  auto X = [&](double x) { return num(pad + x * S); };
  auto Y = [&](double y) { return num(pad + (1 - y) * S); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(S + 2 * pad) << "\" height=\""
     << num(S + 2 * pad) << "\" viewBox=\"0 0 " << num(S + 2 * pad) << " " << num(S + 2 * pad)
     << "\" data-function=\"" << escape(pi.name()) << "\" data-f=\"" << format_qnum(pi.f()) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(S + 2 * pad) << "\" height=\"" << num(S + 2 * pad)
     << "\" fill=\"white\"/>\n";
  if (!opts.note.empty()) {
    os << "<text x=\"" << num(pad) << "\" y=\"" << num(pad * 0.75) << "\" font-size=\"12\">"
       << escape(opts.note) << "</text>\n";
  }

  if (opts.color_by_nf) {
    static const char* shades[] = {"#ffffff", "#d9d9d9", "#a6a6a6", "#595959"};
    os << "<g class=\"nf\">\n";
    for (const auto& F : dc.faces()) {
      if (F.dim != 2) continue;
      const int nf = n_f(F, pi.special_intervals());
      os << "<polygon data-nf=\"" << nf << "\" fill=\"" << shades[nf] << "\" points=\"";
      for (const auto& v : F.vertices) os << X(v.x.to_double()) << "," << Y(v.y.to_double()) << " ";
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (opts.show_additive) {
    os << "<g class=\"additive\" fill=\"#4caf50\" stroke=\"#2e7d32\">\n";
    for (std::size_t i = 0; i < dc.size(); ++i) {
      if (!report.is_additive(i)) continue;
      const Face2D& F = dc[i];
      const std::string face = escape(dc.label(F));
      if (F.dim == 2) {
        os << "<polygon data-face=\"" << face << "\" fill-opacity=\"0.6\" points=\"";
        for (const auto& v : F.vertices) os << X(v.x.to_double()) << "," << Y(v.y.to_double()) << " ";
        os << "\"/>\n";
      } else if (F.dim == 1) {
        os << "<line data-face=\"" << face << "\" stroke-width=\"2.5\" x1=\"" << X(F.vertices[0].x.to_double())
           << "\" y1=\"" << Y(F.vertices[0].y.to_double()) << "\" x2=\"" << X(F.vertices[1].x.to_double())
           << "\" y2=\"" << Y(F.vertices[1].y.to_double()) << "\"/>\n";
      } else {
        os << "<circle data-face=\"" << face << "\" r=\"2.5\" cx=\"" << X(F.vertices[0].x.to_double())
           << "\" cy=\"" << Y(F.vertices[0].y.to_double()) << "\"/>\n";
      }
    }
    os << "</g>\n";
  }

  os << "<g class=\"grid\" stroke=\"#808080\" stroke-width=\"0.5\">\n";
  const auto& bps = dc.complex().breakpoints();
  std::vector<QNum> lines(bps.begin(), bps.end());
  lines.push_back(QNum(1));
  for (const auto& b : lines) {
    const double t = b.to_double();
    const std::string e = format_qnum(b);
    os << "<line data-x=\"" << e << "\" x1=\"" << X(t) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(t) << "\" y2=\""
       << Y(1) << "\"/>\n";
    os << "<line data-y=\"" << e << "\" x1=\"" << X(0) << "\" y1=\"" << Y(t) << "\" x2=\"" << X(1) << "\" y2=\""
       << Y(t) << "\"/>\n";
  }
  for (const auto& b : lines) {
    for (int shift = 0; shift < 2; ++shift) {
      const double c = b.to_double() + shift;
      if (c <= 0 || c >= 2) continue;
      const double x0 = std::max(0.0, c - 1), x1 = std::min(1.0, c);
      os << "<line data-sum=\"" << format_qnum(b + QNum(shift)) << "\" x1=\"" << X(x0) << "\" y1=\""
         << Y(c - x0) << "\" x2=\"" << X(x1) << "\" y2=\"" << Y(c - x1) << "\"/>\n";
    }
  }
  os << "</g>\n";

  if (opts.show_limit_cones) {
    const double len = 0.02 * S;
    os << "<g class=\"limit-cones\" stroke=\"#2e7d32\" fill=\"#2e7d32\">\n";
    for (const auto& c : limit_cones(report)) {
      const double x = pad + c.vertex.x.to_double() * S;
      const double y = pad + (1 - c.vertex.y.to_double()) * S;
      // Arrow pointing at the vertex from inside the face.
      const double tx = x + c.dx * len, ty = y - c.dy * len;
      const double hx = -c.dx, hy = c.dy;
      const double h = 0.35 * len;
      os << "<g data-face=\"" << escape(dc.label(dc[c.face])) << "\" data-vertex=\"" << exact_point(c.vertex)
         << "\" data-direction=\"" << num(c.dx) << "," << num(c.dy) << "\">"
         << "<line stroke-width=\"1.5\" x1=\"" << num(tx) << "\" y1=\"" << num(ty) << "\" x2=\"" << num(x)
         << "\" y2=\"" << num(y) << "\"/>"
         << "<polygon points=\"" << num(x) << "," << num(y) << " " << num(x - hx * h - hy * h * 0.6) << ","
         << num(y - hy * h + hx * h * 0.6) << " " << num(x - hx * h + hy * h * 0.6) << ","
         << num(y - hy * h - hx * h * 0.6) << "\"/></g>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_json(const PwlFunction& pi, const AdditivityReport& report) {
  auto j = nlohmann::ordered_json::parse(additivity_json(report, pi.special_intervals()));
  j["function"] = pi.name();
  j["f"] = format_qnum(pi.f());
  auto cones = nlohmann::ordered_json::array();
  for (const auto& c : limit_cones(report)) {
    cones.push_back({{"face", report.complex.label(report.complex[c.face])},
                     {"vertex", {format_qnum(c.vertex.x), format_qnum(c.vertex.y)}},
                     {"direction", {num(c.dx), num(c.dy)}}});
  }
  j["limit_cones"] = cones;
  return j.dump(2);
}

}  // namespace cgf
