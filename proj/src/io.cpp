#include "cgf/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cgf/catalog.hpp"

namespace cgf {

namespace {

using ojson = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + sep.size();
  }
}

QNum parse_at(std::string_view text, std::size_t line) {
  try {
    return parse_qnum(text);
  } catch (const ParseError& e) {
    throw FormatError(line, std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

ojson face_ids(const PFace& F) { return ojson::array({F.lo, F.hi}); }

ojson face_entry(const DeltaComplex& dc, const Face2D& F, const std::vector<OpenInterval>& special) {
  const ComplexP& P = dc.complex();
  ojson j;
  j["label"] = dc.label(F);
  j["I"] = face_ids(F.I);
  j["J"] = face_ids(F.J);
  j["K"] = face_ids(F.K);
  j["projections"] = {P.label(F.I), P.label(F.J), P.label(F.K)};
  j["dim"] = F.dim;
  ojson verts = ojson::array();
  for (const auto& v : F.vertices) verts.push_back({format_qnum(v.x), format_qnum(v.y)});
  j["vertices"] = verts;
  j["n_F"] = n_f(F, special);
  return j;
}

PFace read_face(const nlohmann::json& j) { return {j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()}; }

}  // namespace

PwlFunction parse_function(std::string_view text) {
  std::string name;
  std::optional<QNum> f;
  std::vector<OpenInterval> special;
  std::vector<BreakpointRow> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.find('|') != std::string_view::npos) {
      const auto cells = split(line, "|");
      if (cells.size() != 4) throw FormatError(line_no, "expected 'x | left | value | right'");
      rows.push_back({parse_at(cells[0], line_no), parse_at(cells[1], line_no),
                      parse_at(cells[2], line_no), parse_at(cells[3], line_no)});
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw FormatError(line_no, "expected 'key: value' or a row");
    if (!rows.empty()) throw FormatError(line_no, "header field after breakpoint rows");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (key == "name") {
      name = std::string(value);
    } else if (key == "f") {
      f = parse_at(value, line_no);
    } else if (key == "special_intervals") {
      if (value.empty()) continue;
      for (auto part : split(value, ",")) {
        const auto ends = split(part, "..");
        if (ends.size() != 2) throw FormatError(line_no, "expected 'lo .. hi'");
        special.push_back({parse_at(ends[0], line_no), parse_at(ends[1], line_no)});
      }
    } else {
      throw FormatError(line_no, "unknown field '" + std::string(key) + "'");
    }
  }
  if (!f) throw FormatError(line_no, "missing field 'f'");
  if (rows.empty()) throw FormatError(line_no, "no breakpoint rows");
  try {
    return PwlFunction::from_rows(std::move(rows), *f, std::move(special), std::move(name));
  } catch (const std::invalid_argument& e) {
    throw FormatError(line_no, e.what());
  }
}

std::string format_function(const PwlFunction& pi) {
  std::ostringstream os;
  if (!pi.name().empty()) os << "name: " << pi.name() << "\n";
  os << "f: " << format_qnum(pi.f()) << "\n";
  if (!pi.special_intervals().empty()) {
    os << "special_intervals: ";
    bool first = true;
    for (const auto& s : pi.special_intervals()) {
      os << (first ? "" : ", ") << format_qnum(s.lo) << " .. " << format_qnum(s.hi);
      first = false;
    }
    os << "\n";
  }
  os << "# x | left | value | right\n";
  for (const auto& r : pi.rows()) {
    os << format_qnum(r.x) << " | " << format_qnum(r.left) << " | " << format_qnum(r.value) << " | "
       << format_qnum(r.right) << "\n";
  }
  return os.str();
}

PwlFunction read_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_function(buf.str());
}

void write_function_file(const std::string& path, const PwlFunction& pi) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_function(pi);
}

PwlFunction load_function(const std::string& name_or_path) {
  if (name_or_path == "psi") return psi_function();
  if (name_or_path == "psi_prime") return psi_prime_function();
  if (name_or_path == "kzh") return kzh_function();
  if (name_or_path == "kzh_lifted") return kzh_lifted().base();
  return read_function_file(name_or_path);
}

std::string faces_json(const DeltaComplex& dc, const std::vector<OpenInterval>& special) {
  ojson j;
  j["schema_version"] = 1;
  ojson bps = ojson::array();
  for (const auto& x : dc.complex().breakpoints()) bps.push_back(format_qnum(x));
  j["breakpoints"] = bps;
  ojson faces = ojson::array();
  for (const auto& F : dc.faces()) faces.push_back(face_entry(dc, F, special));
  j["faces"] = faces;
  return j.dump(2);
}

std::string additivity_json(const AdditivityReport& report, const std::vector<OpenInterval>& special) {
  const DeltaComplex& dc = report.complex;
  ojson j;
  j["schema_version"] = 1;
  ojson bps = ojson::array();
  for (const auto& x : dc.complex().breakpoints()) bps.push_back(format_qnum(x));
  j["breakpoints"] = bps;
  ojson faces = ojson::array();
  for (std::size_t i = 0; i < dc.size(); ++i) {
    ojson e = face_entry(dc, dc[i], special);
    e["class"] = to_string(report.classes[i]);
    ojson sl = ojson::array();
    for (const auto& s : report.slacks[i]) sl.push_back(format_qnum(s));
    e["slacks"] = sl;
    faces.push_back(e);
  }
  j["faces"] = faces;
  return j.dump(2);
}

std::vector<std::pair<Triple, FaceClass>> parse_additivity_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::pair<Triple, FaceClass>> out;
  for (const auto& e : j.at("faces")) {
    const auto cls = e.at("class").get<std::string>();
    FaceClass c;
    if (cls == "additive") {
      c = FaceClass::additive;
    } else if (cls == "limit_additive") {
      c = FaceClass::limit_additive;
    } else if (cls == "non_additive") {
      c = FaceClass::non_additive;
    } else {
      throw std::invalid_argument("unknown face class " + cls);
    }
    out.emplace_back(Triple{read_face(e.at("I")), read_face(e.at("J")), read_face(e.at("K"))}, c);
  }
  return out;
}

std::string covering_json(const CoveringResult& cov, const ComplexP& P) {
  ojson j;
  j["schema_version"] = 1;
  ojson comps = ojson::array();
  for (const auto& c : cov.components) {
    ojson e;
    ojson pieces = ojson::array();
    for (auto p : c.pieces) {
      const QNum lo = P.ext(p);
      const QNum hi = P.ext(p + 1);
      pieces.push_back({format_qnum(lo), format_qnum(hi)});
    }
    e["pieces"] = pieces;
    comps.push_back(e);
  }
  j["components"] = comps;
  ojson unc = ojson::array();
  for (const auto& u : cov.uncovered) unc.push_back({format_qnum(u.lo), format_qnum(u.hi)});
  j["uncovered"] = unc;
  return j.dump(2);
}

}  // namespace cgf
