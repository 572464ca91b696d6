#include "qpseudo/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qpseudo/error.hpp"
#include "qpseudo/named.hpp"

namespace qps {

using nlohmann::json;

std::string format_double(double v, int digits) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return {buf, end};
}

namespace {

std::string where(std::size_t r, std::size_t c) {
  return "row " + std::to_string(r) + ", column " + std::to_string(c);
}

json spec_json(const GridSpec& s) {
  return {{"x_min", s.x_min}, {"x_max", s.x_max}, {"y_min", s.y_min},
          {"y_max", s.y_max}, {"nx", s.nx},       {"ny", s.ny}};
}

json report_json(const CheckReport& r) {
  json j{{"name", r.name},         {"passed", r.passed}, {"max_residual", r.max_residual},
         {"tolerance", r.tolerance}, {"note", r.note},   {"witness", nullptr}};
  if (r.witness) {
    const Quaternion& q = r.witness->q;
    j["witness"] = {{"q", {q.w, q.x, q.y, q.z}}, {"values", r.witness->values}};
  }
  return j;
}

}  // namespace

QMatrix parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw ParseError("matrix JSON: expected an object with \"n\" and \"entries\"");
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0)
    throw ParseError("matrix JSON: \"n\" must be a positive integer");
  const auto n = doc["n"].get<std::size_t>();
  const json& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != n)
    throw ParseError("matrix JSON: \"entries\" must hold " + std::to_string(n) + " rows");

  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n)
      throw ParseError("matrix JSON: row " + std::to_string(r) + " must hold " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const json& e = rows[r][c];
      if (!e.is_array() || e.size() != 4)
        throw ParseError("matrix JSON: " + where(r, c) + ": expected [w, x, y, z]");
      double v[4];
      for (std::size_t k = 0; k < 4; ++k) {
        if (!e[k].is_number()) throw ParseError("matrix JSON: " + where(r, c) + ": component " + std::to_string(k) + " is not a number");
        v[k] = e[k].get<double>();
      }
      m(r, c) = {v[0], v[1], v[2], v[3]};
    }
  }
  return m;
}

std::string matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.n(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.n(); ++c) {
      const Quaternion& q = m(r, c);
      row.push_back({q.w, q.x, q.y, q.z});
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", m.n()}, {"entries", std::move(rows)}}.dump();
}

QMatrix resolve_matrix(const std::string& source) {
  if (is_named_matrix(source)) return named_matrix(source);
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return parse_matrix_json(source);
  std::ifstream in(source);
  if (!in) throw ParseError("cannot resolve matrix '" + source + "' (not a name, file or JSON document)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string field_to_csv(const ScalarField& f) {
  std::string out = "x,y,smin\n";
  for (std::size_t iy = 0; iy < f.spec.ny; ++iy)
    for (std::size_t ix = 0; ix < f.spec.nx; ++ix) {
      out += format_double(f.spec.x(ix));
      out += ',';
      out += format_double(f.spec.y(iy));
      out += ',';
      out += format_double(f.at(ix, iy));
      out += '\n';
    }
  return out;
}

std::string field_to_json(const ScalarField& f) {
  return json{{"spec", spec_json(f.spec)}, {"values", f.values}}.dump();
}

std::string contour_to_json(const ContourSet& c) {
  json lines = json::array();
  for (const auto& p : c.polylines) {
    json pts = json::array();
    for (const auto& pt : p.points) pts.push_back({pt.x, pt.y});
    lines.push_back({{"closed", p.closed}, {"points", std::move(pts)}});
  }
  return json{{"level", c.level}, {"spec", spec_json(c.spec)}, {"polylines", std::move(lines)}}.dump();
}

std::string contour_to_svg(const ContourSet& c) {
  const GridSpec& s = c.spec;
  const auto ux = [&](double x) { return format_double((x - s.x_min) / (s.x_max - s.x_min), 9); };
  const auto uy = [&](double y) { return format_double((s.y_max - y) / (s.y_max - s.y_min), 9); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"800\" height=\"800\""
     << " preserveAspectRatio=\"none\">\n";
  os << "<title>level " << format_double(c.level) << " on [" << format_double(s.x_min) << ", "
     << format_double(s.x_max) << "] x [" << format_double(s.y_min) << ", " << format_double(s.y_max)
     << "]</title>\n";
  if (s.y_min <= 0.0 && s.y_max >= 0.0)
    os << "<line x1=\"0\" y1=\"" << uy(0.0) << "\" x2=\"1\" y2=\"" << uy(0.0)
       << "\" stroke=\"#888\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
  for (const auto& p : c.polylines) {
    os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      if (i) os << ' ';
      os << ux(p.points[i].x) << ',' << uy(p.points[i].y);
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string spectrum_to_text(const SSpectrum& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    if (i) out += ", ";
    out += "(" + format_double(s.classes[i].re(), 15) + ", " + format_double(s.classes[i].im_mag(), 15) + ")";
  }
  return out + "]";
}

std::string spectrum_to_json(const SSpectrum& s) {
  json arr = json::array();
  for (const auto& c : s.classes) arr.push_back({{"re", c.re()}, {"im_mag", c.im_mag()}});
  return json{{"classes", std::move(arr)}}.dump();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

}  // namespace qps
