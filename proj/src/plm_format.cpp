#include "ivdyn/plm_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ivdyn/errors.hpp"

namespace ivdyn {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Rational parse_at(const std::string& token, std::size_t line) {
  try {
    return Rational::parse(token);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

MapModel parse_plm(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::string kind;
  std::optional<ClosedInterval> domain;
  std::vector<Breakpoint> points;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = tokens(raw);
    if (tok.empty()) continue;

    if (kind.empty()) {
      if (tok.size() != 1 || (tok[0] != "plmap" && tok[0] != "staircase")) {
        throw ParseError("expected 'plmap' or 'staircase' header", line_no);
      }
      kind = tok[0];
      continue;
    }
    if (kind == "staircase") throw ParseError("staircase maps take no further lines", line_no);

    if (!domain) {
      if (tok.size() != 3 || tok[0] != "domain") throw ParseError("expected 'domain <lo> <hi>'", line_no);
      ClosedInterval d{parse_at(tok[1], line_no), parse_at(tok[2], line_no)};
      if (!(d.lo < d.hi)) throw ParseError("domain must satisfy lo < hi", line_no);
      domain = std::move(d);
      continue;
    }
    if (tok.size() != 2) throw ParseError("expected '<x> <y>' breakpoint", line_no);
    Breakpoint b{parse_at(tok[0], line_no), parse_at(tok[1], line_no)};
    if (!points.empty() && !(points.back().x < b.x)) {
      throw ParseError("breakpoint x=" + b.x.str() + " does not strictly increase", line_no);
    }
    if (!domain->contains(b.x)) throw ParseError("breakpoint x=" + b.x.str() + " outside domain", line_no);
    if (!domain->contains(b.y)) throw ParseError("breakpoint y=" + b.y.str() + " escapes domain", line_no);
    points.push_back(std::move(b));
  }

  if (kind.empty()) throw ParseError("empty map file");
  if (kind == "staircase") return MapModel(StaircaseMap{}, std::move(name));
  if (!domain) throw ParseError("missing domain line");
  try {
    return MapModel(PLMap(*domain, std::move(points)), std::move(name));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), line_no);
  }
}

std::string print_plm(const MapModel& m) {
  if (m.is_staircase()) return "staircase\n";
  const PLMap& pl = m.as_pl();
  std::string out = "plmap\ndomain " + pl.domain().lo.str() + " " + pl.domain().hi.str() + "\n";
  for (const auto& b : pl.breakpoints()) out += b.x.str() + " " + b.y.str() + "\n";
  return out;
}

MapModel load_plm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_plm(buf.str(), path.stem().string());
}

MapModel resolve_map(const std::string& spec) {
  std::string body = spec;
  const std::string prefix = "builtin:";
  const bool explicit_builtin = body.rfind(prefix, 0) == 0;
  if (explicit_builtin) body = body.substr(prefix.size());
  if (!explicit_builtin && std::filesystem::exists(spec)) return load_plm(spec);

  std::string name = body;
  std::optional<Rational> param;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    name = body.substr(0, colon);
    param = Rational::parse(body.substr(colon + 1));
  }
  for (const auto& known : builtin_names()) {
    if (name == known || name == "staircase") return builtin(name, param);
  }
  if (explicit_builtin) throw ValidationError("unknown builtin map '" + name + "'");
  throw ParseError("no map file or builtin named '" + spec + "'");
}

}  // namespace ivdyn
