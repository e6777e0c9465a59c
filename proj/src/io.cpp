#include "mink3/io.hpp"

#include <fstream>
#include <sstream>

#include "mink3/errors.hpp"

namespace mink3 {

unsigned field_of(const std::vector<Point3>& pts) {
  unsigned d = 1;
  for (const Point3& p : pts)
    for (const Scalar* s : {&p.x, &p.y, &p.z}) {
      if (s->field() == 1) continue;
      if (d == 1) d = s->field();
      if (d != s->field()) throw FieldMismatch("mixed scalar fields in one point set");
    }
  return d;
}

namespace {

void write_header(std::ostream& os, const char* kind, const std::vector<Point3>& pts,
                  const std::string& name) {
  os << kind << " v1\n";
  os << "field " << field_of(pts) << "\n";
  if (!name.empty()) os << "name " << name << "\n";
}

struct ParsedFile {
  std::string kind;
  unsigned field = 1;
  std::string name;
  std::vector<Point3> pts;
};

ParsedFile parse_file(std::istream& is, const char* expect_kind, const char* point_tag) {
  ParsedFile out;
  std::string line;
  size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    const size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (!header_seen) {
      std::string version;
      ls >> version;
      if (tag != expect_kind || version != "v1")
        throw ParseError("expected '" + std::string(expect_kind) + " v1' header, got '" + line + "'");
      out.kind = tag;
      header_seen = true;
      continue;
    }
    if (tag == "field") {
      long d = -1;
      ls >> d;
      if (d <= 0 || !is_squarefree(static_cast<unsigned>(d)))
        throw ParseError("bad field index on line " + std::to_string(lineno));
      out.field = static_cast<unsigned>(d);
    } else if (tag == "name") {
      std::string rest;
      std::getline(ls, rest);
      const size_t ns = rest.find_first_not_of(" \t");
      out.name = ns == std::string::npos ? "" : rest.substr(ns);
    } else if (tag == point_tag) {
      std::string sx, sy, sz;
      ls >> sx >> sy >> sz;
      if (sz.empty()) throw ParseError("point line " + std::to_string(lineno) + " needs 3 scalars");
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens on line " + std::to_string(lineno));
      out.pts.push_back(Point3{Scalar::parse(sx), Scalar::parse(sy), Scalar::parse(sz)});
    } else {
      throw ParseError("unknown tag '" + tag + "' on line " + std::to_string(lineno));
    }
  }
  if (!header_seen) throw ParseError(std::string("missing '") + expect_kind + " v1' header");
  if (out.pts.empty()) throw ParseError("file contains no points");
  const unsigned actual = field_of(out.pts);
  if (actual != 1 && out.field != actual)
    throw ParseError("field header " + std::to_string(out.field) + " does not match data field " +
                     std::to_string(actual));
  return out;
}

}  // namespace

void write_polytope(std::ostream& os, const Polytope3& p) {
  write_header(os, "polytope", p.vertices, p.name);
  for (const Point3& v : p.vertices) os << "V " << v.x.str() << ' ' << v.y.str() << ' ' << v.z.str() << "\n";
}

Polytope3 read_polytope(std::istream& is) {
  ParsedFile f = parse_file(is, "polytope", "V");
  Polytope3 p = convex_hull(f.pts);
  p.name = f.name;
  return p;
}

void write_points(std::ostream& os, const std::vector<Point3>& pts, const std::string& name) {
  write_header(os, "points", pts, name);
  for (const Point3& v : pts) os << "P " << v.x.str() << ' ' << v.y.str() << ' ' << v.z.str() << "\n";
}

std::vector<Point3> read_points(std::istream& is) { return parse_file(is, "points", "P").pts; }

std::string polytope_to_string(const Polytope3& p) {
  std::ostringstream os;
  write_polytope(os, p);
  return os.str();
}

Polytope3 polytope_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_polytope(is);
}

std::string points_to_string(const std::vector<Point3>& pts, const std::string& name) {
  std::ostringstream os;
  write_points(os, pts, name);
  return os.str();
}

std::vector<Point3> points_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_points(is);
}

Polytope3 load_polytope_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open '" + path + "'");
  return read_polytope(is);
}

std::vector<Point3> load_points_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open '" + path + "'");
  return read_points(is);
}

void save_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot write '" + path + "'");
  os << content;
}

Point3 parse_point3(const std::string& text) {
  std::istringstream is(text);
  std::string sx, sy, sz;
  is >> sx >> sy >> sz;
  if (sz.empty()) throw ParseError("point needs 3 scalars: '" + text + "'");
  std::string extra;
  if (is >> extra) throw ParseError("too many tokens in point: '" + text + "'");
  return Point3{Scalar::parse(sx), Scalar::parse(sy), Scalar::parse(sz)};
}

}  // namespace mink3
