#ifndef MINK3_IO_HPP
#define MINK3_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mink3/polytope.hpp"

namespace mink3 {

/// Textual polytope format, version 1. Vertices are the source of truth;
/// the H-representation and lattice are recomputed on load.
///
///   polytope v1
///   field 3
///   name cube
///   V 1 0 0
///   V -1/2 1/2*sqrt(3) 0
///
/// Lines starting with '#' and blank lines are ignored.
void write_polytope(std::ostream& os, const Polytope3& p);
Polytope3 read_polytope(std::istream& is);

/// Point configuration format, version 1 ("points v1", "P x y z" lines).
void write_points(std::ostream& os, const std::vector<Point3>& pts, const std::string& name = "");
std::vector<Point3> read_points(std::istream& is);

std::string polytope_to_string(const Polytope3& p);
Polytope3 polytope_from_string(const std::string& text);
std::string points_to_string(const std::vector<Point3>& pts, const std::string& name = "");
std::vector<Point3> points_from_string(const std::string& text);

Polytope3 load_polytope_file(const std::string& path);
std::vector<Point3> load_points_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

/// Largest quadratic field index appearing in the data (1 when rational).
unsigned field_of(const std::vector<Point3>& pts);

/// Parse one point given as three whitespace-separated scalars.
Point3 parse_point3(const std::string& text);

}  // namespace mink3

#endif  // MINK3_IO_HPP
