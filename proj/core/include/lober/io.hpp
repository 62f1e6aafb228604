#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lober/classes.hpp"
#include "lober/geometry.hpp"
#include "lober/intersect.hpp"

namespace lober::io {

/// Parsed Tecplot ASCII file (first zone only).
struct CurveFile {
  std::string title;
  std::vector<std::string> variables;
  std::string zone_title;
  std::vector<Point2> rows;
  std::vector<std::string> warnings;
};

/// Parses Tecplot ASCII text. Accepts `VARIABLES = "x" "y"`, the doubled
/// single-quote form `VARIABLES=''x''''y''`, an optional TITLE line and
/// optional ZONE records. Only the first zone is read; later zones add a
/// warning. Throws FormatError with the offending line number.
CurveFile parse_curve_file(const std::string& text);

CurveFile read_curve_file(const std::filesystem::path& path);

/// Builds the closed curve of a parsed file; `source` names it in errors.
ClosedCurve to_curve(CurveFile file, const std::string& source);

/// Reads a closed curve. Throws IoError, FormatError or InvalidCurveError.
ClosedCurve read_curve(const std::filesystem::path& path);

/// Shortest decimal string that reads back to exactly `v`.
std::string format_number(double v);

/// Tecplot text for a point list: header, zone record and one row per point.
std::string format_points(std::span<const Point2> points, const std::string& zone_title);

void write_curve(const std::filesystem::path& path, const ClosedCurve& curve,
                 const std::string& zone_title = "");

/// The four numbers of the result line.
struct ResultLine {
  double a1_minus_a2 = 0.0;
  double a2_minus_a1 = 0.0;
  double rel_err_a1_minus_a2 = 0.0;
  double rel_err_a2_minus_a1 = 0.0;
};

/// Result numbers for a report. Areas not above the error estimate are
/// reported as 0. Relative errors are delta / area for the winding method,
/// the class-vs-winding discrepancy / area when the class method ran with a
/// cross-check, and 0 otherwise. A zero area divides by the enclosed area of
/// its curve instead.
ResultLine result_line(const LobeReport& report);

std::string format_result(const ResultLine& line);

void write_result(const std::filesystem::path& path, const LobeReport& report);

/// Writes a group of files so that either all of them appear or none do:
/// every file goes to a temporary sibling first, then each is renamed over
/// its target.
class AtomicFileSet {
 public:
  void add(std::filesystem::path path, std::string content);
  void commit();

 private:
  std::vector<std::pair<std::filesystem::path, std::string>> files_;
};

/// Names of the six artifact files, in output order.
inline constexpr const char* kArtifactNames[] = {"c10.dat", "c20.dat", "c11.dat",
                                                 "c22.dat", "c12.dat", "c21.dat"};

/// Adds the six artifact files for dir to `set`: crossings in C1 and C2 order
/// (c10, c20), vertices of C1 inside / outside C2 (c11 / c12) and of C2
/// inside / outside C1 (c22 / c21). Vertices on the other curve are omitted
/// from the four partition files.
void add_artifacts(AtomicFileSet& set, const std::filesystem::path& dir,
                   const IntersectionSet& points, const ClosedCurve& c1, const ClosedCurve& c2);

/// Writes the result line and the six artifacts atomically.
void write_run_outputs(const std::filesystem::path& rslt_path,
                       const std::filesystem::path& artifacts_dir, const LobeReport& report,
                       const IntersectionSet& points, const ClosedCurve& c1,
                       const ClosedCurve& c2);

/// One Tecplot file per lobe loop, named lobe_a1_<k>.dat and lobe_a2_<k>.dat.
/// Curves and points must be those the report was computed from.
void write_lobe_plots(const std::filesystem::path& dir, const LobeReport& report,
                      const IntersectionSet& points, const ClosedCurve& c1_ccw,
                      const ClosedCurve& c2_ccw);

}  // namespace lober::io
