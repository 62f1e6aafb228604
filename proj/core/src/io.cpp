#include "lober/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lober/errors.hpp"
#include "lober/winding.hpp"

namespace lober::io {
namespace fs = std::filesystem;
namespace {

std::string upper_prefix(const std::string& s, std::size_t n) {
  std::string out = s.substr(0, n);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with_keyword(const std::string& line, const char* keyword) {
  const std::size_t n = std::char_traits<char>::length(keyword);
  return line.size() >= n && upper_prefix(line, n) == keyword &&
         (line.size() == n || !std::isalnum(static_cast<unsigned char>(line[n])));
}

/// Text after `KEYWORD` and an optional '='.
std::string keyword_value(const std::string& line, std::size_t keyword_len) {
  std::string rest = trim(line.substr(keyword_len));
  if (!rest.empty() && rest.front() == '=') rest = trim(rest.substr(1));
  return rest;
}

std::vector<std::string> parse_variables(std::string names_text, std::size_t line_no) {
  for (std::size_t pos; (pos = names_text.find("''")) != std::string::npos;) {
    names_text.replace(pos, 2, "\"");
  }
  std::vector<std::string> names;
  if (names_text.find('"') != std::string::npos) {
    std::size_t pos = 0;
    while ((pos = names_text.find('"', pos)) != std::string::npos) {
      const std::size_t end = names_text.find('"', pos + 1);
      if (end == std::string::npos) throw FormatError("unterminated variable name", line_no);
      names.push_back(names_text.substr(pos + 1, end - pos - 1));
      pos = end + 1;
    }
  } else {
    std::replace(names_text.begin(), names_text.end(), ',', ' ');
    std::istringstream in(names_text);
    for (std::string name; in >> name;) names.push_back(name);
  }
  if (names.size() != 2) {
    throw FormatError("expected exactly two variables, found " + std::to_string(names.size()),
                      line_no);
  }
  return names;
}

std::string zone_title_of(const std::string& record) {
  std::string upper = record;
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::size_t pos = 0;
  while ((pos = upper.find('T', pos)) != std::string::npos) {
    const bool boundary = pos == 0 || !std::isalnum(static_cast<unsigned char>(upper[pos - 1]));
    std::size_t eq = pos + 1;
    while (eq < upper.size() && (upper[eq] == ' ' || upper[eq] == '\t')) ++eq;
    if (boundary && eq < upper.size() && upper[eq] == '=') {
      std::size_t v = eq + 1;
      while (v < record.size() && (record[v] == ' ' || record[v] == '\t')) ++v;
      if (v < record.size() && record[v] == '"') {
        const std::size_t end = record.find('"', v + 1);
        return record.substr(v + 1, end == std::string::npos ? std::string::npos : end - v - 1);
      }
      const std::size_t end = record.find_first_of(" \t,", v);
      return record.substr(v, end == std::string::npos ? std::string::npos : end - v);
    }
    ++pos;
  }
  return {};
}

double parse_real(const std::string& token, std::size_t line_no) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw FormatError("not a number: '" + token + "'", line_no);
  }
  if (!std::isfinite(v)) throw FormatError("non-finite value '" + token + "'", line_no);
  return v;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

double relative(double err, double area, double fallback) {
  if (area > 0.0) return err / area;
  return fallback > 0.0 ? err / fallback : 0.0;
}

}  // namespace

CurveFile parse_curve_file(const std::string& text) {
  CurveFile file;
  bool have_variables = false;
  bool in_zone = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (starts_with_keyword(line, "TITLE")) {
      if (have_variables) throw FormatError("TITLE after VARIABLES", line_no);
      std::string t = keyword_value(line, 5);
      if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
      file.title = t;
      continue;
    }
    if (starts_with_keyword(line, "VARIABLES")) {
      if (have_variables) throw FormatError("repeated VARIABLES line", line_no);
      file.variables = parse_variables(keyword_value(line, 9), line_no);
      have_variables = true;
      continue;
    }
    if (starts_with_keyword(line, "ZONE")) {
      if (!have_variables) throw FormatError("ZONE before VARIABLES", line_no);
      if (in_zone || !file.rows.empty()) {
        file.warnings.push_back("line " + std::to_string(line_no) +
                                ": additional zone ignored; only the first zone is read");
        break;
      }
      file.zone_title = zone_title_of(line.substr(4));
      in_zone = true;
      continue;
    }
    if (!have_variables) throw FormatError("missing VARIABLES header", line_no);

    std::string row = line;
    std::replace(row.begin(), row.end(), ',', ' ');
    std::replace(row.begin(), row.end(), '\t', ' ');
    std::istringstream fields(row);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2) {
      throw FormatError("expected 2 values, found " + std::to_string(tokens.size()), line_no);
    }
    file.rows.push_back({parse_real(tokens[0], line_no), parse_real(tokens[1], line_no)});
  }
  if (!have_variables) throw FormatError("missing VARIABLES header", line_no == 0 ? 1 : line_no);
  return file;
}

CurveFile read_curve_file(const fs::path& path) { return parse_curve_file(slurp(path)); }

ClosedCurve to_curve(CurveFile file, const std::string& source) {
  if (file.rows.size() < 3) {
    throw InvalidCurveError(source + ": a closed curve needs at least 3 points, found " +
                            std::to_string(file.rows.size()));
  }
  try {
    return ClosedCurve(std::move(file.rows));
  } catch (const Error& e) {
    throw InvalidCurveError(source + ": " + e.what());
  }
}

ClosedCurve read_curve(const fs::path& path) {
  return to_curve(read_curve_file(path), path.string());
}

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw IoError("number formatting failed");
  return std::string(buf.data(), ptr);
}

std::string format_points(std::span<const Point2> points, const std::string& zone_title) {
  std::string out = "VARIABLES = \"x\" \"y\"\nZONE T=\"" + zone_title + "\"\n";
  out.reserve(out.size() + points.size() * 40);
  for (const Point2& p : points) {
    out += format_number(p.x);
    out += ' ';
    out += format_number(p.y);
    out += '\n';
  }
  return out;
}

void write_curve(const fs::path& path, const ClosedCurve& curve, const std::string& zone_title) {
  AtomicFileSet set;
  set.add(path, format_points(curve.vertices(), zone_title));
  set.commit();
}

ResultLine result_line(const LobeReport& report) {
  ResultLine line;
  const double delta = report.error_estimate;
  auto reported = [&](double a) { return a <= delta ? 0.0 : a; };
  line.a1_minus_a2 = reported(report.a1_minus_a2);
  line.a2_minus_a1 = reported(report.a2_minus_a1);

  double err1 = 0.0;
  double err2 = 0.0;
  if (report.method == AreaMethod::winding) {
    err1 = err2 = delta;
  } else if (report.cross_check_a1_minus_a2 && report.cross_check_a2_minus_a1) {
    err1 = std::abs(*report.cross_check_a1_minus_a2);
    err2 = std::abs(*report.cross_check_a2_minus_a1);
  }
  line.rel_err_a1_minus_a2 = relative(err1, line.a1_minus_a2, report.area_c1);
  line.rel_err_a2_minus_a1 = relative(err2, line.a2_minus_a1, report.area_c2);
  return line;
}

std::string format_result(const ResultLine& line) {
  return format_number(line.a1_minus_a2) + ' ' + format_number(line.a2_minus_a1) + ' ' +
         format_number(line.rel_err_a1_minus_a2) + ' ' + format_number(line.rel_err_a2_minus_a1) +
         '\n';
}

void write_result(const fs::path& path, const LobeReport& report) {
  AtomicFileSet set;
  set.add(path, format_result(result_line(report)));
  set.commit();
}

void AtomicFileSet::add(fs::path path, std::string content) {
  files_.emplace_back(std::move(path), std::move(content));
}

void AtomicFileSet::commit() {
  std::vector<fs::path> temps;
  temps.reserve(files_.size());
  auto discard = [&] {
    std::error_code ec;
    for (const fs::path& t : temps) fs::remove(t, ec);
  };
  try {
    for (const auto& [path, content] : files_) {
      fs::path tmp = path;
      tmp += ".tmp" + std::to_string(::getpid());
      temps.push_back(tmp);
      write_file(tmp, content);
    }
    for (std::size_t i = 0; i < files_.size(); ++i) {
      std::error_code ec;
      fs::rename(temps[i], files_[i].first, ec);
      if (ec) throw IoError("cannot rename to " + files_[i].first.string() + ": " + ec.message());
    }
  } catch (...) {
    discard();
    throw;
  }
  files_.clear();
}

void add_artifacts(AtomicFileSet& set, const fs::path& dir, const IntersectionSet& points,
                   const ClosedCurve& c1, const ClosedCurve& c2) {
  std::vector<Point2> along1;
  std::vector<Point2> along2;
  for (std::size_t k : points.by_c1) along1.push_back(points.points[k].point);
  for (std::size_t k : points.by_c2) along2.push_back(points.points[k].point);

  auto split = [](const ClosedCurve& curve, const ClosedCurve& other) {
    const WindingIndex index(other);
    std::vector<Point2> inside;
    std::vector<Point2> outside;
    for (const Point2& v : curve.vertices()) {
      const auto ind = index.indicator(v);
      if (!ind) continue;
      (*ind < 0 ? inside : outside).push_back(v);
    }
    return std::pair{inside, outside};
  };
  const auto [in1, out1] = split(c1, c2);
  const auto [in2, out2] = split(c2, c1);

  set.add(dir / "c10.dat", format_points(along1, "C1 crossings"));
  set.add(dir / "c20.dat", format_points(along2, "C2 crossings"));
  set.add(dir / "c11.dat", format_points(in1, "C1 inside C2"));
  set.add(dir / "c22.dat", format_points(in2, "C2 inside C1"));
  set.add(dir / "c12.dat", format_points(out1, "C1 outside C2"));
  set.add(dir / "c21.dat", format_points(out2, "C2 outside C1"));
}

void write_run_outputs(const fs::path& rslt_path, const fs::path& artifacts_dir,
                       const LobeReport& report, const IntersectionSet& points,
                       const ClosedCurve& c1, const ClosedCurve& c2) {
  AtomicFileSet set;
  set.add(rslt_path, format_result(result_line(report)));
  add_artifacts(set, artifacts_dir, points, c1, c2);
  set.commit();
}

void write_lobe_plots(const fs::path& dir, const LobeReport& report,
                      const IntersectionSet& points, const ClosedCurve& c1_ccw,
                      const ClosedCurve& c2_ccw) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  AtomicFileSet set;
  if (!points.empty()) {
    for (const auto& [variant, classes, prefix] :
         {std::tuple{Variant::a1_minus_a2, &report.classes, "lobe_a1_"},
          std::tuple{Variant::a2_minus_a1, &report.swapped_classes, "lobe_a2_"}}) {
      const SuccessorMap sigma = successor_map(points, variant);
      for (std::size_t k = 0; k < classes->size(); ++k) {
        const EquivalenceClass& cls = (*classes)[k];
        const std::vector<Point2> loop = class_boundary(cls, sigma, points, c1_ccw, c2_ccw);
        set.add(dir / (prefix + std::to_string(k) + ".dat"),
                format_points(loop, "area " + format_number(cls.lobe_area)));
      }
    }
  }
  set.commit();
}

}  // namespace lober::io
