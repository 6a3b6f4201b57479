#include "cforge/serialize.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "cforge/errors.hpp"
#include "schemas.hpp"

namespace cforge::io {

namespace {

json real_to_json(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

double real_from_json(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_real(v.get<std::string>());
  throw FormatError("expected a number, got " + v.dump());
}

json opt_int_to_json(const std::optional<std::int64_t>& x) { return x ? json(*x) : json(nullptr); }

std::optional<std::int64_t> opt_int_from_json(const json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<std::int64_t>();
}

json face_list(const std::vector<Face>& faces) {
  json out = json::array();
  for (const Face& f : faces) out.push_back(std::vector<Vertex>(f.begin(), f.end()));
  return out;
}

std::vector<Face> faces_from(const json& list) {
  std::vector<Face> faces;
  for (const auto& item : list) {
    try {
      faces.push_back(Face::make(item.get<std::vector<Vertex>>()));
    } catch (const Error& e) {
      throw FormatError(std::string("bad face ") + item.dump() + ": " + e.what());
    }
  }
  return faces;
}

TerminationCause termination_from(const std::string& s) {
  if (s == to_string(TerminationCause::kCandidatesExhausted)) return TerminationCause::kCandidatesExhausted;
  if (s == to_string(TerminationCause::kStepLimit)) return TerminationCause::kStepLimit;
  throw FormatError("unknown termination cause '" + s + "'");
}

json record_to_json(const TrajectoryRecord& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    json z = json::array();
    for (const auto& v : s.z) z.push_back(v ? real_to_json(*v) : json(nullptr));
    samples.push_back({{"id", s.id},
                       {"size", s.size},
                       {"y_observed", s.y_observed},
                       {"y_predicted", real_to_json(s.y_predicted)},
                       {"w", s.w},
                       {"z", z}});
  }
  return {{"step", r.step},
          {"t", real_to_json(r.t)},
          {"p", real_to_json(r.p)},
          {"band", real_to_json(r.band)},
          {"terminal_y", r.terminal_y},
          {"terminal_size", r.terminal_size},
          {"terminal_predicted", real_to_json(r.terminal_predicted)},
          {"samples", samples}};
}

TrajectoryRecord record_from_json(const json& j) {
  TrajectoryRecord r;
  r.step = j.at("step").get<std::int64_t>();
  r.t = real_from_json(j.at("t"));
  r.p = real_from_json(j.at("p"));
  r.band = real_from_json(j.at("band"));
  r.terminal_y = j.at("terminal_y").get<std::size_t>();
  r.terminal_size = j.at("terminal_size").get<std::size_t>();
  r.terminal_predicted = real_from_json(j.at("terminal_predicted"));
  for (const auto& sj : j.at("samples")) {
    TrackedSample s;
    s.id = sj.at("id").get<int>();
    s.size = sj.at("size").get<std::size_t>();
    s.y_observed = sj.at("y_observed").get<std::size_t>();
    s.y_predicted = real_from_json(sj.at("y_predicted"));
    s.w = sj.at("w").get<std::vector<std::uint64_t>>();
    for (const auto& z : sj.at("z")) {
      s.z.push_back(z.is_null() ? std::nullopt : std::optional<double>(real_from_json(z)));
    }
    r.samples.push_back(std::move(s));
  }
  return r;
}

json tracked_to_json(const std::vector<TrackedComplex>& tracked) {
  json out = json::array();
  for (std::size_t i = 0; i < tracked.size(); ++i) {
    out.push_back({{"id", i},
                   {"label", tracked[i].label},
                   {"faces", face_list(tracked[i].faces)},
                   {"vertices", tracked[i].vertices}});
  }
  return out;
}

std::vector<TrackedComplex> tracked_from_json(const json& list) {
  std::vector<TrackedComplex> out;
  for (const auto& item : list) {
    out.push_back(TrackedComplex{item.at("label").get<std::string>(), faces_from(item.at("faces")),
                                 item.at("vertices").get<std::vector<Vertex>>()});
  }
  return out;
}

/// Fields shared by both report kinds.
template <typename Report>
json common_fields(const Report& r, const char* kind) {
  json records = json::array();
  for (const auto& rec : r.trajectory) records.push_back(record_to_json(rec));
  json checks = json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  return {{"kind", kind},
          {"n", r.n},
          {"d", r.d},
          {"seed", r.seed},
          {"steps", r.steps},
          {"termination", to_string(r.termination)},
          {"first_small_step", opt_int_to_json(r.first_small_step)},
          {"phi", r.phi},
          {"image", complex_to_json(r.image, r.d)},
          {"closed_faces", r.closed_faces},
          {"diameter", r.diameter},
          {"first_band_exit_step", opt_int_to_json(r.first_band_exit_step)},
          {"tracked", tracked_to_json(r.tracked)},
          {"trajectory", records},
          {"checks", checks},
          {"passed", r.passed()}};
}

template <typename Report>
void read_common_fields(const json& j, Report& r) {
  r.n = j.at("n").get<Vertex>();
  r.d = j.at("d").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.steps = j.at("steps").get<std::int64_t>();
  r.termination = termination_from(j.at("termination").get<std::string>());
  r.first_small_step = opt_int_from_json(j.at("first_small_step"));
  r.phi = j.at("phi").get<std::vector<Vertex>>();
  r.image = complex_from_json(j.at("image")).complex;
  r.closed_faces = j.at("closed_faces").get<std::uint64_t>();
  r.diameter = j.at("diameter").get<std::int64_t>();
  r.first_band_exit_step = opt_int_from_json(j.at("first_band_exit_step"));
  r.tracked = tracked_from_json(j.at("tracked"));
  for (const auto& rec : j.at("trajectory")) r.trajectory.push_back(record_from_json(rec));
  for (const auto& item : j.at("checks").items()) r.checks[item.key()] = item.value().template get<bool>();
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

json complex_to_json(const SimplicialComplex& complex, int d) {
  return {{"n", complex.n()}, {"d", d}, {"facets", face_list(complex.facets())}};
}

ComplexDocument complex_from_json(const json& doc) {
  validate(doc, DocumentKind::kComplex);
  return guarded([&] {
    auto facets = faces_from(doc.at("facets"));
    const auto n = doc.at("n").get<Vertex>();
    try {
      return ComplexDocument{SimplicialComplex(n, std::move(facets)), doc.at("d").get<int>()};
    } catch (const InvalidParams& e) {
      throw FormatError(e.what());
    }
  });
}

json report_to_json(const corridor::RunReport& r) {
  json j = common_fields(r, "corridor");
  j["induced_path"] = r.induced_path;
  j["volume_bound"] = real_to_json(r.volume_bound);
  return j;
}

json report_to_json(const pm::RunReport& r) {
  json j = common_fields(r, "pm");
  j["mapped"] = r.mapped;
  j["f_vector"] = r.f_vector.counts;
  j["pseudomanifold"] = r.pseudomanifold;
  j["diameter_lower"] = real_to_json(r.diameter_lower);
  j["cs_upper"] = r.cs_upper;
  j["ridge_bound"] = real_to_json(r.ridge_bound);
  j["connectivity"] = opt_int_to_json(r.connectivity);
  return j;
}

corridor::RunReport corridor_report_from_json(const json& doc) {
  validate(doc, DocumentKind::kCorridorReport);
  return guarded([&] {
    corridor::RunReport r;
    read_common_fields(doc, r);
    r.induced_path = doc.at("induced_path").get<bool>();
    r.volume_bound = real_from_json(doc.at("volume_bound"));
    return r;
  });
}

pm::RunReport pm_report_from_json(const json& doc) {
  validate(doc, DocumentKind::kPmReport);
  return guarded([&] {
    pm::RunReport r;
    read_common_fields(doc, r);
    r.mapped = doc.at("mapped").get<std::int64_t>();
    r.f_vector.counts = doc.at("f_vector").get<std::vector<std::uint64_t>>();
    r.pseudomanifold = doc.at("pseudomanifold").get<bool>();
    r.diameter_lower = real_from_json(doc.at("diameter_lower"));
    r.cs_upper = doc.at("cs_upper").get<std::int64_t>();
    r.ridge_bound = real_from_json(doc.at("ridge_bound"));
    r.connectivity = opt_int_from_json(doc.at("connectivity"));
    return r;
  });
}

const json& schema(DocumentKind kind) {
  static const json complex = json::parse(detail::kComplexSchema);
  static const json corridor = json::parse(detail::kCorridorReportSchema);
  static const json pm = json::parse(detail::kPmReportSchema);
  switch (kind) {
    case DocumentKind::kComplex:
      return complex;
    case DocumentKind::kCorridorReport:
      return corridor;
    case DocumentKind::kPmReport:
      return pm;
  }
  return complex;
}

namespace {

bool has_type(const json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  return false;
}

void check_node(const json& v, const json& s, const std::string& path, std::vector<std::string>& out) {
  if (s.contains("type")) {
    const json& t = s.at("type");
    bool ok = false;
    if (t.is_array()) {
      for (const auto& each : t) ok = ok || has_type(v, each.get<std::string>());
    } else {
      ok = has_type(v, t.get<std::string>());
    }
    if (!ok) {
      out.push_back(path + ": expected type " + t.dump() + ", got " + v.type_name());
      return;
    }
  }
  if (s.contains("enum")) {
    const auto& options = s.at("enum");
    if (std::find(options.begin(), options.end(), v) == options.end()) {
      out.push_back(path + ": value " + v.dump() + " not in " + options.dump());
    }
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s.at("minimum").get<double>()) {
    out.push_back(path + ": " + v.dump() + " below minimum " + s.at("minimum").dump());
  }
  if (v.is_object()) {
    if (s.contains("required")) {
      for (const auto& key : s.at("required")) {
        if (!v.contains(key.get<std::string>())) out.push_back(path + ": missing '" + key.get<std::string>() + "'");
      }
    }
    if (s.contains("properties")) {
      for (const auto& [key, sub] : s.at("properties").items()) {
        if (v.contains(key)) check_node(v.at(key), sub, path + "/" + key, out);
      }
    }
  }
  if (v.is_array() && s.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) check_node(v[i], s.at("items"), path + "/" + std::to_string(i), out);
  }
}

}  // namespace

std::vector<std::string> schema_violations(const json& doc, const json& schema_doc) {
  std::vector<std::string> out;
  check_node(doc, schema_doc, "", out);
  return out;
}

void validate(const json& doc, DocumentKind kind) {
  const auto problems = schema_violations(doc, schema(kind));
  if (problems.empty()) return;
  std::string message = schema(kind).value("title", "document") + " does not match its schema:";
  for (std::size_t i = 0; i < problems.size() && i < 5; ++i) message += "\n  " + problems[i];
  if (problems.size() > 5) message += "\n  ... (" + std::to_string(problems.size() - 5) + " more)";
  throw FormatError(message);
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

double parse_real(const std::string& text) {
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  if (text == "nan") return std::nan("");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) throw FormatError("not a number: '" + text + "'");
  return v;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::uint64_t parse_count(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError("not a count: '" + text + "'");
  }
  return std::stoull(text);
}

}  // namespace

std::string trajectory_csv(const std::vector<TrajectoryRecord>& records, int period) {
  std::ostringstream out;
  out << "step,t,p,A_id,size_A,Y_obs,Y_pred,band";
  for (int j = 0; j < period; ++j) out << ",W_" << j;
  for (int j = 0; j < period; ++j) out << ",Z_" << j;
  out << '\n';
  for (const auto& r : records) {
    const std::string prefix = std::to_string(r.step) + "," + format_real(r.t) + "," + format_real(r.p) + ",";
    for (const auto& s : r.samples) {
      if (s.w.size() != static_cast<std::size_t>(period) || s.z.size() != static_cast<std::size_t>(period)) {
        throw InvalidParams("sample width does not match period " + std::to_string(period));
      }
      out << prefix << s.id << ',' << s.size << ',' << s.y_observed << ',' << format_real(s.y_predicted) << ','
          << format_real(r.band);
      for (auto w : s.w) out << ',' << w;
      for (const auto& z : s.z) out << ',' << (z ? format_real(*z) : "");
      out << '\n';
    }
    // The terminal-face row carries no W/Z columns.
    out << prefix << "terminal," << r.terminal_size << ',' << r.terminal_y << ',' << format_real(r.terminal_predicted) << ','
        << format_real(r.band);
    for (int j = 0; j < 2 * period; ++j) out << ',';
    out << '\n';
  }
  return out.str();
}

std::vector<TrajectoryRecord> parse_trajectory_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty trajectory file");
  const auto header = split_csv_line(line);
  if (header.size() < 8 || (header.size() - 8) % 2 != 0 || header[0] != "step" || header[3] != "A_id") {
    throw FormatError("unexpected trajectory header: " + line);
  }
  const std::size_t period = (header.size() - 8) / 2;
  std::vector<TrajectoryRecord> records;
  TrajectoryRecord current;
  bool open = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                        " cells, got " + std::to_string(cells.size()));
    }
    const auto step = static_cast<std::int64_t>(parse_count(cells[0]));
    if (!open) {
      current = TrajectoryRecord{};
      current.step = step;
      current.t = parse_real(cells[1]);
      current.p = parse_real(cells[2]);
      current.band = parse_real(cells[7]);
      open = true;
    } else if (step != current.step) {
      throw FormatError("line " + std::to_string(line_no) + ": record for step " + std::to_string(current.step) +
                        " has no terminal row");
    }
    if (cells[3] == "terminal") {
      current.terminal_size = parse_count(cells[4]);
      current.terminal_y = parse_count(cells[5]);
      current.terminal_predicted = parse_real(cells[6]);
      records.push_back(std::move(current));
      open = false;
      continue;
    }
    TrackedSample s;
    s.id = static_cast<int>(parse_count(cells[3]));
    s.size = parse_count(cells[4]);
    s.y_observed = parse_count(cells[5]);
    s.y_predicted = parse_real(cells[6]);
    for (std::size_t j = 0; j < period; ++j) s.w.push_back(parse_count(cells[8 + j]));
    for (std::size_t j = 0; j < period; ++j) {
      const auto& cell = cells[8 + period + j];
      s.z.push_back(cell.empty() ? std::nullopt : std::optional<double>(parse_real(cell)));
    }
    current.samples.push_back(std::move(s));
  }
  if (open) throw FormatError("trailing record without terminal row");
  return records;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("write failed for " + path);
}

}  // namespace cforge::io
