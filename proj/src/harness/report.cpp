#include "hypersat/report.hpp"

#include <charconv>
#include <sstream>

#include "hypersat/error.hpp"

namespace hypersat {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <class T>
T parse_field(std::string_view s, std::size_t line) {
  T value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad CSV field '" + std::string(s) + "'", line);
  }
  return value;
}

constexpr std::string_view kCsvHeader = "point,trial,seed,edges,copies,ratio,status";

}  // namespace

json to_json(const ExperimentReport& r) {
  json params = {
      {"family", r.parameters.family},     {"n", r.parameters.n},
      {"r", r.parameters.r},               {"k", r.parameters.k},
      {"grid_kind", r.parameters.grid_kind}, {"grid", r.parameters.grid},
      {"trials", r.parameters.trials},     {"seed", r.parameters.seed},
      {"work_cap", r.parameters.work_cap},
  };
  json trials = json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"point", t.point},
                      {"trial", t.trial},
                      {"seed", t.seed},
                      {"edges", t.edges},
                      {"copies", t.copies},
                      {"ratio", t.ratio},
                      {"status", t.status}});
  }
  json points = json::array();
  for (const auto& p : r.points) {
    points.push_back({{"value", p.value},
                      {"completed", p.completed},
                      {"mean_edges", p.mean_edges},
                      {"mean", p.mean},
                      {"variance", p.variance},
                      {"reference", optional_number(p.reference)},
                      {"ratio", p.ratio},
                      {"below_threshold", p.below_threshold},
                      {"capped", p.capped}});
  }
  json audit = nullptr;
  if (r.audit) {
    audit = {{"suite", r.audit->suite},
             {"instances", r.audit->instances},
             {"passed", r.audit->passed},
             {"witness", r.audit->witness ? *r.audit->witness : json(nullptr)}};
  }
  return {{"schema", r.schema},
          {"kind", r.kind},
          {"note", r.note},
          {"parameters", params},
          {"points", points},
          {"c_hat", optional_number(r.c_hat)},
          {"c_hat_positive", r.c_hat_positive},
          {"monotone", r.monotone},
          {"spot_checked", r.spot_checked},
          {"spot_failed", r.spot_failed},
          {"reference", optional_number(r.reference)},
          {"z_score", optional_number(r.z_score)},
          {"audit", audit},
          {"trials", trials}};
}

ExperimentReport report_from_json(const json& j) {
  try {
    ExperimentReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != kReportSchema) {
      throw Error(ErrorCode::ParseError, "unsupported report schema " + std::to_string(r.schema));
    }
    r.kind = j.at("kind").get<std::string>();
    r.note = j.at("note").get<std::string>();
    const auto& p = j.at("parameters");
    r.parameters.family = p.at("family").get<std::string>();
    r.parameters.n = p.at("n").get<std::size_t>();
    r.parameters.r = p.at("r").get<int>();
    r.parameters.k = p.at("k").get<int>();
    r.parameters.grid_kind = p.at("grid_kind").get<std::string>();
    r.parameters.grid = p.at("grid").get<std::vector<double>>();
    r.parameters.trials = p.at("trials").get<std::size_t>();
    r.parameters.seed = p.at("seed").get<std::uint64_t>();
    r.parameters.work_cap = p.at("work_cap").get<std::uint64_t>();
    for (const auto& t : j.at("trials")) {
      TrialRecord x;
      x.point = t.at("point").get<std::size_t>();
      x.trial = t.at("trial").get<std::size_t>();
      x.seed = t.at("seed").get<std::uint64_t>();
      x.edges = t.at("edges").get<std::size_t>();
      x.copies = t.at("copies").get<std::uint64_t>();
      x.ratio = t.at("ratio").get<double>();
      x.status = t.at("status").get<std::string>();
      r.trials.push_back(std::move(x));
    }
    for (const auto& q : j.at("points")) {
      PointSummary x;
      x.value = q.at("value").get<double>();
      x.completed = q.at("completed").get<std::size_t>();
      x.mean_edges = q.at("mean_edges").get<double>();
      x.mean = q.at("mean").get<double>();
      x.variance = q.at("variance").get<double>();
      x.reference = read_optional(q, "reference");
      x.ratio = q.at("ratio").get<double>();
      x.below_threshold = q.at("below_threshold").get<bool>();
      x.capped = q.at("capped").get<std::size_t>();
      r.points.push_back(std::move(x));
    }
    r.c_hat = read_optional(j, "c_hat");
    r.c_hat_positive = j.at("c_hat_positive").get<bool>();
    r.monotone = j.at("monotone").get<bool>();
    r.spot_checked = j.at("spot_checked").get<std::size_t>();
    r.spot_failed = j.at("spot_failed").get<std::size_t>();
    r.reference = read_optional(j, "reference");
    r.z_score = read_optional(j, "z_score");
    const auto& a = j.at("audit");
    if (!a.is_null()) {
      AuditOutcome o;
      o.suite = a.at("suite").get<std::string>();
      o.instances = a.at("instances").get<std::size_t>();
      o.passed = a.at("passed").get<std::size_t>();
      if (!a.at("witness").is_null()) o.witness = a.at("witness");
      r.audit = std::move(o);
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string trials_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& t : report.trials) {
    out << t.point << ',' << t.trial << ',' << t.seed << ',' << t.edges << ',' << t.copies << ','
        << shortest(t.ratio) << ',' << t.status << '\n';
  }
  return out.str();
}

std::vector<TrialRecord> trials_from_csv(std::string_view csv) {
  std::vector<TrialRecord> out;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const auto eol = csv.find('\n');
    std::string_view line = csv.substr(0, eol);
    csv = eol == std::string_view::npos ? std::string_view{} : csv.substr(eol + 1);
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) throw Error(ErrorCode::ParseError, "unexpected CSV header", 1);
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::size_t at = 0;
    while (true) {
      const auto comma = line.find(',', at);
      f.push_back(line.substr(at, comma == std::string_view::npos ? line.npos : comma - at));
      if (comma == std::string_view::npos) break;
      at = comma + 1;
    }
    if (f.size() != 7) throw Error(ErrorCode::ParseError, "expected 7 CSV fields", line_no);
    TrialRecord t;
    t.point = parse_field<std::size_t>(f[0], line_no);
    t.trial = parse_field<std::size_t>(f[1], line_no);
    t.seed = parse_field<std::uint64_t>(f[2], line_no);
    t.edges = parse_field<std::size_t>(f[3], line_no);
    t.copies = parse_field<std::uint64_t>(f[4], line_no);
    t.ratio = parse_field<double>(f[5], line_no);
    t.status = std::string(f[6]);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hypersat
