#include "finsum/report.hpp"

#include <cstdio>
#include <sstream>

namespace finsum {

namespace {

using nlohmann::json;

json int_to_json(const Int& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return json(static_cast<std::int64_t>(n.get_si()));
  return json(n.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  return Int(static_cast<long>(j.get<std::int64_t>()));
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_ms(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

std::string fmt_error(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string pair_text(const Int& h, const Int& k) { return "(" + h.get_str() + "," + k.get_str() + ")"; }

const char* kCsvHeader = "identity,h,k,lhs,rhs,pass\n";

void csv_row(std::ostringstream& os, const CheckReport& r) {
  os << r.id << ',' << r.h.get_str() << ',' << r.k.get_str() << ',' << r.lhs.str() << ',' << r.rhs.str() << ','
     << (r.pass ? "true" : "false") << '\n';
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Human: return "human";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "?";
}

json to_json(const CheckReport& report) {
  return json{{"id", report.id},
              {"h", int_to_json(report.h)},
              {"k", int_to_json(report.k)},
              {"lhs", report.lhs.str()},
              {"rhs", report.rhs.str()},
              {"pass", report.pass}};
}

CheckReport check_report_from_json(const json& j) {
  CheckReport r;
  r.id = j.at("id").get<std::string>();
  r.h = int_from_json(j.at("h"));
  r.k = int_from_json(j.at("k"));
  r.lhs = Rational::parse(j.at("lhs").get<std::string>());
  r.rhs = Rational::parse(j.at("rhs").get<std::string>());
  r.pass = j.at("pass").get<bool>();
  return r;
}

json to_json(const ScanReport& report, bool include_timing) {
  json failures = json::array();
  for (const CheckReport& f : report.failures) failures.push_back(to_json(f));
  json observations = json::object();
  for (const auto& [name, value] : report.observations) observations[name] = value;
  return json{{"id", report.id},
              {"mode", std::string(to_string(report.mode))},
              {"range",
               {{"h_min", report.range.h_min},
                {"h_max", report.range.h_max},
                {"k_min", report.range.k_min},
                {"k_max", report.range.k_max}}},
              {"checked", report.checked},
              {"failures", std::move(failures)},
              {"aborted", report.aborted},
              {"elapsed_ms", include_timing ? report.elapsed_ms : 0.0},
              {"observations", std::move(observations)}};
}

ScanReport scan_report_from_json(const json& j) {
  ScanReport r;
  r.id = j.at("id").get<std::string>();
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "law") {
    r.mode = IdentityMode::Law;
  } else if (mode == "conjecture") {
    r.mode = IdentityMode::Conjecture;
  } else {
    throw std::invalid_argument("unknown identity mode '" + mode + "'");
  }
  const json& range = j.at("range");
  r.range = {range.at("h_min").get<std::int64_t>(), range.at("h_max").get<std::int64_t>(),
             range.at("k_min").get<std::int64_t>(), range.at("k_max").get<std::int64_t>()};
  r.checked = j.at("checked").get<std::uint64_t>();
  for (const json& f : j.at("failures")) r.failures.push_back(check_report_from_json(f));
  r.aborted = j.at("aborted").get<bool>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  for (const auto& [name, value] : j.at("observations").items()) r.observations[name] = value.get<std::string>();
  return r;
}

json to_json(const SeriesResult& result) {
  return json{{"kind", std::string(to_string(result.kind))},
              {"h", int_to_json(result.h)},
              {"k", int_to_json(result.k)},
              {"approx", result.approx},
              {"exact", result.exact.str()},
              {"abs_error", result.abs_error},
              {"depth", result.depth}};
}

std::string render_checks(std::span<const CheckReport> reports, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const CheckReport& r : reports) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << kCsvHeader;
      for (const CheckReport& r : reports) csv_row(os, r);
      break;
    case OutputFormat::Human:
      for (const CheckReport& r : reports) {
        os << r.id << ' ' << pair_text(r.h, r.k) << ": " << (r.pass ? "pass" : "FAIL") << "  lhs=" << r.lhs.str()
           << "  rhs=" << r.rhs.str() << '\n';
      }
      break;
  }
  return os.str();
}

std::string render_scans(std::span<const ScanReport> reports, OutputFormat format, bool include_timing) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const ScanReport& r : reports) arr.push_back(to_json(r, include_timing));
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << kCsvHeader;
      for (const ScanReport& r : reports) {
        for (const CheckReport& f : r.failures) csv_row(os, f);
      }
      break;
    case OutputFormat::Human:
      for (const ScanReport& r : reports) {
        os << r.id << " [" << to_string(r.mode) << "]: " << r.failures.size() << " failures / " << r.checked
           << " checked";
        if (include_timing) os << " (" << fmt_ms(r.elapsed_ms) << " ms)";
        if (r.aborted) os << " -- stopped at first failure";
        os << '\n';
        for (const CheckReport& f : r.failures) {
          os << "  FAIL " << pair_text(f.h, f.k) << ": lhs=" << f.lhs.str() << " rhs=" << f.rhs.str() << '\n';
        }
        for (const auto& [name, value] : r.observations) os << "  observed " << name << ": " << value << '\n';
      }
      break;
  }
  return os.str();
}

std::string render_series(std::span<const SeriesResult> results, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const SeriesResult& r : results) arr.push_back(to_json(r));
      os << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "kind,h,k,approx,exact,abs_error,depth\n";
      for (const SeriesResult& r : results) {
        os << to_string(r.kind) << ',' << r.h.get_str() << ',' << r.k.get_str() << ',' << fmt_double(r.approx) << ','
           << r.exact.str() << ',' << fmt_double(r.abs_error) << ',' << r.depth << '\n';
      }
      break;
    case OutputFormat::Human:
      for (const SeriesResult& r : results) {
        os << to_string(r.kind) << ' ' << pair_text(r.h, r.k) << ": approx=" << fmt_double(r.approx)
           << "  exact=" << r.exact.str() << "  error=" << fmt_error(r.abs_error) << "  depth=" << r.depth << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace finsum
