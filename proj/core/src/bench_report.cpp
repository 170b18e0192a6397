#include "setminer/bench_report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace setminer {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::invalid_argument("bad numeric field: " + s);
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::invalid_argument("bad integer field: " + s);
  return v;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

std::vector<double> BenchReport::kept_kernel_s() const {
  if (warmup_discarded && kernel_raw_s.size() > 1)
    return {kernel_raw_s.begin() + 1, kernel_raw_s.end()};
  return kernel_raw_s;
}

double BenchReport::kernel_mean_s() const {
  const auto kept = kept_kernel_s();
  if (kept.empty()) return 0.0;
  double sum = 0.0;
  for (double t : kept) sum += t;
  return sum / static_cast<double>(kept.size());
}

double BenchReport::kernel_min_s() const {
  const auto kept = kept_kernel_s();
  if (kept.empty()) return 0.0;
  return *std::min_element(kept.begin(), kept.end());
}

double BenchReport::kernel_stddev_s() const {
  const auto kept = kept_kernel_s();
  if (kept.size() < 2) return 0.0;
  const double mean = kernel_mean_s();
  double ss = 0.0;
  for (double t : kept) ss += (t - mean) * (t - mean);
  return std::sqrt(ss / static_cast<double>(kept.size() - 1));
}

std::optional<std::pair<double, double>> BenchReport::kernel_ci95() const {
  if (repetitions < 10) return std::nullopt;
  auto kept = kept_kernel_s();
  if (kept.size() < 2) return std::nullopt;
  std::sort(kept.begin(), kept.end());
  const auto lo_idx = static_cast<std::size_t>(
      std::floor(0.025 * static_cast<double>(kept.size() - 1)));
  const auto hi_idx = static_cast<std::size_t>(
      std::ceil(0.975 * static_cast<double>(kept.size() - 1)));
  return std::make_pair(kept[lo_idx], kept[hi_idx]);
}

std::string BenchReport::to_json() const {
  nlohmann::json j;
  j["input"] = input;
  j["set_impl"] = set_impl;
  j["ordering"] = ordering;
  j["kernel"] = kernel;
  j["k"] = k;
  j["threads"] = threads;
  j["repetitions"] = repetitions;
  j["seed"] = seed;
  j["load_s"] = load_s;
  j["build_s"] = build_s;
  j["preprocess_s"] = preprocess_s;
  j["kernel_raw_s"] = kernel_raw_s;
  j["warmup_discarded"] = warmup_discarded;
  j["pattern_count"] = pattern_count;
  j["adjacency_bytes"] = adjacency_bytes;
  j["total_wall_s"] = total_wall_s;
  j["extras"] = extras;

  // Derived summary; ignored when parsing.
  nlohmann::json summary;
  if (!kernel_raw_s.empty()) {
    summary["kernel_mean_s"] = kernel_mean_s();
    summary["kernel_min_s"] = kernel_min_s();
    summary["kernel_stddev_s"] = kernel_stddev_s();
    summary["throughput"] = mean_throughput();
    if (auto ci = kernel_ci95())
      summary["kernel_ci95"] = {ci->first, ci->second};
  }
  j["summary"] = summary;
  return j.dump(2);
}

BenchReport BenchReport::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  BenchReport r;
  r.input = j.at("input").get<std::string>();
  r.set_impl = j.at("set_impl").get<std::string>();
  r.ordering = j.at("ordering").get<std::string>();
  r.kernel = j.at("kernel").get<std::string>();
  r.k = j.at("k").get<std::uint32_t>();
  r.threads = j.at("threads").get<std::uint32_t>();
  r.repetitions = j.at("repetitions").get<std::uint32_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.load_s = j.at("load_s").get<double>();
  r.build_s = j.at("build_s").get<double>();
  r.preprocess_s = j.at("preprocess_s").get<double>();
  r.kernel_raw_s = j.at("kernel_raw_s").get<std::vector<double>>();
  r.warmup_discarded = j.at("warmup_discarded").get<bool>();
  r.pattern_count = j.at("pattern_count").get<std::uint64_t>();
  r.adjacency_bytes = j.at("adjacency_bytes").get<std::uint64_t>();
  r.total_wall_s = j.at("total_wall_s").get<double>();
  r.extras = j.at("extras").get<std::map<std::string, double>>();
  return r;
}

std::string BenchReport::csv_header() {
  return "input,set_impl,ordering,kernel,k,threads,rep,load_s,build_s,"
         "preprocess_s,kernel_s,patterns,throughput,adjacency_bytes";
}

std::string BenchReport::to_csv_rows() const {
  std::ostringstream out;
  for (std::size_t rep = 0; rep < kernel_raw_s.size(); ++rep) {
    out << csv_quote(input) << ',' << set_impl << ',' << ordering << ','
        << kernel << ',' << k << ',' << threads << ',' << rep << ','
        << format_double(load_s) << ',' << format_double(build_s) << ','
        << format_double(preprocess_s) << ',' << format_double(kernel_raw_s[rep])
        << ',' << pattern_count << ',' << format_double(rep_throughput(rep))
        << ',' << adjacency_bytes << '\n';
  }
  return out.str();
}

BenchReport BenchReport::from_csv_rows(const std::string& rows) {
  BenchReport r;
  std::istringstream in(rows);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = csv_split(line);
    if (f.size() != 14)
      throw std::invalid_argument("expected 14 CSV fields, got " +
                                  std::to_string(f.size()));
    if (first) {
      r.input = f[0];
      r.set_impl = f[1];
      r.ordering = f[2];
      r.kernel = f[3];
      r.k = static_cast<std::uint32_t>(parse_u64(f[4]));
      r.threads = static_cast<std::uint32_t>(parse_u64(f[5]));
      r.load_s = parse_double(f[7]);
      r.build_s = parse_double(f[8]);
      r.preprocess_s = parse_double(f[9]);
      r.pattern_count = parse_u64(f[11]);
      r.adjacency_bytes = parse_u64(f[13]);
      first = false;
    }
    if (parse_u64(f[6]) != r.kernel_raw_s.size())
      throw std::invalid_argument("repetition rows out of order");
    r.kernel_raw_s.push_back(parse_double(f[10]));
  }
  if (first) throw std::invalid_argument("no CSV rows");
  r.repetitions = static_cast<std::uint32_t>(r.kernel_raw_s.size());
  r.warmup_discarded = r.repetitions >= 2;
  return r;
}

std::string BenchReport::to_table() const {
  std::ostringstream out;
  auto row = [&](const char* key, const std::string& value) {
    out << "  ";
    out.width(18);
    out << std::left << key << value << '\n';
  };
  row("input", input);
  row("kernel", kernel + (k ? " (k=" + std::to_string(k) + ")" : ""));
  row("set_impl", set_impl);
  row("ordering", ordering);
  row("threads", std::to_string(threads));
  row("repetitions", std::to_string(repetitions) +
                         (warmup_discarded ? " (first discarded as warm-up)" : ""));
  row("load_s", format_double(load_s));
  row("build_s", format_double(build_s));
  row("preprocess_s", format_double(preprocess_s));
  if (!kernel_raw_s.empty()) {
    row("kernel_mean_s", format_double(kernel_mean_s()));
    row("kernel_min_s", format_double(kernel_min_s()));
    row("kernel_stddev_s", format_double(kernel_stddev_s()));
    if (auto ci = kernel_ci95())
      row("kernel_ci95", "[" + format_double(ci->first) + ", " +
                             format_double(ci->second) + "]");
    row("throughput", format_double(mean_throughput()) + " patterns/s");
  }
  row("patterns", std::to_string(pattern_count));
  row("adjacency_bytes", std::to_string(adjacency_bytes));
  for (const auto& [key, value] : extras) row(key.c_str(), format_double(value));
  return out.str();
}

}  // namespace setminer
