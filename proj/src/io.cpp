#include "lulu/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace lulu {

namespace {

using json = nlohmann::ordered_json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

double number(const json& j, std::string_view what) {
  if (!j.is_number()) {
    throw ParseError(std::string(what) + " must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " is not finite");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  const std::string n = lower(std::string(name));
  if (n == "csv") return Format::Csv;
  if (n == "json") return Format::Json;
  return std::nullopt;
}

std::optional<Format> infer_format(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  if (ext.empty()) return std::nullopt;
  return parse_format(std::string_view(ext).substr(1));
}

PiecewiseLinear parse_function_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("function JSON must be an object");
  const auto bps = doc.find("breakpoints");
  if (bps == doc.end() || !bps->is_array() || bps->size() < 2) {
    throw ParseError("\"breakpoints\" must be an array of at least 2 nodes");
  }
  std::vector<Breakpoint> nodes;
  nodes.reserve(bps->size());
  for (std::size_t i = 0; i < bps->size(); ++i) {
    const json& b = (*bps)[i];
    if (!b.is_object()) throw ParseError("breakpoint must be an object");
    if (!b.contains("x") || !b.contains("value")) {
      throw ParseError("breakpoint needs \"x\" and \"value\"");
    }
    Breakpoint n;
    n.x = number(b["x"], "x");
    n.value = number(b["value"], "value");
    n.left = b.contains("left_limit") ? number(b["left_limit"], "left_limit")
                                      : n.value;
    n.right = b.contains("right_limit")
                  ? number(b["right_limit"], "right_limit")
                  : n.value;
    // Limits pointing outside the domain are meaningless.
    if (i == 0 && n.left != n.value) {
      throw ParseError("first breakpoint cannot carry a distinct left_limit");
    }
    if (i + 1 == bps->size() && n.right != n.value) {
      throw ParseError("last breakpoint cannot carry a distinct right_limit");
    }
    nodes.push_back(n);
  }
  if (const auto d = doc.find("domain"); d != doc.end()) {
    if (!d->is_array() || d->size() != 2) {
      throw ParseError("\"domain\" must be [lo, hi]");
    }
    if (number((*d)[0], "domain lo") != nodes.front().x ||
        number((*d)[1], "domain hi") != nodes.back().x) {
      throw ParseError("domain must match the first and last breakpoint");
    }
  }
  try {
    return PiecewiseLinear(std::move(nodes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string function_to_json(const PiecewiseLinear& f) {
  json bps = json::array();
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Breakpoint& b = f[i];
    json node = {{"x", b.x}, {"value", b.value}};
    if (i > 0) node["left_limit"] = b.left;
    if (i + 1 < n) node["right_limit"] = b.right;
    bps.push_back(std::move(node));
  }
  json doc = {{"domain", {f.domain().lo(), f.domain().hi()}},
              {"breakpoints", std::move(bps)}};
  return doc.dump(2) + "\n";
}

DiscreteSignal parse_signal_csv(std::string_view text) {
  std::vector<double> values;
  std::vector<double> xs;
  int value_col = 0;
  int x_col = 1;
  std::size_t width = 0;
  bool first = true;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line);
    if (fields.size() > 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected at most 2 columns");
    }
    if (first) {
      first = false;
      width = fields.size();
      if (!to_double(fields[0])) {
        // Header row.  Named columns may come in either order.
        if (fields.size() == 2 && lower(std::string(fields[0])) == "x") {
          value_col = 1;
          x_col = 0;
        }
        continue;
      }
    }
    if (fields.size() != width) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": inconsistent column count");
    }
    const auto v = to_double(fields[static_cast<std::size_t>(value_col)]);
    if (!v) {
      throw ParseError("line " + std::to_string(line_no) + ": bad value");
    }
    values.push_back(*v);
    if (width == 2) {
      const auto x = to_double(fields[static_cast<std::size_t>(x_col)]);
      if (!x) throw ParseError("line " + std::to_string(line_no) + ": bad x");
      xs.push_back(*x);
    }
  }
  if (values.empty()) throw ParseError("CSV holds no samples");
  if (xs.empty()) return DiscreteSignal(std::move(values));
  if (xs.size() == 1) return DiscreteSignal(std::move(values), 1.0, xs[0]);
  const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(h > 0.0)) throw ParseError("x column must be increasing");
  const double slack =
      1e-9 * std::max({1.0, std::abs(xs.front()), std::abs(xs.back())});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - (xs.front() + static_cast<double>(i) * h)) > slack) {
      throw ParseError("x column is not uniformly spaced");
    }
  }
  return DiscreteSignal(std::move(values), h, xs.front());
}

std::string signal_to_csv(const DiscreteSignal& s) {
  std::string out;
  const bool with_x = s.spacing().has_value();
  out += with_x ? "value,x\n" : "value\n";
  const double h = s.spacing().value_or(1.0);
  const double x0 = s.origin().value_or(0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += fmt(s[i]);
    if (with_x) out += "," + fmt(x0 + static_cast<double>(i) * h);
    out += "\n";
  }
  return out;
}

std::string report_to_json(const TVDecompositionReport& r) {
  const json doc = {{"tv_f", r.tv_f},
                    {"tv_smooth", r.tv_smooth},
                    {"tv_residual", r.tv_residual},
                    {"defect", r.defect}};
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + p.string());
  return ss.str();
}

void write_file(const std::filesystem::path& p, std::string_view content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed for " + p.string());
}

}  // namespace lulu
