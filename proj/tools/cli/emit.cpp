#include "emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace kakeya::cli {

std::string format_real(double x) { return format_digits(x, 17); }

std::string format_digits(double x, int digits)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string csv_field(const std::string& text)
{
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
  std::string s;
  auto line = [&s](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) s += ',';
      s += csv_field(fields[i]);
    }
    s += "\r\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  return s;
}

std::string to_csv(const OutputTable& table)
{
  table.validate();
  std::vector<std::vector<std::string>> rows;
  rows.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (const double x : row) cells.push_back(format_real(x));
    rows.push_back(std::move(cells));
  }
  return to_csv(table.columns, rows);
}

namespace {

std::string xml_escape(const std::string& text)
{
  std::string s;
  for (const char ch : text) {
    switch (ch) {
      case '&': s += "&amp;"; break;
      case '<': s += "&lt;"; break;
      case '>': s += "&gt;"; break;
      case '"': s += "&quot;"; break;
      default: s += ch;
    }
  }
  return s;
}

std::string fixed3(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string to_svg(const OutputTable& table, int x_col, int y_col)
{
  table.validate();
  constexpr double width = 640, height = 400, margin = 60;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    xs.push_back(x_col < 0 ? static_cast<double>(i) : table.rows[i][x_col]);
    ys.push_back(table.rows[i][y_col]);
  }
  auto span = [](const std::vector<double>& v) {
    if (v.empty()) return std::pair{0.0, 1.0};
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *lo == *hi ? std::pair{*lo - 0.5, *hi + 0.5} : std::pair{*lo, *hi};
  };
  const auto [x0, x1] = span(xs);
  const auto [y0, y1] = span(ys);
  auto px = [&](double x) { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); };
  const std::string x_name = x_col < 0 ? "row" : table.columns[x_col];
  const std::string y_name = table.columns[y_col];

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
       xml_escape(table.caption) + "</text>\n";
  s += "<line x1=\"60\" y1=\"340\" x2=\"580\" y2=\"340\" stroke=\"black\"/>\n";
  s += "<line x1=\"60\" y1=\"60\" x2=\"60\" y2=\"340\" stroke=\"black\"/>\n";
  s += "<text x=\"320\" y=\"380\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
       xml_escape(x_name) + "</text>\n";
  s += "<text x=\"16\" y=\"200\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
       "transform=\"rotate(-90 16 200)\">" +
       xml_escape(y_name) + "</text>\n";
  auto tick = [&](double x, double y, const char* anchor, double v) {
    s += "<text x=\"" + fixed3(x) + "\" y=\"" + fixed3(y) + "\" text-anchor=\"" + anchor +
         "\" font-family=\"sans-serif\" font-size=\"10\">" + format_digits(v, 6) + "</text>\n";
  };
  tick(60, 354, "start", x0);
  tick(580, 354, "end", x1);
  tick(56, 340, "end", y0);
  tick(56, 64, "end", y1);
  s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += fixed3(px(xs[i])) + "," + fixed3(py(ys[i]));
  }
  s += "\"/>\n</svg>\n";
  return s;
}

nlohmann::ordered_json to_json(const bounds::BoundParams<double>& params)
{
  return {{"a", params.a}, {"r0", params.r0}, {"p", params.p}, {"lambda", params.lambda}};
}

nlohmann::ordered_json to_json(const bounds::BoundBreakdown<double>& b)
{
  return {{"case_i", b.case_i},
          {"case_ii", b.case_ii},
          {"half_a", b.half_a},
          {"final", b.final},
          {"integral_value", b.integral_value},
          {"f_r0", b.f_r0},
          {"c_r1m1", b.c_r1m1},
          {"derived",
           {{"r_lambda", b.derived.r_lambda},
            {"delta1", b.derived.delta1},
            {"r1", b.derived.r1},
            {"g_mid", b.derived.g_mid},
            {"case_ii_feasible", b.derived.case_ii_feasible}}}};
}

nlohmann::ordered_json to_json(const oracle::CheckReport& r)
{
  return {{"id", std::string(oracle::name(r.id))},
          {"samples", r.samples},
          {"grid_spec", r.grid_spec},
          {"max_violation", r.max_violation},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"seed", r.seed},
          {"detail", r.detail}};
}

nlohmann::ordered_json to_json(const opt::SearchBox& box)
{
  return {{"a", {box.a.lo, box.a.hi}},
          {"r0", {box.r0.lo, box.r0.hi}},
          {"lambda", {box.lambda.lo, box.lambda.hi}},
          {"grid", box.grid},
          {"starts", box.starts},
          {"refine_tol", box.refine_tol},
          {"quad_tol", box.quad_tol}};
}

nlohmann::ordered_json to_json(const opt::OptimizationResult& result)
{
  nlohmann::ordered_json trace = nlohmann::ordered_json::array();
  for (const auto& t : result.trace) {
    auto j = to_json(t.params);
    j["value"] = t.value;
    trace.push_back(j);
  }
  return {{"best", to_json(result.best)},
          {"breakdown", to_json(result.breakdown)},
          {"balanced_p", result.balanced_p},
          {"evaluations", result.evaluations},
          {"trace", trace}};
}

nlohmann::ordered_json to_json(const OutputTable& table)
{
  table.validate();
  return {{"caption", table.caption}, {"columns", table.columns}, {"rows", table.rows}};
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << text;
  if (!os) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace kakeya::cli
