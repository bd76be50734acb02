#include "binomsum/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace binomsum {

namespace {

void write_json(const Json& value, std::ostringstream& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out << '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out << ',';
        first = false;
        out << Json(key).dump() << ':';
        write_json(item, out);
      }
      out << '}';
      break;
    }
    case Json::value_t::array: {
      out << '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out << ',';
        first = false;
        write_json(item, out);
      }
      out << ']';
      break;
    }
    case Json::value_t::number_float:
      out << format_double(value.get<double>());
      break;
    default:
      out << value.dump();
  }
}

std::string csv_cell(const Json& value) {
  if (value.is_string()) {
    auto s = value.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  if (value.is_number_float()) return format_double(value.get<double>());
  if (value.is_null()) return "";
  if (value.is_structured()) return csv_cell(Json(dump_json(value)));
  return value.dump();
}

std::string text_line(const Json& row) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, item] : row.items()) {
    if (!first) out << "  ";
    first = false;
    out << key << '=' << (item.is_string() ? item.get<std::string>() : csv_cell(item));
  }
  return out.str();
}

Json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string dump_json(const Json& value) {
  std::ostringstream out;
  write_json(value, out);
  return out.str();
}

std::string emit_report(const Report& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      if (report.single && report.rows.size() == 1) {
        out << dump_json(report.rows.front());
      } else {
        out << dump_json(Json(report.rows));
      }
      out << '\n';
      break;
    case Format::Csv: {
      for (std::size_t i = 0; i < report.columns.size(); ++i) {
        out << (i ? "," : "") << report.columns[i];
      }
      out << '\n';
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < report.columns.size(); ++i) {
          const auto& column = report.columns[i];
          out << (i ? "," : "") << (row.contains(column) ? csv_cell(row.at(column)) : "");
        }
        out << '\n';
      }
      break;
    }
    case Format::Text:
      for (const auto& row : report.rows) out << text_line(row) << '\n';
      break;
  }
  return out.str();
}

Json to_json(const SequenceValue& v) {
  return {{"kind", "s_n"}, {"n", v.n}, {"value", to_decimal(v.s)}};
}

Json to_json(const Summand& v) {
  return {{"kind", "summand"}, {"n", v.n}, {"k", v.k}, {"value", to_decimal(v.value)},
          {"factored", to_string(v.factored)}};
}

Json to_json(const SuperCatalanValue& v) {
  return {{"kind", "super_catalan"}, {"a", v.a}, {"b", v.b}, {"value", to_decimal(v.value)}};
}

Json to_json(const DivisibilityCertificate& c) {
  Json margins = Json::array();
  for (const auto& m : c.margins) {
    margins.push_back({{"p", m.p}, {"num", m.numerator}, {"den", m.denominator}});
  }
  return {{"n", c.n}, {"k", c.k}, {"quotient", to_decimal(c.quotient)}, {"margins", margins},
          {"cnk_divides", c.cnk_divides}};
}

Json to_json(const FloorScanReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"m", v.m}, {"n", v.n}, {"k", v.k}});
  return {{"m_range", {r.m_range.first, r.m_range.second}},
          {"n_range", {r.n_range.first, r.n_range.second}},
          {"violations", violations},
          {"all_in_exception_set", r.all_in_exception_set},
          {"exception_points", r.exception_points},
          {"exception_set_tight", r.exception_set_tight}};
}

Json to_json(const CongruenceResult& r) {
  return {{"claim", std::string(claim_name(r.claim))},
          {"parameter", r.parameter},
          {"lhs_residue", r.lhs_residue},
          {"expected_residue", r.expected_residue},
          {"holds", r.holds}};
}

Json to_json(const BoundsReport& r) {
  return {{"n", r.n},
          {"lower", rational_json(r.lower)},
          {"upper", rational_json(r.upper)},
          {"s", to_decimal(r.s)},
          {"lower_tight", r.lower_tight},
          {"upper_tight", r.upper_tight}};
}

Json to_json(const AsymptoticsSample& s) {
  return {{"n", s.n},
          {"log_s", s.log_s},
          {"nth_root", s.nth_root},
          {"step_ratio", s.step_ratio},
          {"lower_root", s.lower_root},
          {"upper_root", s.upper_root}};
}

Json to_json(const PiPartialSum& p) {
  const Rational reference = inverse_pi_reference();
  const Rational upper = p.value + p.remainder_bound;
  // The reference is truncated, so it may sit up to 1e-50 below the true value.
  const Rational slack(1, BigInteger("100000000000000000000000000000000000000000000000000"));
  const bool bracketed = p.value <= reference + slack && reference <= upper;
  return {{"N", p.N},
          {"numerator", to_decimal(p.value.get_num())},
          {"denominator", to_decimal(p.value.get_den())},
          {"remainder_bound", rational_json(p.remainder_bound)},
          {"ratio_bound", rational_json(p.ratio_bound)},
          {"checked_through", p.checked_through},
          {"reference", std::string(kInversePi50)},
          {"agreeing_digits", agreeing_digits(p.value, reference)},
          {"certified_digits", agreeing_digits(upper, p.value)},
          {"bracketed", bracketed}};
}

Json to_json(const FalsificationError& e) {
  Json params = Json::object();
  for (const auto& [key, value] : e.parameters()) params[key] = value;
  return {{"kind", "counterexample"}, {"operation", e.operation()}, {"parameters", params},
          {"detail", e.detail()}};
}

}  // namespace binomsum
