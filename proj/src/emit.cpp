#include "sascone/emit.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "sascone/error.hpp"

namespace sascone::emit {
namespace {

void write_json(std::ostringstream& os, const Json& value, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      // nlohmann::json objects are std::map backed, so iteration is sorted.
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        write_json(os, it.value(), depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i != 0) os << ",\n";
        os << pad;
        write_json(os, value[i], depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(value.get<double>());
      return;
    default:
      os << value.dump();
      return;
  }
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_float()) return format_double(value.get<double>());
  return value.dump();
}

void write_text(std::ostringstream& os, const Json& value, const std::string& prefix) {
  if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it) {
      write_text(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    }
    return;
  }
  if (value.is_array() && !value.empty() &&
      (value.front().is_object() || value.front().is_array())) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      write_text(os, value[i], prefix + "[" + std::to_string(i) + "]");
    }
    return;
  }
  if (value.is_array()) {
    os << prefix << ": ";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i != 0) os << ", ";
      os << scalar_text(value[i]);
    }
    os << "\n";
    return;
  }
  os << prefix << ": " << scalar_text(value) << "\n";
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw Error(ErrorKind::InvalidArgument, "unknown output format '" + text + "'");
}

std::string format_double(double value) {
  if (std::isnan(value)) return "\"nan\"";
  if (std::isinf(value)) return value > 0 ? "\"inf\"" : "\"-inf\"";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  if (ec != std::errc()) return "0";
  return std::string(buf.data(), ptr);
}

std::string to_json_text(const Json& record) {
  std::ostringstream os;
  write_json(os, record, 0);
  os << "\n";
  return os.str();
}

std::string to_text(const Json& record) {
  std::ostringstream os;
  write_text(os, record, "");
  return os.str();
}

std::string to_csv(const std::vector<std::string>& columns,
                   const std::vector<std::vector<double>>& rows) {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c != 0) os << ",";
    os << columns[c];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) os << ",";
      os << format_double(row[c]);
    }
    os << "\n";
  }
  return os.str();
}

std::string emit(const Json& record, Format format) {
  switch (format) {
    case Format::Json: return to_json_text(record);
    case Format::Text: return to_text(record);
    case Format::Csv: {
      // Flat records: one header line of keys, one line of values.
      std::ostringstream header, values;
      bool first = true;
      for (auto it = record.begin(); it != record.end(); ++it) {
        if (!first) {
          header << ",";
          values << ",";
        }
        first = false;
        header << it.key();
        values << (it.value().is_structured() ? it.value().dump() : scalar_text(it.value()));
      }
      return header.str() + "\n" + values.str() + "\n";
    }
  }
  return {};
}

std::string range_text(const cone::PositivityRange& range) {
  using Kind = cone::PositivityRange::Kind;
  switch (range.kind) {
    case Kind::Empty: return "empty (all rays indefinite)";
    case Kind::Entire: return "p+_w = t+_w (entire w-cone)";
    case Kind::HalfLine: return range.lower.to_string() + " < v1/v2";
    case Kind::Interval:
      return range.lower.to_string() + " < v1/v2 < " + range.upper.to_string();
  }
  return {};
}

}  // namespace sascone::emit
