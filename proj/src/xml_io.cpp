#include "mmambig/xml_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace mmambig {

namespace {

// Howard Hinnant's civil-days algorithm.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void fail(const std::string& message) const {
    throw Error(ErrorCode::MalformedXml, message + " at offset " + std::to_string(pos));
  }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool starts_with(const std::string& prefix) const {
    return text.compare(pos, prefix.size(), prefix) == 0;
  }

  void skip_prolog_and_comments() {
    for (;;) {
      skip_space();
      if (starts_with("<?")) {
        auto end = text.find("?>", pos);
        if (end == std::string::npos) fail("unterminated declaration");
        pos = end + 2;
      } else if (starts_with("<!--")) {
        auto end = text.find("-->", pos);
        if (end == std::string::npos) fail("unterminated comment");
        pos = end + 3;
      } else {
        return;
      }
    }
  }

  std::string read_name() {
    std::size_t begin = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '-'))
      ++pos;
    if (pos == begin) fail("expected a name");
    return text.substr(begin, pos - begin);
  }

  std::string read_attribute_value() {
    if (pos >= text.size() || text[pos] != '"') fail("expected a quoted attribute value");
    ++pos;
    std::string value;
    while (pos < text.size() && text[pos] != '"') {
      if (text[pos] == '&') {
        if (starts_with("&amp;")) { value += '&'; pos += 5; }
        else if (starts_with("&lt;")) { value += '<'; pos += 4; }
        else if (starts_with("&gt;")) { value += '>'; pos += 4; }
        else if (starts_with("&quot;")) { value += '"'; pos += 6; }
        else if (starts_with("&apos;")) { value += '\''; pos += 6; }
        else fail("unknown entity");
      } else {
        value += text[pos++];
      }
    }
    if (pos >= text.size()) fail("unterminated attribute value");
    ++pos;
    return value;
  }
};

std::string escape_attr(const std::string& value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct TimeValue {
  std::int64_t value = 0;
  bool from_datetime = false;
};

TimeValue parse_time_attr(const std::string& raw, const std::string& attr) {
  if (all_digits(raw)) return {std::stoll(raw), false};
  if (raw.size() == 19 && raw[4] == '-' && raw[7] == '-' && raw[10] == ' ' &&
      raw[13] == ':' && raw[16] == ':')
    return {parse_datetime_seconds(raw), true};
  throw Error(ErrorCode::SchemaViolation,
              attr + "=\"" + raw + "\" is neither a nonnegative integer nor a timestamp");
}

}  // namespace

std::int64_t parse_datetime_seconds(const std::string& text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (std::sscanf(text.c_str(), "%4d-%2d-%2d %2d:%2d:%2d", &y, &mo, &d, &h, &mi, &s) != 6 ||
      mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59 ||
      s < 0 || s > 60)
    throw Error(ErrorCode::SchemaViolation, "bad timestamp: " + text);
  return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s;
}

RawInput read_sentence_xml(const std::string& text) {
  Scanner scan{text};
  scan.skip_prolog_and_comments();
  if (!scan.starts_with("<")) scan.fail("expected <input>");
  ++scan.pos;
  if (scan.read_name() != "input") scan.fail("root element must be <input>");
  scan.skip_space();
  bool empty_root = false;
  if (scan.starts_with("/>")) {
    empty_root = true;
    scan.pos += 2;
  } else if (scan.starts_with(">")) {
    ++scan.pos;
  } else {
    scan.fail("malformed <input> tag");
  }

  RawInput input;
  std::vector<TimeValue> ts_values, te_values;

  if (!empty_root) {
    for (;;) {
      scan.skip_prolog_and_comments();
      if (scan.starts_with("</")) {
        scan.pos += 2;
        if (scan.read_name() != "input") scan.fail("mismatched closing tag");
        scan.skip_space();
        if (!scan.starts_with(">")) scan.fail("malformed closing tag");
        ++scan.pos;
        break;
      }
      if (!scan.starts_with("<")) scan.fail("expected a child element");
      ++scan.pos;
      std::string name = scan.read_name();
      if (name != "nminput" && name != "nlsentence")
        throw Error(ErrorCode::SchemaViolation, "unknown element <" + name + ">");

      std::map<std::string, std::string> attrs;
      for (;;) {
        scan.skip_space();
        if (scan.starts_with("/>")) {
          scan.pos += 2;
          break;
        }
        if (scan.starts_with(">"))
          throw Error(ErrorCode::SchemaViolation, "<" + name + "> must be self-closing");
        std::string attr = scan.read_name();
        scan.skip_space();
        if (!scan.starts_with("=")) scan.fail("expected '=' after attribute name");
        ++scan.pos;
        scan.skip_space();
        std::string value = scan.read_attribute_value();
        if (attrs.count(attr))
          throw Error(ErrorCode::SchemaViolation, "duplicate attribute `" + attr + "`");
        attrs[attr] = value;
      }

      if (name == "nlsentence") {
        auto it = attrs.find("sent");
        if (it == attrs.end() || attrs.size() != 1)
          throw Error(ErrorCode::SchemaViolation, "<nlsentence> takes exactly the sent attribute");
        input.sentences.push_back(it->second);
        continue;
      }

      for (const char* required : {"mod", "repr", "ts", "te", "conc"})
        if (!attrs.count(required))
          throw Error(ErrorCode::SchemaViolation,
                      std::string("<nminput> is missing `") + required + "`");
      for (const auto& [attr, value] : attrs)
        if (attr != "mod" && attr != "repr" && attr != "ts" && attr != "te" &&
            attr != "conc" && attr != "role")
          throw Error(ErrorCode::SchemaViolation, "unknown attribute `" + attr + "`");

      RawEntry entry;
      entry.mod = attrs["mod"];
      entry.repr = attrs["repr"];
      entry.conc = attrs["conc"];
      if (attrs.count("role")) entry.role = attrs["role"];
      TimeValue ts = parse_time_attr(attrs["ts"], "ts");
      TimeValue te = parse_time_attr(attrs["te"], "te");
      if (ts.from_datetime != te.from_datetime)
        throw Error(ErrorCode::SchemaViolation, "ts and te of one entry must share a format");
      if (te.value < ts.value)
        throw Error(ErrorCode::SchemaViolation,
                    "ts > te for entry `" + entry.repr + "`");
      ts_values.push_back(ts);
      te_values.push_back(te);
      input.entries.push_back(std::move(entry));
    }
  }

  scan.skip_prolog_and_comments();
  if (scan.pos != text.size()) scan.fail("trailing content after </input>");

  // Datetime values are shifted so the earliest ts becomes 0.
  std::int64_t base = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < ts_values.size(); ++i)
    if (ts_values[i].from_datetime) base = std::min(base, ts_values[i].value);
  for (std::size_t i = 0; i < input.entries.size(); ++i) {
    std::int64_t shift = ts_values[i].from_datetime ? base : 0;
    input.entries[i].ts = ts_values[i].value - shift;
    input.entries[i].te = te_values[i].value - shift;
  }
  return input;
}

RawInput read_sentence_file(const std::string& path) {
  return read_sentence_xml(read_text_file(path));
}

std::string write_sentence_xml(const RawInput& input) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\"?>\n<input>\n";
  for (const auto& entry : input.entries) {
    out << "  <nminput mod=\"" << escape_attr(entry.mod) << "\" repr=\""
        << escape_attr(entry.repr) << "\" ts=\"" << entry.ts << "\" te=\"" << entry.te
        << "\" conc=\"" << escape_attr(entry.conc) << "\"";
    if (!entry.role.empty()) out << " role=\"" << escape_attr(entry.role) << "\"";
    out << "/>\n";
  }
  for (const auto& sentence : input.sentences)
    out << "  <nlsentence sent=\"" << escape_attr(sentence) << "\"/>\n";
  out << "</input>\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write file: " + path);
  out << content;
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

}  // namespace mmambig
