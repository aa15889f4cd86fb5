#include "lfree/report.hpp"

#include <algorithm>
#include <sstream>

#include "lfree/error.hpp"

namespace lfree {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw InvalidInput("unknown format '" + name + "' (json, csv, table)");
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void scalar_view(Report& r) {
  r.header.clear();
  r.rows.assign(1, {});
  for (auto it = r.doc.begin(); it != r.doc.end(); ++it) {
    if (it->is_structured()) continue;
    r.header.push_back(it.key());
    r.rows[0].push_back(cell(*it));
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string render_report(const Report& r, Format f) {
  std::ostringstream out;
  if (f == Format::Json) {
    out << r.doc.dump(2) << '\n';
    return out.str();
  }
  if (f == Format::Csv) {
    auto line = [&](const std::vector<std::string>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << csv_field(v[i]);
      out << '\n';
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    return out.str();
  }
  std::vector<std::size_t> width(r.header.size(), 0);
  for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += "  ";
      s += v[i];
      if (i + 1 < v.size()) s.append(width[i] - v[i].size(), ' ');
    }
    out << s << '\n';
  };
  line(r.header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : r.rows) line(row);
  return out.str();
}

Json to_json(const Element& e, const Ambient& amb) {
  if (amb.is_interval()) return e.value();
  return Json(e.coords());
}

Json to_json(const GroundSet& s) {
  Json a = Json::array();
  for (const auto& e : s.elements()) a.push_back(to_json(e, s.ambient()));
  return a;
}

Json to_json(const SumsetWitness& w, const Ambient& amb) {
  Json summands = Json::array();
  for (const auto& l : w.summands) {
    Json one = Json::array();
    for (const auto& e : l) one.push_back(to_json(e, amb));
    summands.push_back(one);
  }
  return Json{{"offset", to_json(w.offset, amb)}, {"summands", summands}};
}

Json to_json(const Signature& sig) { return Json(sig.lengths()); }

}  // namespace lfree
