#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lfree/core.hpp"
#include "lfree/detect.hpp"

namespace lfree {

using Json = nlohmann::json;

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& name);

/// A report as a JSON document plus its tabular view (header + rows).
/// nlohmann::json keeps object keys sorted, which makes JSON output canonical.
struct Report {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Fills header/rows with the scalar top-level fields of doc, in key order.
void scalar_view(Report& r);

std::string render_report(const Report& r, Format f);

Json to_json(const Element& e, const Ambient& amb);
Json to_json(const GroundSet& s);
Json to_json(const SumsetWitness& w, const Ambient& amb);
Json to_json(const Signature& sig);

std::string cell(const Json& v);

}  // namespace lfree
