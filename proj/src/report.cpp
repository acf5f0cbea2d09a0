#include "falsetheta/report.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

namespace falsetheta {

const char* status_name(RecordStatus status) {
  switch (status) {
    case RecordStatus::equal: return "equal";
    case RecordStatus::mismatch: return "mismatch";
    case RecordStatus::skipped: return "skipped";
  }
  return "unknown";
}

void set_exact_sides(VerificationRecord& record, const CyclotomicNumber& lhs,
                     const CyclotomicNumber& rhs) {
  const unsigned long order = std::lcm(lhs.order(), rhs.order());
  const CyclotomicNumber left = embed(lhs, order);
  const CyclotomicNumber right = embed(rhs, order);
  record.field_order = order;
  record.lhs = to_string(left);
  record.rhs = to_string(right);
  record.lhs_coeffs.clear();
  record.rhs_coeffs.clear();
  for (const Rational& c : left.coeffs()) record.lhs_coeffs.push_back(to_fraction_string(c));
  for (const Rational& c : right.coeffs()) record.rhs_coeffs.push_back(to_fraction_string(c));
  record.status = left == right ? RecordStatus::equal : RecordStatus::mismatch;
}

ReportSummary summarize(const std::vector<VerificationRecord>& records) {
  ReportSummary s;
  s.total = static_cast<long>(records.size());
  for (const VerificationRecord& r : records) {
    switch (r.status) {
      case RecordStatus::equal: ++s.equal; break;
      case RecordStatus::mismatch: ++s.mismatch; break;
      case RecordStatus::skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::string records_to_json(const std::vector<VerificationRecord>& records) {
  nlohmann::ordered_json doc;
  doc["format"] = "falsetheta-report";
  doc["format_version"] = 1;
  const ReportSummary s = summarize(records);
  doc["summary"] = {{"total", s.total},
                    {"equal", s.equal},
                    {"mismatch", s.mismatch},
                    {"skipped", s.skipped}};
  doc["records"] = nlohmann::ordered_json::array();
  for (const VerificationRecord& r : records) {
    nlohmann::ordered_json item;
    item["suite"] = r.suite;
    item["identity"] = r.identity;
    item["family"] = r.family;
    item["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.params) item["parameters"][key] = value;
    item["status"] = status_name(r.status);
    item["lhs"] = r.lhs;
    item["rhs"] = r.rhs;
    item["field_order"] = r.field_order;
    item["lhs_coeffs"] = r.lhs_coeffs;
    item["rhs_coeffs"] = r.rhs_coeffs;
    item["note"] = r.note;
    item["wall_ms"] = r.wall_ms;
    doc["records"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string params_string(const VerificationRecord& r) {
  std::string out;
  for (const auto& [key, value] : r.params) {
    if (!out.empty()) out += " ";
    out += key + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace

std::string records_to_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream out;
  out << "suite,identity,family,parameters,status,lhs,rhs,field_order,note,wall_ms\n";
  for (const VerificationRecord& r : records) {
    out << csv_escape(r.suite) << ',' << csv_escape(r.identity) << ',' << csv_escape(r.family)
        << ',' << csv_escape(params_string(r)) << ',' << status_name(r.status) << ','
        << csv_escape(r.lhs) << ',' << csv_escape(r.rhs) << ',' << r.field_order << ','
        << csv_escape(r.note) << ',' << r.wall_ms << '\n';
  }
  return out.str();
}

std::string records_to_text(const std::vector<VerificationRecord>& records) {
  std::ostringstream out;
  for (const VerificationRecord& r : records) {
    out << '[' << status_name(r.status) << "] " << r.suite << '/' << r.identity;
    if (!r.family.empty()) out << ' ' << r.family;
    const std::string params = params_string(r);
    if (!params.empty()) out << ' ' << params;
    if (r.status == RecordStatus::mismatch) {
      out << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs;
    }
    if (!r.note.empty()) out << "\n  note: " << r.note;
    out << '\n';
  }
  const ReportSummary s = summarize(records);
  out << s.total << " checks: " << s.equal << " equal, " << s.mismatch << " mismatch, "
      << s.skipped << " skipped\n";
  return out.str();
}

std::string report_schema() {
  nlohmann::ordered_json coeffs = {
      {"type", "array"},
      {"items", {{"type", "string"}, {"pattern", "^-?[0-9]+/[0-9]+$"}}}};
  nlohmann::ordered_json schema = {
      {"$schema", "https://json-schema.org/draft/2020-12/schema"},
      {"title", "falsetheta verification report"},
      {"type", "object"},
      {"required", {"format", "format_version", "summary", "records"}},
      {"properties",
       {{"format", {{"const", "falsetheta-report"}}},
        {"format_version", {{"type", "integer"}}},
        {"summary",
         {{"type", "object"},
          {"required", {"total", "equal", "mismatch", "skipped"}},
          {"properties",
           {{"total", {{"type", "integer"}}},
            {"equal", {{"type", "integer"}}},
            {"mismatch", {{"type", "integer"}}},
            {"skipped", {{"type", "integer"}}}}}}},
        {"records",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"suite", "identity", "family", "parameters", "status", "lhs", "rhs",
                          "field_order", "lhs_coeffs", "rhs_coeffs", "note", "wall_ms"}},
            {"properties",
             {{"suite", {{"type", "string"}}},
              {"identity", {{"type", "string"}}},
              {"family", {{"type", "string"}}},
              {"parameters",
               {{"type", "object"}, {"additionalProperties", {{"type", "integer"}}}}},
              {"status", {{"enum", {"equal", "mismatch", "skipped"}}}},
              {"lhs", {{"type", "string"}}},
              {"rhs", {{"type", "string"}}},
              {"field_order", {{"type", "integer"}, {"minimum", 0}}},
              {"lhs_coeffs", coeffs},
              {"rhs_coeffs", coeffs},
              {"note", {{"type", "string"}}},
              {"wall_ms", {{"type", "number"}}}}}}}}}}}};
  return schema.dump(2) + "\n";
}

std::string series_preview(const TruncatedQSeries& series, long max_terms) {
  std::string out;
  long shown = 0;
  for (long e = 0; e <= series.order && shown < max_terms; ++e) {
    Rational c = series.coeffs[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string num = c.get_num().get_str();
    if (c.get_den() != 1) num += "/" + c.get_den().get_str();
    if (c != 1 || e == 0) out += num;
    if (e > 0) {
      if (c != 1) out += " ";
      out += "q";
      if (e > 1) out += "^" + std::to_string(e);
    }
    ++shown;
  }
  if (out.empty()) out = "0";
  out += " + O(q^" + std::to_string(series.order + 1) + ")";
  return out;
}

}  // namespace falsetheta
