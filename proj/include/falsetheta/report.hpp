#pragma once

// Verification records and their serialized forms.  One record per checked
// identity instance; a report is an ordered list of records plus a summary.
// Exact field values serialize losslessly as {field_order, "num/den" coeff
// vectors}; the lhs/rhs strings are the readable rendering of the same data.

#include <map>
#include <string>
#include <vector>

#include "falsetheta/cyclotomic.hpp"
#include "falsetheta/qseries.hpp"

namespace falsetheta {

enum class RecordStatus { equal, mismatch, skipped };
const char* status_name(RecordStatus status);

struct VerificationRecord {
  std::string suite;
  std::string identity;
  std::string family;
  std::map<std::string, long> params;  // ordered keys, deterministic output
  RecordStatus status = RecordStatus::skipped;
  std::string lhs;
  std::string rhs;
  unsigned long field_order = 0;        // 0 unless both sides are field elements
  std::vector<std::string> lhs_coeffs;  // basis 1, zeta, ..., zeta^{phi-1}
  std::vector<std::string> rhs_coeffs;
  std::string note;
  double wall_ms = 0;
};

// Embeds both sides into the smallest common Q(zeta_L), fills the exact
// coefficient vectors plus display strings, and sets equal/mismatch.
void set_exact_sides(VerificationRecord& record, const CyclotomicNumber& lhs,
                     const CyclotomicNumber& rhs);

struct ReportSummary {
  long total = 0, equal = 0, mismatch = 0, skipped = 0;
};
ReportSummary summarize(const std::vector<VerificationRecord>& records);

std::string records_to_json(const std::vector<VerificationRecord>& records);
std::string records_to_csv(const std::vector<VerificationRecord>& records);
std::string records_to_text(const std::vector<VerificationRecord>& records);

// JSON schema describing the json report layout.
std::string report_schema();

// First `max_terms` nonzero terms of a truncated series, with a trailing
// "+ O(q^k)" marker.
std::string series_preview(const TruncatedQSeries& series, long max_terms = 8);

}  // namespace falsetheta
