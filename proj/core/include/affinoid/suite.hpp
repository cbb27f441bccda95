#pragma once

#include <string>
#include <vector>

#include "affinoid/catalog/fixtures.hpp"
#include "affinoid/io/json.hpp"
#include "affinoid/verdict.hpp"

namespace affinoid {

/// One line of a report. `ref` is the citation label of the statement the
/// check exercises.
struct CheckRecord {
  std::string check;
  std::string ref;
  std::string instance;
  bool pass = true;
  std::string detail;
  std::vector<Rational> witness;
};

struct Report {
  std::string command;
  std::string groupoid;
  CheckOptions options;
  std::vector<CheckRecord> checks;
  /// Computed output of decompose, bracket and compose; omitted when null.
  io::Json result;

  bool pass() const;
};

inline constexpr const char* kReportSchema = "affinoid-report/1";

/// Deterministic serialization: fixed key order, checks in run order,
/// rationals as strings.
io::Json report_to_json(const Report& report);
std::string report_text(const Report& report);

/// "full", "fixtures" and "structure".
std::vector<std::string> suite_names();

/// Runs a named suite on one groupoid. Fixture checks run only when
/// `fixtures` is non-empty (catalog groupoids). Random data is drawn from
/// options.seed, so identical options give identical reports. Throws
/// std::invalid_argument for an unknown suite.
Report run_suite(const std::string& suite, const std::string& groupoid_label, const GroupoidData& data,
                 const std::vector<catalog::Fixture>& fixtures, const CheckOptions& options);

/// "affine-mv", "multiplicative-mv", "affine-form", "multiplicative-form",
/// "affine-tensor", "multiplicative-tensor".
std::vector<std::string> predicate_names();

/// Decides one predicate on a field; multivector and form predicates record
/// both decision paths. std::invalid_argument for an unknown predicate,
/// ArityError/DegreeError when the field does not fit.
std::vector<CheckRecord> run_predicate(const std::string& predicate, const Groupoid& g, const io::FieldInput& field,
                                       const std::string& instance, const CheckOptions& options);

}  // namespace affinoid
