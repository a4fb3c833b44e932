#pragma once

// JSON documents for rules and exponential sums; every number is a decimal
// string that reads back to the identical binary value.

#include "agq/expsum.hpp"
#include "agq/rule.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace agq {

using Json = nlohmann::json;

struct StoredRule
{
    QuadratureRule rule;
    ErrorCertificate certificate;
};

Json rule_to_json(const QuadratureRule& rule, const ErrorCertificate& cert);
/// Parses at the current precision; set it from json_precision() first for a
/// lossless round trip. Throws ParseError on malformed documents.
StoredRule rule_from_json(const Json& doc);

Json expsum_to_json(const ExpSumApprox& approx);
ExpSumApprox expsum_from_json(const Json& doc);

/// precision_digits recorded in a rule or exp-sum document.
unsigned json_precision(const Json& doc);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

/// "x,abs_error" rows.
void write_residual_csv(std::ostream& out, const ResidualReport& report);

} // namespace agq
