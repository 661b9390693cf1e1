#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hodgeforge/constructor.hpp"

namespace hodgeforge {

using ordered_json = nlohmann::ordered_json;

// Malformed JSON or a document that does not follow the certificate schema.
// Kept distinct from mathematical verification failures.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ordered_json to_json(const Rational& r);
ordered_json to_json(const Gaussian& z);
ordered_json to_json(const RepObject& a);
ordered_json to_json(const HodgeNumbers& h);
ordered_json to_json(const VerificationReport& r);
ordered_json to_json(const Certificate& c);

Rational rational_from_json(const ordered_json& j);
Gaussian gaussian_from_json(const ordered_json& j);
HodgeNumbers hodge_numbers_from_json(const ordered_json& j);
RepObject rep_object_from_json(const ordered_json& j);
Certificate certificate_from_json(const ordered_json& j);

// Canonical text form: fixed field order, one-space indent, trailing newline.
std::string dump_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

}  // namespace hodgeforge
