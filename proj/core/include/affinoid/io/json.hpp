#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affinoid/exterior/tensor.hpp"
#include "affinoid/groupoid/groupoid.hpp"

namespace affinoid::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; ParseError on malformed input.
Json parse_text(const std::string& text, const std::string& what);
/// Reads and parses a file; ParseError if it cannot be read or parsed.
Json read_file(const std::string& path);

/// Rationals are written as strings so no value is ever rounded.
Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& point);
std::vector<Rational> point_from_json(const Json& j, const std::string& field);

/// {"name", "dim_G", "dim_M", "src", "tgt", "unit", "inv",
///  "comp_param": {"dim_P", "map"}, "mult", "splitting"}. Polynomials use the
/// exact-core text syntax; "name" is optional on input.
Json groupoid_to_json(const GroupoidData& g);
/// ParseError naming the offending field on any missing key, wrong type,
/// unparsable polynomial or inconsistent length.
GroupoidData groupoid_from_json(const Json& j);

enum class FieldKind { mv, form, tensor };
std::string to_string(FieldKind kind);

struct FieldInput {
  FieldKind kind = FieldKind::mv;
  TensorField field;

  MultiVectorField multivector() const { return field.to_multivector(); }
  DifferentialForm form() const { return field.to_form(); }
};

/// {"kind", "dim", "degree": [p, q], "coeffs": [{"idx", "cov_idx", "poly"}]}
/// with 1-based indices in increasing order and zero coefficients omitted.
Json field_to_json(FieldKind kind, const TensorField& f);
Json field_to_json(const MultiVectorField& m);
Json field_to_json(const DifferentialForm& w);

/// Indices are 1-based; an unsorted index list contributes with the sign of
/// its sorting permutation and entries for the same index set add up. A
/// repeated index raises ParseError. `dim` must equal expected_dim when
/// expected_dim is nonzero.
FieldInput field_from_json(const Json& j, std::size_t expected_dim = 0);

Json matrix_to_json(const PMatrix& m);

}  // namespace affinoid::io
