#pragma once

// JSON codecs for the command-line front end. Every decoder throws
// MalformedInput naming the offending field as a JSON-pointer-like path.

#include <string>

#include <nlohmann/json.hpp>

#include "saturate/frobenius.hpp"
#include "saturate/group.hpp"
#include "saturate/rootdata.hpp"

namespace saturate::cli {

using nlohmann::json;

/// {"ell": int, "degree": int, "modulus": [int, ...]}; degree defaults to 1.
ff::Field field_from_json(const json& j, const std::string& path = "field");
json field_to_json(const ff::Field& f);

/// An integer (read in the prime field) or a coordinate array in the power basis.
ff::Elem elem_from_json(const ff::Field& f, const json& j, const std::string& path);
/// Integer over a prime field, coordinate array otherwise.
json elem_to_json(const ff::Field& f, ff::Elem x);

/// Rows as nested arrays; `n` is the expected size.
matgrp::SquareMatrix matrix_from_rows(const ff::Field& f, std::size_t n, const json& rows, const std::string& path);
/// {"field": ..., "n": ..., "rows": [[...], ...]}.
matgrp::SquareMatrix matrix_from_json(const json& j, const std::string& path = "matrix");
json matrix_rows(const matgrp::SquareMatrix& m);
json matrix_to_json(const matgrp::SquareMatrix& m);

/// {"field": ..., "n": ..., "generators": [matrix or rows, ...]}, closed
/// under multiplication on ingest.
matgrp::FiniteMatrixGroup group_from_json(const json& j, std::size_t cap);
json group_to_json(const matgrp::FiniteMatrixGroup& g);

/// {"type": "E", "rank": 8}, or an array of those for a product.
rootdata::RootSystem root_system_from_json(const json& j, const std::string& path = "system");
/// {"system": ..., "weights": [[int, ...], ...]}.
rootdata::RepWeights rep_from_json(const json& j);
json vec_to_json(const rootdata::Vec& v);

/// "Q" or {"minpoly": [int, ...]} (lowest coefficient first).
frobenius::NumberField number_field_from_json(const json& j, const std::string& path = "field");
json number_field_to_json(const frobenius::NumberField& k);
/// Integer, "a/b" string or [num, den].
frobenius::Rational rational_from_json(const json& j, const std::string& path);
json rational_to_json(const frobenius::Rational& r);
/// Coefficients lowest first; over a number field each one is an array of
/// power-basis coordinates.
frobenius::ExactPolynomial polynomial_from_json(const frobenius::NumberField& k, const json& j,
                                                const std::string& path);
json polynomial_to_json(const frobenius::ExactPolynomial& p);

frobenius::FrobTable frob_table_from_json(const json& j);
json frob_table_to_json(const frobenius::FrobTable& t);
json purity_to_json(const frobenius::PurityReport& r);
json table_report_to_json(const frobenius::TableReport& r);

/// Parses text, turning syntax errors into MalformedInput with the byte offset.
json parse_json(const std::string& text, const std::string& origin);

}  // namespace saturate::cli
