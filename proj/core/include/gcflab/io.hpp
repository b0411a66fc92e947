// JSON (de)serialization for continued fraction specs, series, and sequence
// pairs, plus small file helpers.  The functions speak text so that the JSON
// library stays an implementation detail; the schema is documented in the
// repository README and is part of the CLI contract.

#pragma once

#include <string>

#include "gcflab/cf.hpp"
#include "gcflab/generate.hpp"

namespace gcflab {

// Rationals are written "p" or "p/q" (readers also take plain JSON
// integers, never floats); polynomials are coefficient lists, constant term
// first.  Rule kinds: "explicit", "polynomial", "rational", "interleaved",
// "hybrid".
std::string spec_to_json(const cf_spec& spec);
cf_spec spec_from_json(const std::string& text);  // throws parse_error

std::string series_to_json(const series_spec& series);
series_spec series_from_json(const std::string& text);

std::string sequences_to_json(const sequence_pair& seqs);
sequence_pair sequences_from_json(const std::string& text);

std::string read_text_file(const std::string& path);  // throws std::runtime_error
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gcflab
