#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace factlink {

// Token ids are dense from 0; see Tokenizer for the reserved ids.
using TokenId = std::uint32_t;

using EntityId = std::string;
using RelationId = std::string;
using FactId = std::string;

// Reserved target for sentences that express no KG fact.
inline constexpr char kNullFactId[] = "NULL";
// Surface label under which the NULL fact is generated and looked up.
inline constexpr char kNullFactLabel[] = "None";
// Prefix marking unconstrained generations that resolve to no KG fact.
inline constexpr char kInvalidMarkerPrefix[] = "INVALID:";
// Joiner between sentence and fact labels in cross-encoder inputs, and
// between per-language labels in concatenated embeddings.
inline constexpr char kSegmentJoiner[] = " || ";

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadError : Error {
  using Error::Error;
};

struct ArtifactError : Error {
  using Error::Error;
};

struct DecodeError : Error {
  using Error::Error;
};

struct EvalError : Error {
  using Error::Error;
};

}  // namespace factlink
