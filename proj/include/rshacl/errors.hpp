// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RSHACL_ERRORS_HPP
#define RSHACL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rshacl {

/// Location of a token or AST node in a source file. Columns are 1-based
/// and `col_end` is exclusive.
struct SourceSpan {
  std::string file;
  int line = 0;
  int col_begin = 0;
  int col_end = 0;

  bool operator==(const SourceSpan&) const = default;

  std::string to_string() const {
    if (line == 0) return file.empty() ? std::string("<builtin>") : file;
    return file + ":" + std::to_string(line) + ":" + std::to_string(col_begin);
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lexical or syntactic error in a graph or schema file.
struct ParseError : Error {
  SourceSpan span;
  ParseError(SourceSpan s, const std::string& msg)
      : Error(s.to_string() + ": " + msg), span(std::move(s)) {}
};

/// Violation of a schema well-formedness rule (duplicate head, undefined
/// shape name, shape name in a target query, zero cardinality bound).
struct SchemaError : Error {
  using Error::Error;
};

/// Lattice operation applied to operands over different vocabularies or
/// domains.
struct VocabularyError : Error {
  using Error::Error;
};

/// Unknown shape name or constant encountered during evaluation.
struct EvalError : Error {
  using Error::Error;
};

/// A configurable search-space cap was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

/// A broken internal invariant (e.g. a fixpoint iteration that should be
/// monotone failed to stabilize).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace rshacl

#endif  // RSHACL_ERRORS_HPP
