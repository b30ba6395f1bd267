#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stlc {

// Base of everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A de Bruijn index or level fell outside the scope it was used at.
struct ScopeError : Error {
  using Error::Error;
};

// Evaluation ran out of its step budget. Unreachable for well-typed
// terms under the default budget.
struct FuelExhausted : Error {
  FuelExhausted() : Error("evaluation fuel exhausted") {}
};

// The rewriting oracle exceeded its step limit.
struct StepLimit : Error {
  std::size_t limit;
  explicit StepLimit(std::size_t limit_)
      : Error("no normal form within " + std::to_string(limit_) + " rewrite steps"),
        limit(limit_) {}
};

// A shift would have produced a negative de Bruijn index.
struct NegativeIndex : Error {
  using Error::Error;
};

// A boolean constant was applied as if it were a function.
struct NotApplicable : Error {
  using Error::Error;
};

// quote_whnf met a neutral value; its input was not the evaluation of a
// closed term.
struct NeutralInWhnf : Error {
  using Error::Error;
};

// Same condition, reported by the denotational engine.
struct NeutralInDenotation : Error {
  using Error::Error;
};

// A type's value space exceeds the enumeration limit. `cardinality` is
// saturated at the probe bound when `exact` is false.
struct TypeTooLarge : Error {
  std::uint64_t cardinality;
  bool exact;
  TypeTooLarge(std::uint64_t cardinality_, bool exact_)
      : Error("type has " + std::string(exact_ ? "" : "at least ") +
              std::to_string(cardinality_) + " values, too many to enumerate"),
        cardinality(cardinality_),
        exact(exact_) {}
};

// A free name with no binding in the supplied context.
struct UnboundVariable : Error {
  std::string name;
  explicit UnboundVariable(std::string name_)
      : Error("unbound variable '" + name_ + "'"), name(std::move(name_)) {}
};

// Byte range into the offending input; begin <= end <= input length.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct ParseError : Error {
  SourceSpan span;
  ParseError(SourceSpan span_, const std::string& message)
      : Error("parse error at " + std::to_string(span_.begin) + ".." +
              std::to_string(span_.end) + ": " + message),
        span(span_) {}
};

}  // namespace stlc
