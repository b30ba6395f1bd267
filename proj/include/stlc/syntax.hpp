#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "stlc/errors.hpp"

namespace stlc {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;

// Simple types: booleans and function arrows. Immutable, shared freely.
struct Ty {
  struct Bool {};
  struct Arrow {
    TyPtr dom;
    TyPtr cod;
  };
  std::variant<Bool, Arrow> node;
};

TyPtr ty_bool();
TyPtr ty_arrow(TyPtr dom, TyPtr cod);

bool is_bool(const TyPtr& ty);
const Ty::Arrow* as_arrow(const TyPtr& ty);

// Structural equality; null-tolerant so it also compares optional
// annotations (both null compare equal).
bool type_eq(const TyPtr& a, const TyPtr& b);

// ---------------------------------------------------------------------------
// Named surface terms
// ---------------------------------------------------------------------------

struct SurfaceTerm;
using SurfacePtr = std::shared_ptr<const SurfaceTerm>;

struct SurfaceTerm {
  struct Var {
    std::string name;
  };
  struct Lam {
    std::string name;
    TyPtr ann;  // null when the binder is unannotated
    SurfacePtr body;
  };
  struct App {
    SurfacePtr fun;
    SurfacePtr arg;
  };
  struct Lit {
    bool value;
  };
  struct If {
    SurfacePtr cond;
    SurfacePtr then_branch;
    SurfacePtr else_branch;
  };
  std::variant<Var, Lam, App, Lit, If> node;
};

namespace surface {
SurfacePtr var(std::string name);
SurfacePtr lam(std::string name, TyPtr ann, SurfacePtr body);
SurfacePtr lam(std::string name, SurfacePtr body);
SurfacePtr app(SurfacePtr fun, SurfacePtr arg);
SurfacePtr lit(bool value);
SurfacePtr ite(SurfacePtr cond, SurfacePtr then_branch, SurfacePtr else_branch);
}  // namespace surface

bool surface_eq(const SurfacePtr& a, const SurfacePtr& b);

// ---------------------------------------------------------------------------
// Nameless core terms (de Bruijn indices)
// ---------------------------------------------------------------------------

struct CoreTerm;
using CorePtr = std::shared_ptr<const CoreTerm>;

struct CoreTerm {
  struct Var {
    std::size_t index;
  };
  struct Lam {
    TyPtr ann;  // null when the binder is unannotated
    CorePtr body;
  };
  struct App {
    CorePtr fun;
    CorePtr arg;
  };
  struct Lit {
    bool value;
  };
  struct If {
    CorePtr cond;
    CorePtr then_branch;
    CorePtr else_branch;
  };
  std::variant<Var, Lam, App, Lit, If> node;
};

namespace core {
CorePtr var(std::size_t index);
CorePtr lam(CorePtr body);
CorePtr lam(TyPtr ann, CorePtr body);
CorePtr app(CorePtr fun, CorePtr arg);
CorePtr lit(bool value);
CorePtr tru();
CorePtr fls();
CorePtr ite(CorePtr cond, CorePtr then_branch, CorePtr else_branch);
}  // namespace core

bool term_eq(const CorePtr& a, const CorePtr& b);

// A term is closed at scope n iff every Var index i under j enclosing
// lambdas satisfies i < j + n.
bool closed_at(const CorePtr& t, std::size_t scope);

CorePtr erase_annotations(const CorePtr& t);

// Nameless display form: `#i`, `\. b`, `\:T. b`, `f a`, `true`,
// `if c then a else b`. Output only, used for goldens and diagnostics.
std::string to_debruijn(const CorePtr& t);

// ---------------------------------------------------------------------------
// Typing contexts
// ---------------------------------------------------------------------------

struct CtxEntry {
  std::string name;
  TyPtr ty;
};

// Ordered name/type bindings; the RIGHTMOST entry binds de Bruijn index 0.
struct Ctx {
  std::vector<CtxEntry> entries;

  std::size_t size() const { return entries.size(); }
  // Entry binding index i (counted from the right). Throws ScopeError.
  const CtxEntry& at_index(std::size_t i) const;
  bool has_name(const std::string& name) const;
};

// ---------------------------------------------------------------------------
// Name resolution
// ---------------------------------------------------------------------------

// Replace names by de Bruijn indices; the innermost binder is index 0 and
// free names resolve into ctx (rightmost entry = index 0). Shadowing picks
// the innermost binding. Throws UnboundVariable.
CorePtr resolve(const SurfacePtr& t, const Ctx& ctx);

// Inverse direction: indices back to names. Binder names are generated
// deterministically as x0, x1, ... by binder depth, skipping names already
// present in ctx, so resolve(unresolve(t, c), c) == t. Throws ScopeError
// when an index exceeds the available binders.
SurfacePtr unresolve(const CorePtr& t, const Ctx& ctx);

// ---------------------------------------------------------------------------
// JSON encoding
// ---------------------------------------------------------------------------
//
// Terms:  {"var":N} | {"lam":{"ann":TY|null,"body":T}}
//       | {"app":{"fun":T,"arg":T}} | {"bool":true|false}
//       | {"if":{"cond":T,"then":T,"else":T}}
// Types:  "Bool" | {"arrow":[TY,TY]}
//
// Emission is compact and field order is exactly as documented above, so
// encodings are byte-stable. Decoding accepts any field order.

std::string term_to_json(const CorePtr& t);
std::string type_to_json(const TyPtr& ty);
// Throws ParseError (see parser.hpp) on malformed input.
CorePtr term_from_json(const std::string& text);
TyPtr type_from_json(const std::string& text);

}  // namespace stlc
