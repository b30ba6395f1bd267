#include "stlc/syntax.hpp"

#include <algorithm>
#include <utility>

#include "stlc/overload.hpp"
#include "json.hpp"

namespace stlc {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

TyPtr ty_bool() {
  static const TyPtr instance = std::make_shared<const Ty>(Ty{Ty::Bool{}});
  return instance;
}

TyPtr ty_arrow(TyPtr dom, TyPtr cod) {
  return std::make_shared<const Ty>(Ty{Ty::Arrow{std::move(dom), std::move(cod)}});
}

bool is_bool(const TyPtr& ty) {
  return ty && std::holds_alternative<Ty::Bool>(ty->node);
}

const Ty::Arrow* as_arrow(const TyPtr& ty) {
  return ty ? std::get_if<Ty::Arrow>(&ty->node) : nullptr;
}

bool type_eq(const TyPtr& a, const TyPtr& b) {
  if (!a || !b) return !a && !b;
  if (a == b) return true;
  return std::visit(
      overloaded{
          [&](const Ty::Bool&) { return is_bool(b); },
          [&](const Ty::Arrow& l) {
            const auto* r = as_arrow(b);
            return r != nullptr && type_eq(l.dom, r->dom) && type_eq(l.cod, r->cod);
          },
      },
      a->node);
}

// ---------------------------------------------------------------------------
// Surface terms
// ---------------------------------------------------------------------------

namespace surface {

SurfacePtr var(std::string name) {
  return std::make_shared<const SurfaceTerm>(SurfaceTerm{SurfaceTerm::Var{std::move(name)}});
}
SurfacePtr lam(std::string name, TyPtr ann, SurfacePtr body) {
  return std::make_shared<const SurfaceTerm>(
      SurfaceTerm{SurfaceTerm::Lam{std::move(name), std::move(ann), std::move(body)}});
}
SurfacePtr lam(std::string name, SurfacePtr body) {
  return lam(std::move(name), nullptr, std::move(body));
}
SurfacePtr app(SurfacePtr fun, SurfacePtr arg) {
  return std::make_shared<const SurfaceTerm>(
      SurfaceTerm{SurfaceTerm::App{std::move(fun), std::move(arg)}});
}
SurfacePtr lit(bool value) {
  return std::make_shared<const SurfaceTerm>(SurfaceTerm{SurfaceTerm::Lit{value}});
}
SurfacePtr ite(SurfacePtr cond, SurfacePtr then_branch, SurfacePtr else_branch) {
  return std::make_shared<const SurfaceTerm>(SurfaceTerm{
      SurfaceTerm::If{std::move(cond), std::move(then_branch), std::move(else_branch)}});
}

}  // namespace surface

bool surface_eq(const SurfacePtr& a, const SurfacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return std::visit(
      overloaded{
          [&](const SurfaceTerm::Var& l) {
            const auto* r = std::get_if<SurfaceTerm::Var>(&b->node);
            return r != nullptr && l.name == r->name;
          },
          [&](const SurfaceTerm::Lam& l) {
            const auto* r = std::get_if<SurfaceTerm::Lam>(&b->node);
            return r != nullptr && l.name == r->name && type_eq(l.ann, r->ann) &&
                   surface_eq(l.body, r->body);
          },
          [&](const SurfaceTerm::App& l) {
            const auto* r = std::get_if<SurfaceTerm::App>(&b->node);
            return r != nullptr && surface_eq(l.fun, r->fun) && surface_eq(l.arg, r->arg);
          },
          [&](const SurfaceTerm::Lit& l) {
            const auto* r = std::get_if<SurfaceTerm::Lit>(&b->node);
            return r != nullptr && l.value == r->value;
          },
          [&](const SurfaceTerm::If& l) {
            const auto* r = std::get_if<SurfaceTerm::If>(&b->node);
            return r != nullptr && surface_eq(l.cond, r->cond) &&
                   surface_eq(l.then_branch, r->then_branch) &&
                   surface_eq(l.else_branch, r->else_branch);
          },
      },
      a->node);
}

// ---------------------------------------------------------------------------
// Core terms
// ---------------------------------------------------------------------------

namespace core {

CorePtr var(std::size_t index) {
  return std::make_shared<const CoreTerm>(CoreTerm{CoreTerm::Var{index}});
}
CorePtr lam(TyPtr ann, CorePtr body) {
  return std::make_shared<const CoreTerm>(
      CoreTerm{CoreTerm::Lam{std::move(ann), std::move(body)}});
}
CorePtr lam(CorePtr body) { return lam(nullptr, std::move(body)); }
CorePtr app(CorePtr fun, CorePtr arg) {
  return std::make_shared<const CoreTerm>(CoreTerm{CoreTerm::App{std::move(fun), std::move(arg)}});
}
CorePtr lit(bool value) {
  return std::make_shared<const CoreTerm>(CoreTerm{CoreTerm::Lit{value}});
}
CorePtr tru() { return lit(true); }
CorePtr fls() { return lit(false); }
CorePtr ite(CorePtr cond, CorePtr then_branch, CorePtr else_branch) {
  return std::make_shared<const CoreTerm>(CoreTerm{
      CoreTerm::If{std::move(cond), std::move(then_branch), std::move(else_branch)}});
}

}  // namespace core

bool term_eq(const CorePtr& a, const CorePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return std::visit(
      overloaded{
          [&](const CoreTerm::Var& l) {
            const auto* r = std::get_if<CoreTerm::Var>(&b->node);
            return r != nullptr && l.index == r->index;
          },
          [&](const CoreTerm::Lam& l) {
            const auto* r = std::get_if<CoreTerm::Lam>(&b->node);
            return r != nullptr && type_eq(l.ann, r->ann) && term_eq(l.body, r->body);
          },
          [&](const CoreTerm::App& l) {
            const auto* r = std::get_if<CoreTerm::App>(&b->node);
            return r != nullptr && term_eq(l.fun, r->fun) && term_eq(l.arg, r->arg);
          },
          [&](const CoreTerm::Lit& l) {
            const auto* r = std::get_if<CoreTerm::Lit>(&b->node);
            return r != nullptr && l.value == r->value;
          },
          [&](const CoreTerm::If& l) {
            const auto* r = std::get_if<CoreTerm::If>(&b->node);
            return r != nullptr && term_eq(l.cond, r->cond) &&
                   term_eq(l.then_branch, r->then_branch) &&
                   term_eq(l.else_branch, r->else_branch);
          },
      },
      a->node);
}

namespace {

bool closed_at_depth(const CorePtr& t, std::size_t bound) {
  return std::visit(
      overloaded{
          [&](const CoreTerm::Var& v) { return v.index < bound; },
          [&](const CoreTerm::Lam& l) { return closed_at_depth(l.body, bound + 1); },
          [&](const CoreTerm::App& a) {
            return closed_at_depth(a.fun, bound) && closed_at_depth(a.arg, bound);
          },
          [&](const CoreTerm::Lit&) { return true; },
          [&](const CoreTerm::If& i) {
            return closed_at_depth(i.cond, bound) && closed_at_depth(i.then_branch, bound) &&
                   closed_at_depth(i.else_branch, bound);
          },
      },
      t->node);
}

}  // namespace

bool closed_at(const CorePtr& t, std::size_t scope) { return closed_at_depth(t, scope); }

CorePtr erase_annotations(const CorePtr& t) {
  return std::visit(
      overloaded{
          [&](const CoreTerm::Var&) { return t; },
          [&](const CoreTerm::Lam& l) { return core::lam(erase_annotations(l.body)); },
          [&](const CoreTerm::App& a) {
            return core::app(erase_annotations(a.fun), erase_annotations(a.arg));
          },
          [&](const CoreTerm::Lit&) { return t; },
          [&](const CoreTerm::If& i) {
            return core::ite(erase_annotations(i.cond), erase_annotations(i.then_branch),
                             erase_annotations(i.else_branch));
          },
      },
      t->node);
}

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

const CtxEntry& Ctx::at_index(std::size_t i) const {
  if (i >= entries.size()) {
    throw ScopeError("context index " + std::to_string(i) + " out of range (size " +
                     std::to_string(entries.size()) + ")");
  }
  return entries[entries.size() - 1 - i];
}

bool Ctx::has_name(const std::string& name) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const CtxEntry& e) { return e.name == name; });
}

// ---------------------------------------------------------------------------
// Name resolution
// ---------------------------------------------------------------------------

namespace {

CorePtr resolve_at(const SurfacePtr& t, const Ctx& ctx, std::vector<std::string>& binders) {
  return std::visit(
      overloaded{
          [&](const SurfaceTerm::Var& v) -> CorePtr {
            // Innermost binder first, then the context from the right.
            for (std::size_t d = 0; d < binders.size(); ++d) {
              if (binders[binders.size() - 1 - d] == v.name) return core::var(d);
            }
            for (std::size_t i = 0; i < ctx.size(); ++i) {
              if (ctx.at_index(i).name == v.name) return core::var(binders.size() + i);
            }
            throw UnboundVariable(v.name);
          },
          [&](const SurfaceTerm::Lam& l) -> CorePtr {
            binders.push_back(l.name);
            CorePtr body = resolve_at(l.body, ctx, binders);
            binders.pop_back();
            return core::lam(l.ann, std::move(body));
          },
          [&](const SurfaceTerm::App& a) -> CorePtr {
            return core::app(resolve_at(a.fun, ctx, binders), resolve_at(a.arg, ctx, binders));
          },
          [&](const SurfaceTerm::Lit& l) -> CorePtr { return core::lit(l.value); },
          [&](const SurfaceTerm::If& i) -> CorePtr {
            return core::ite(resolve_at(i.cond, ctx, binders),
                             resolve_at(i.then_branch, ctx, binders),
                             resolve_at(i.else_branch, ctx, binders));
          },
      },
      t->node);
}

// d-th member of x0, x1, ... with names already in ctx skipped.
std::string generated_name(std::size_t depth, const Ctx& ctx) {
  std::size_t produced = 0;
  for (std::size_t k = 0;; ++k) {
    std::string candidate = "x" + std::to_string(k);
    if (ctx.has_name(candidate)) continue;
    if (produced == depth) return candidate;
    ++produced;
  }
}

SurfacePtr unresolve_at(const CorePtr& t, const Ctx& ctx, std::size_t depth) {
  return std::visit(
      overloaded{
          [&](const CoreTerm::Var& v) -> SurfacePtr {
            if (v.index < depth) {
              return surface::var(generated_name(depth - 1 - v.index, ctx));
            }
            std::size_t ctx_index = v.index - depth;
            if (ctx_index >= ctx.size()) {
              throw ScopeError("index " + std::to_string(v.index) +
                               " exceeds available binders at depth " + std::to_string(depth));
            }
            return surface::var(ctx.at_index(ctx_index).name);
          },
          [&](const CoreTerm::Lam& l) -> SurfacePtr {
            return surface::lam(generated_name(depth, ctx), l.ann,
                                unresolve_at(l.body, ctx, depth + 1));
          },
          [&](const CoreTerm::App& a) -> SurfacePtr {
            return surface::app(unresolve_at(a.fun, ctx, depth), unresolve_at(a.arg, ctx, depth));
          },
          [&](const CoreTerm::Lit& l) -> SurfacePtr { return surface::lit(l.value); },
          [&](const CoreTerm::If& i) -> SurfacePtr {
            return surface::ite(unresolve_at(i.cond, ctx, depth),
                                unresolve_at(i.then_branch, ctx, depth),
                                unresolve_at(i.else_branch, ctx, depth));
          },
      },
      t->node);
}

}  // namespace

CorePtr resolve(const SurfacePtr& t, const Ctx& ctx) {
  std::vector<std::string> binders;
  return resolve_at(t, ctx, binders);
}

SurfacePtr unresolve(const CorePtr& t, const Ctx& ctx) { return unresolve_at(t, ctx, 0); }

// ---------------------------------------------------------------------------
// Nameless display form
// ---------------------------------------------------------------------------

namespace {

enum class Pos { Term, Fun, Atom };

std::string debruijn_type(const TyPtr& ty);  // forward

std::string debruijn_at(const CorePtr& t, Pos pos) {
  return std::visit(
      overloaded{
          [&](const CoreTerm::Var& v) { return "#" + std::to_string(v.index); },
          [&](const CoreTerm::Lam& l) {
            std::string s = "\\";
            if (l.ann) s += ":" + debruijn_type(l.ann);
            s += ". " + debruijn_at(l.body, Pos::Term);
            return pos == Pos::Term ? s : "(" + s + ")";
          },
          [&](const CoreTerm::App& a) {
            std::string s = debruijn_at(a.fun, Pos::Fun) + " " + debruijn_at(a.arg, Pos::Atom);
            return pos == Pos::Atom ? "(" + s + ")" : s;
          },
          [&](const CoreTerm::Lit& l) { return std::string(l.value ? "true" : "false"); },
          [&](const CoreTerm::If& i) {
            std::string s = "if " + debruijn_at(i.cond, Pos::Term) + " then " +
                            debruijn_at(i.then_branch, Pos::Term) + " else " +
                            debruijn_at(i.else_branch, Pos::Term);
            return pos == Pos::Term ? s : "(" + s + ")";
          },
      },
      t->node);
}

std::string debruijn_type(const TyPtr& ty) {
  return std::visit(
      overloaded{
          [&](const Ty::Bool&) { return std::string("Bool"); },
          [&](const Ty::Arrow& a) {
            std::string dom = debruijn_type(a.dom);
            if (as_arrow(a.dom) != nullptr) dom = "(" + dom + ")";
            return dom + " -> " + debruijn_type(a.cod);
          },
      },
      ty->node);
}

}  // namespace

std::string to_debruijn(const CorePtr& t) { return debruijn_at(t, Pos::Term); }

// ---------------------------------------------------------------------------
// JSON encoding
// ---------------------------------------------------------------------------

namespace {

using ojson = nlohmann::ordered_json;

ojson type_to_ojson(const TyPtr& ty) {
  return std::visit(
      overloaded{
          [&](const Ty::Bool&) { return ojson("Bool"); },
          [&](const Ty::Arrow& a) {
            return ojson{{"arrow", ojson::array({type_to_ojson(a.dom), type_to_ojson(a.cod)})}};
          },
      },
      ty->node);
}

ojson term_to_ojson(const CorePtr& t) {
  return std::visit(
      overloaded{
          [&](const CoreTerm::Var& v) { return ojson{{"var", v.index}}; },
          [&](const CoreTerm::Lam& l) {
            ojson lam;
            lam["ann"] = l.ann ? type_to_ojson(l.ann) : ojson(nullptr);
            lam["body"] = term_to_ojson(l.body);
            return ojson{{"lam", std::move(lam)}};
          },
          [&](const CoreTerm::App& a) {
            ojson app;
            app["fun"] = term_to_ojson(a.fun);
            app["arg"] = term_to_ojson(a.arg);
            return ojson{{"app", std::move(app)}};
          },
          [&](const CoreTerm::Lit& l) { return ojson{{"bool", l.value}}; },
          [&](const CoreTerm::If& i) {
            ojson f;
            f["cond"] = term_to_ojson(i.cond);
            f["then"] = term_to_ojson(i.then_branch);
            f["else"] = term_to_ojson(i.else_branch);
            return ojson{{"if", std::move(f)}};
          },
      },
      t->node);
}

[[noreturn]] void bad_json(const std::string& what) {
  throw ParseError(SourceSpan{0, 0}, "invalid term encoding: " + what);
}

TyPtr type_from_ojson(const ojson& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Bool") return ty_bool();
    bad_json("unknown type name '" + j.get<std::string>() + "'");
  }
  if (j.is_object() && j.contains("arrow")) {
    const auto& arr = j["arrow"];
    if (!arr.is_array() || arr.size() != 2) bad_json("\"arrow\" wants a two-element array");
    return ty_arrow(type_from_ojson(arr[0]), type_from_ojson(arr[1]));
  }
  bad_json("expected a type");
}

CorePtr term_from_ojson(const ojson& j) {
  if (!j.is_object() || j.size() != 1) bad_json("expected a single-key object");
  const auto& [key, value] = *j.items().begin();
  if (key == "var") {
    if (!value.is_number_unsigned()) bad_json("\"var\" wants an unsigned index");
    return core::var(value.get<std::size_t>());
  }
  if (key == "lam") {
    if (!value.is_object() || !value.contains("ann") || !value.contains("body")) {
      bad_json("\"lam\" wants {ann, body}");
    }
    TyPtr ann = value["ann"].is_null() ? nullptr : type_from_ojson(value["ann"]);
    return core::lam(std::move(ann), term_from_ojson(value["body"]));
  }
  if (key == "app") {
    if (!value.is_object() || !value.contains("fun") || !value.contains("arg")) {
      bad_json("\"app\" wants {fun, arg}");
    }
    return core::app(term_from_ojson(value["fun"]), term_from_ojson(value["arg"]));
  }
  if (key == "bool") {
    if (!value.is_boolean()) bad_json("\"bool\" wants true or false");
    return core::lit(value.get<bool>());
  }
  if (key == "if") {
    if (!value.is_object() || !value.contains("cond") || !value.contains("then") ||
        !value.contains("else")) {
      bad_json("\"if\" wants {cond, then, else}");
    }
    return core::ite(term_from_ojson(value["cond"]), term_from_ojson(value["then"]),
                     term_from_ojson(value["else"]));
  }
  bad_json("unknown node kind '" + key + "'");
}

ojson parse_json_text(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(SourceSpan{0, text.size()}, "malformed JSON");
  return j;
}

}  // namespace

std::string term_to_json(const CorePtr& t) { return term_to_ojson(t).dump(); }

std::string type_to_json(const TyPtr& ty) { return type_to_ojson(ty).dump(); }

CorePtr term_from_json(const std::string& text) { return term_from_ojson(parse_json_text(text)); }

TyPtr type_from_json(const std::string& text) { return type_from_ojson(parse_json_text(text)); }

}  // namespace stlc
