#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../groupoid.hpp"
#include "../loops.hpp"
#include "../rational.hpp"
#include "../subgroup.hpp"
#include "ast.hpp"

namespace cyclo::logic {

/// Finite windows into the infinite quantification domains.
struct Bounds {
  int64_t arrow_disp = 8;   // |disp| cap for universally quantified arrows
  int64_t index = 8;        // cap substituted for the symbolic bound B
  int64_t witness_depth = 8;  // |disp| cap for existential arrow search
};

/// A sorted element of a structure.
struct Value {
  Sort sort = Sort::object;
  int64_t a = 0;  // object index, or arrow source
  int64_t b = 0;  // arrow displacement
  Rat q;          // group element

  friend bool operator==(const Value& x, const Value& y) {
    if (x.sort != y.sort) return false;
    switch (x.sort) {
      case Sort::object: return x.a == y.a;
      case Sort::arrow: return x.a == y.a && x.b == y.b;
      case Sort::group: return x.q == y.q;
    }
    return false;
  }

  static Value object(int64_t i) { return Value{Sort::object, i, 0, Rat()}; }
  static Value arrow(int64_t src, int64_t disp) { return Value{Sort::arrow, src, disp, Rat()}; }
  static Value group(Rat q) { return Value{Sort::group, 0, 0, std::move(q)}; }
};

std::string value_str(const Value& v);

/// A model presented to the checker: bounded domain enumerators, function and
/// predicate interpretations, optional native macro evaluation and witness
/// hints.
class Structure {
 public:
  virtual ~Structure() = default;
  virtual std::string name() const = 0;

  virtual bool supports_sort(Sort) const = 0;
  virtual bool supports_function(TermKind) const = 0;
  virtual bool supports_macros() const { return false; }

  /// Domain of a sort; *exhaustive reports whether the whole sort was listed.
  virtual std::vector<Value> domain(Sort, const Bounds&, bool* exhaustive) const = 0;

  /// Arrows with the given domain object (for chained enumeration); only for
  /// structures with the arrow sort.
  virtual std::vector<Value> arrows_from(int64_t obj, int64_t disp_bound,
                                         bool positive_only) const;

  /// Partial function application; nullopt when undefined. exp resolves pow.
  virtual std::optional<Value> apply_func(TermKind fn, const std::vector<Value>& args,
                                          int64_t exp) const = 0;

  virtual bool holds(const std::string& pred, const std::vector<Value>& args) const = 0;

  /// Exact native evaluation of a macro atom; nullopt defers to expansion.
  virtual std::optional<bool> eval_macro(const MacroApp& app,
                                         const std::vector<std::vector<Value>>& groups) const {
    (void)app;
    (void)groups;
    return std::nullopt;
  }

  /// Extra existential witness candidates for a tuple of bound variables,
  /// derived from the body and the surrounding assignment.
  virtual std::vector<std::vector<Value>> witness_candidates(
      const Formula& exists_node, const std::vector<std::pair<std::string, Value>>& env) const {
    (void)exists_node;
    (void)env;
    return {};
  }

  /// Size of the rotation symmetry group (1 = none); used to restrict the
  /// first universally quantified variable to orbit representatives.
  virtual int64_t rotation_symmetry() const { return 1; }
};

/// X_n with P, T and the elementary cycles.
class GroupoidStructure final : public Structure {
 public:
  explicit GroupoidStructure(Groupoid g) : g_(g) {}

  std::string name() const override { return "X_" + std::to_string(g_.n); }
  bool supports_sort(Sort s) const override { return s != Sort::group; }
  bool supports_function(TermKind fn) const override;
  bool supports_macros() const override { return true; }
  std::vector<Value> domain(Sort, const Bounds&, bool* exhaustive) const override;
  std::vector<Value> arrows_from(int64_t obj, int64_t disp_bound,
                                 bool positive_only) const override;
  std::optional<Value> apply_func(TermKind fn, const std::vector<Value>& args,
                                  int64_t exp) const override;
  bool holds(const std::string& pred, const std::vector<Value>& args) const override;
  std::optional<bool> eval_macro(const MacroApp& app,
                                 const std::vector<std::vector<Value>>& groups) const override;
  std::vector<std::vector<Value>> witness_candidates(
      const Formula& exists_node,
      const std::vector<std::pair<std::string, Value>>& env) const override;
  int64_t rotation_symmetry() const override { return g_.n; }

  const Groupoid& model() const { return g_; }

 private:
  Groupoid g_;
};

/// An ordered subgroup of Q as a one-sorted ordered-group structure; the
/// group domain is a deterministic finite sample.
class SubgroupStructure final : public Structure {
 public:
  explicit SubgroupStructure(Subgroup h) : h_(std::move(h)) {}

  std::string name() const override;
  bool supports_sort(Sort s) const override { return s == Sort::group; }
  bool supports_function(TermKind fn) const override;
  std::vector<Value> domain(Sort, const Bounds&, bool* exhaustive) const override;
  std::optional<Value> apply_func(TermKind fn, const std::vector<Value>& args,
                                  int64_t exp) const override;
  bool holds(const std::string& pred, const std::vector<Value>& args) const override;
  std::vector<std::vector<Value>> witness_candidates(
      const Formula& exists_node,
      const std::vector<std::pair<std::string, Value>>& env) const override;

  const Subgroup& group() const { return h_; }

 private:
  Subgroup h_;
};

}  // namespace cyclo::logic
