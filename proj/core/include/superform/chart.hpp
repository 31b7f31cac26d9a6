#pragma once

#include "superform/frac.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sform {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

enum class SymbolKind : uint8_t { Coordinate, Fiber, Parameter, FormalFunction };

struct Symbol {
  std::string name;
  Parity parity = Parity::Even;
  SymbolKind kind = SymbolKind::Coordinate;
  std::vector<int32_t> fn_args;  // coordinate ids, FormalFunction only

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Parameter square rewrite: sym^2 -> scalar * prod(param ^ power).
struct RewriteTargetSpec {
  GRat scalar{1};
  std::vector<std::pair<std::string, int>> powers;
};

struct ParamSpec {
  std::string name;
  Parity parity = Parity::Even;
  std::optional<RewriteTargetSpec> square;

  ParamSpec() = default;
  ParamSpec(std::string n) : name(std::move(n)) {}
  ParamSpec(std::string n, Parity p) : name(std::move(n)), parity(p) {}
  ParamSpec(std::string n, RewriteTargetSpec sq) : name(std::move(n)), square(std::move(sq)) {}
};

struct FnSpec {
  std::string name;
  std::vector<std::string> args;
};

enum class Provenance : uint8_t { Base, PiT, T };

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// Ordered symbol table of one coordinate chart: generators (coordinates and,
/// on extensions, fibers), parameters and formal function symbols. Immutable;
/// extensions return new charts whose generator ids extend the parent's.
class Chart {
 public:
  static constexpr int32_t kAuxBase = 1 << 20;

  static ChartPtr make(const std::vector<std::string>& even_names,
                       const std::vector<std::string>& odd_names,
                       const std::vector<ParamSpec>& params = {},
                       const std::vector<FnSpec>& fns = {});

  ChartPtr pit_extension() const;
  ChartPtr t_extension() const;

  /// Same chart plus extra generators/parameters; provenance is preserved.
  ChartPtr extended(const std::vector<std::pair<std::string, Parity>>& extra_gens,
                    const std::vector<ParamSpec>& extra_params) const;

  Provenance provenance() const { return prov_; }
  bool is_extension() const { return prov_ != Provenance::Base; }

  int32_t generator_count() const { return static_cast<int32_t>(gens_.size()); }
  int32_t base_generator_count() const { return base_gen_count_; }
  int32_t aux_count() const { return static_cast<int32_t>(aux_.size()); }

  const Symbol& symbol(int32_t id) const;
  bool is_generator(int32_t id) const { return id >= 0 && id < generator_count(); }
  bool has(int32_t id) const;
  Parity parity(int32_t id) const { return symbol(id).parity; }

  std::optional<int32_t> find(std::string_view name) const;
  int32_t require(std::string_view name) const;

  std::vector<int32_t> generator_ids() const;
  std::vector<int32_t> aux_ids() const;

  /// Fiber generator attached to a base generator (extensions only).
  int32_t fiber_of(int32_t base_gen) const;
  int32_t base_of(int32_t fiber_gen) const;
  bool is_fiber(int32_t id) const;

  const RewriteSet& rewrites() const { return rewrites_; }
  bool param_has_rewrite(int32_t id) const { return rewrites_.count(id) != 0; }

  static bool same(const Chart& a, const Chart& b);
  static bool extends(const Chart& child, const Chart& parent);
  static void check_same(const ChartPtr& a, const ChartPtr& b);

 private:
  std::vector<Symbol> gens_;
  std::vector<Symbol> aux_;
  int32_t base_gen_count_ = 0;
  Provenance prov_ = Provenance::Base;
  RewriteSet rewrites_;

  void insert_param(const ParamSpec& spec);
  void insert_fn(const FnSpec& spec);
  void check_fresh(const std::string& name) const;
  ChartPtr fiber_extension(char prefix, bool flip_parity) const;
};

}  // namespace sform
