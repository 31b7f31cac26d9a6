#include "superform/chart.hpp"

#include <algorithm>

namespace sform {

void Chart::check_fresh(const std::string& name) const {
  if (name.empty()) throw Error("empty symbol name");
  if (find(name)) throw Error("duplicate symbol name: " + name);
}

void Chart::insert_param(const ParamSpec& spec) {
  check_fresh(spec.name);
  int32_t id = kAuxBase + static_cast<int32_t>(aux_.size());
  aux_.push_back(Symbol{spec.name, spec.parity, SymbolKind::Parameter, {}});
  if (!spec.square) return;
  if (spec.parity != Parity::Even)
    throw Error("parameter with a square rewrite must be even: " + spec.name);
  Poly num = Poly::scalar(spec.square->scalar);
  Poly den = Poly::scalar(GRat(1));
  for (const auto& [pname, power] : spec.square->powers) {
    auto pid = find(pname);
    if (!pid || symbol(*pid).kind != SymbolKind::Parameter)
      throw Error("rewrite target refers to unknown parameter: " + pname);
    if (symbol(*pid).parity != Parity::Even)
      throw Error("rewrite target contains odd symbols: " + pname);
    if (rewrites_.count(*pid))
      throw Error("rewrite target may not contain rewritable parameters: " + pname);
    if (power >= 0)
      num *= Poly::variable(Var{*pid, {}}, power);
    else
      den *= Poly::variable(Var{*pid, {}}, -power);
  }
  rewrites_.emplace(id, Frac::quotient(std::move(num), den, RewriteSet{}));
}

void Chart::insert_fn(const FnSpec& spec) {
  check_fresh(spec.name);
  std::vector<int32_t> args;
  for (const auto& a : spec.args) {
    auto id = find(a);
    if (!id || !is_generator(*id) || symbol(*id).kind != SymbolKind::Coordinate)
      throw Error("formal function argument is not a coordinate: " + a);
    if (symbol(*id).parity != Parity::Even)
      throw Error("formal function arguments must be even coordinates: " + a);
    if (std::find(args.begin(), args.end(), *id) != args.end())
      throw Error("repeated formal function argument: " + a);
    args.push_back(*id);
  }
  aux_.push_back(Symbol{spec.name, Parity::Even, SymbolKind::FormalFunction, std::move(args)});
}

ChartPtr Chart::make(const std::vector<std::string>& even_names,
                     const std::vector<std::string>& odd_names,
                     const std::vector<ParamSpec>& params, const std::vector<FnSpec>& fns) {
  auto chart = std::make_shared<Chart>();
  for (const auto& n : even_names) {
    chart->check_fresh(n);
    chart->gens_.push_back(Symbol{n, Parity::Even, SymbolKind::Coordinate, {}});
  }
  for (const auto& n : odd_names) {
    chart->check_fresh(n);
    chart->gens_.push_back(Symbol{n, Parity::Odd, SymbolKind::Coordinate, {}});
  }
  chart->base_gen_count_ = static_cast<int32_t>(chart->gens_.size());
  for (const auto& p : params) chart->insert_param(p);
  for (const auto& f : fns) chart->insert_fn(f);
  return chart;
}

ChartPtr Chart::fiber_extension(char prefix, bool flip_parity) const {
  if (is_extension()) throw Error("chart is already an extension");
  auto chart = std::make_shared<Chart>(*this);
  chart->prov_ = flip_parity ? Provenance::PiT : Provenance::T;
  for (int32_t g = 0; g < base_gen_count_; ++g) {
    std::string fname = std::string(1, prefix) + gens_[g].name;
    chart->check_fresh(fname);
    Parity p = flip_parity ? flip(gens_[g].parity) : gens_[g].parity;
    chart->gens_.push_back(Symbol{std::move(fname), p, SymbolKind::Fiber, {}});
  }
  return chart;
}

ChartPtr Chart::pit_extension() const { return fiber_extension('d', true); }
ChartPtr Chart::t_extension() const { return fiber_extension('z', false); }

ChartPtr Chart::extended(const std::vector<std::pair<std::string, Parity>>& extra_gens,
                         const std::vector<ParamSpec>& extra_params) const {
  auto chart = std::make_shared<Chart>(*this);
  for (const auto& [name, parity] : extra_gens) {
    chart->check_fresh(name);
    chart->gens_.push_back(Symbol{name, parity, SymbolKind::Coordinate, {}});
  }
  for (const auto& p : extra_params) chart->insert_param(p);
  return chart;
}

const Symbol& Chart::symbol(int32_t id) const {
  if (id >= 0 && id < generator_count()) return gens_[id];
  int32_t k = id - kAuxBase;
  if (k >= 0 && k < aux_count()) return aux_[k];
  throw Error("unknown symbol id");
}

bool Chart::has(int32_t id) const {
  if (id >= 0 && id < generator_count()) return true;
  int32_t k = id - kAuxBase;
  return k >= 0 && k < aux_count();
}

std::optional<int32_t> Chart::find(std::string_view name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int32_t>(i);
  for (size_t i = 0; i < aux_.size(); ++i)
    if (aux_[i].name == name) return kAuxBase + static_cast<int32_t>(i);
  return std::nullopt;
}

int32_t Chart::require(std::string_view name) const {
  auto id = find(name);
  if (!id) throw Error("unknown symbol: " + std::string(name));
  return *id;
}

std::vector<int32_t> Chart::generator_ids() const {
  std::vector<int32_t> out(gens_.size());
  for (size_t i = 0; i < gens_.size(); ++i) out[i] = static_cast<int32_t>(i);
  return out;
}

std::vector<int32_t> Chart::aux_ids() const {
  std::vector<int32_t> out(aux_.size());
  for (size_t i = 0; i < aux_.size(); ++i) out[i] = kAuxBase + static_cast<int32_t>(i);
  return out;
}

int32_t Chart::fiber_of(int32_t base_gen) const {
  if (!is_extension()) throw Error("chart has no fibers");
  if (base_gen < 0 || base_gen >= base_gen_count_) throw Error("not a base generator");
  return base_gen_count_ + base_gen;
}

int32_t Chart::base_of(int32_t fiber_gen) const {
  if (!is_fiber(fiber_gen)) throw Error("not a fiber generator");
  return fiber_gen - base_gen_count_;
}

bool Chart::is_fiber(int32_t id) const {
  return is_extension() && id >= base_gen_count_ && id < 2 * base_gen_count_ &&
         gens_[id].kind == SymbolKind::Fiber;
}

bool Chart::same(const Chart& a, const Chart& b) {
  if (&a == &b) return true;
  return a.prov_ == b.prov_ && a.base_gen_count_ == b.base_gen_count_ && a.gens_ == b.gens_ &&
         a.aux_ == b.aux_ && a.rewrites_ == b.rewrites_;
}

bool Chart::extends(const Chart& child, const Chart& parent) {
  if (child.gens_.size() < parent.gens_.size() || child.aux_.size() < parent.aux_.size())
    return false;
  if (!std::equal(parent.gens_.begin(), parent.gens_.end(), child.gens_.begin())) return false;
  if (!std::equal(parent.aux_.begin(), parent.aux_.end(), child.aux_.begin())) return false;
  for (const auto& [id, target] : parent.rewrites_) {
    auto it = child.rewrites_.find(id);
    if (it == child.rewrites_.end() || !(it->second == target)) return false;
  }
  return true;
}

void Chart::check_same(const ChartPtr& a, const ChartPtr& b) {
  if (a == b) return;
  if (!a || !b || !same(*a, *b)) throw Error("chart mismatch");
}

}  // namespace sform
