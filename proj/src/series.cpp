#include "patav/series.hpp"

#include <algorithm>
#include <sstream>

namespace patav {

namespace {

const DistPoly kZeroPoly{};

DistPoly power_of(const BigInt& c, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= c;
  return DistPoly::constant(r);
}

}  // namespace

char to_char(Var v) {
  switch (v) {
    case Var::X: return 'x';
    case Var::S: return 's';
    case Var::U: return 'u';
  }
  return '?';
}

int Monomial::exponent(Var v) const {
  switch (v) {
    case Var::X: return x;
    case Var::S: return s;
    case Var::U: return u;
  }
  return 0;
}

MultiSeries::MultiSeries(std::vector<Var> vars, std::vector<int> orders, std::optional<int> t_order)
    : vars_(std::move(vars)), orders_(std::move(orders)), complete_(vars_.size(), false), t_order_(t_order) {
  if (vars_.size() != orders_.size()) throw SeriesError("variables and orders differ in length");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (orders_[i] < 0) throw SeriesError("truncation orders must be >= 0");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw SeriesError("repeated series variable");
  }
  if (t_order_ && *t_order_ < 0) throw SeriesError("t order must be >= 0");
  strides_.assign(vars_.size(), 1);
  std::size_t total = 1;
  for (std::size_t i = vars_.size(); i-- > 0;) {
    strides_[i] = total;
    total *= static_cast<std::size_t>(orders_[i]) + 1;
  }
  cells_.assign(total, DistPoly{});
}

MultiSeries MultiSeries::constant(const MultiSeries& shape_like, DistPoly c) {
  MultiSeries r(shape_like.vars_, shape_like.orders_, shape_like.t_order_);
  r.clip_t(c);
  r.cells_[0] = std::move(c);
  r.complete_.assign(r.vars_.size(), true);
  return r;
}

MultiSeries MultiSeries::term(const MultiSeries& shape_like, std::vector<int> exps, DistPoly c) {
  MultiSeries r(shape_like.vars_, shape_like.orders_, shape_like.t_order_);
  if (exps.size() != r.vars_.size()) throw SeriesError("exponent tuple has the wrong length");
  if (r.in_range(exps)) r.set(exps, std::move(c));
  r.complete_.assign(r.vars_.size(), true);
  return r;
}

MultiSeries MultiSeries::variable(const MultiSeries& shape_like, Var v) {
  const int i = shape_like.index_of(v);
  if (i < 0) throw SeriesError(std::string("series has no variable ") + to_char(v));
  std::vector<int> exps(shape_like.vars_.size(), 0);
  exps[static_cast<std::size_t>(i)] = 1;
  return term(shape_like, std::move(exps), DistPoly{1});
}

int MultiSeries::index_of(Var v) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return static_cast<int>(i);
  return -1;
}

int MultiSeries::order(Var v) const {
  const int i = index_of(v);
  if (i < 0) throw SeriesError(std::string("series has no variable ") + to_char(v));
  return orders_[static_cast<std::size_t>(i)];
}

bool MultiSeries::complete(Var v) const {
  const int i = index_of(v);
  return i >= 0 && complete_[static_cast<std::size_t>(i)];
}

void MultiSeries::set_complete(Var v, bool flag) {
  const int i = index_of(v);
  if (i < 0) throw SeriesError(std::string("series has no variable ") + to_char(v));
  complete_[static_cast<std::size_t>(i)] = flag;
}

bool MultiSeries::in_range(std::span<const int> exps) const {
  if (exps.size() != vars_.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < 0 || exps[i] > orders_[i]) return false;
  return true;
}

std::size_t MultiSeries::offset(std::span<const int> exps) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) off += static_cast<std::size_t>(exps[i]) * strides_[i];
  return off;
}

const DistPoly& MultiSeries::coeff(std::span<const int> exps) const {
  if (!in_range(exps)) return kZeroPoly;
  return cells_[offset(exps)];
}

void MultiSeries::set(std::span<const int> exps, DistPoly c) {
  if (!in_range(exps)) throw SeriesError("exponent beyond truncation order");
  clip_t(c);
  cells_[offset(exps)] = std::move(c);
}

void MultiSeries::add_to(std::span<const int> exps, const DistPoly& c) {
  if (!in_range(exps)) throw SeriesError("exponent beyond truncation order");
  auto& cell = cells_[offset(exps)];
  cell += c;
  clip_t(cell);
}

void MultiSeries::clip_t(DistPoly& p) const {
  if (t_order_ && p.degree() > *t_order_) p = p.truncated(*t_order_);
}

std::vector<int> MultiSeries::exponents_of(std::size_t cell) const {
  std::vector<int> e(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    e[i] = static_cast<int>(cell / strides_[i]);
    cell %= strides_[i];
  }
  return e;
}

void MultiSeries::for_each_nonzero(const std::function<void(const std::vector<int>&, const DistPoly&)>& fn) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!cells_[i].is_zero()) fn(exponents_of(i), cells_[i]);
}

bool MultiSeries::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const DistPoly& p) { return p.is_zero(); });
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
  if (vars_ != o.vars_) throw SeriesError("series have different variable tuples");
}

std::vector<int> MultiSeries::min_orders(const MultiSeries& a, const MultiSeries& b) {
  std::vector<int> r(a.orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a.orders_[i], b.orders_[i]);
  return r;
}

std::optional<int> MultiSeries::min_t(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

MultiSeries MultiSeries::reshaped(const std::vector<int>& orders, std::optional<int> t_order) const {
  MultiSeries r(vars_, orders, t_order);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].is_zero()) continue;
    const auto e = exponents_of(i);
    if (r.in_range(e)) r.set(e, cells_[i]);
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) r.complete_[i] = complete_[i] && orders[i] >= orders_[i];
  return r;
}

MultiSeries MultiSeries::truncated(const std::vector<int>& orders, std::optional<int> t_order) const {
  if (orders.size() != vars_.size()) throw SeriesError("order tuple has the wrong length");
  std::vector<int> o(orders.size());
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = std::min(orders[i], orders_[i]);
  return reshaped(o, min_t(t_order_, t_order));
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  check_compatible(o);
  const auto orders = min_orders(*this, o);
  std::vector<bool> comp(vars_.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    comp[i] = complete_[i] && o.complete_[i] && orders_[i] == o.orders_[i];
  if (orders != orders_ || min_t(t_order_, o.t_order_) != t_order_) *this = reshaped(orders, min_t(t_order_, o.t_order_));
  for (std::size_t i = 0; i < o.cells_.size(); ++i) {
    if (o.cells_[i].is_zero()) continue;
    const auto e = o.exponents_of(i);
    if (in_range(e)) add_to(e, o.cells_[i]);
  }
  complete_ = comp;
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) { return *this += -o; }

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& c : r.cells_) c = -c;
  return r;
}

MultiSeries MultiSeries::scaled(const DistPoly& c) const {
  MultiSeries r = *this;
  for (auto& cell : r.cells_) {
    if (cell.is_zero()) continue;
    cell = cell * c;
    r.clip_t(cell);
  }
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.check_compatible(b);
  MultiSeries r(a.vars_, MultiSeries::min_orders(a, b), MultiSeries::min_t(a.t_order_, b.t_order_));
  std::vector<std::pair<std::vector<int>, const DistPoly*>> bn;
  for (std::size_t j = 0; j < b.cells_.size(); ++j)
    if (!b.cells_[j].is_zero()) bn.emplace_back(b.exponents_of(j), &b.cells_[j]);
  std::vector<int> e(a.vars_.size());
  for (std::size_t i = 0; i < a.cells_.size(); ++i) {
    if (a.cells_[i].is_zero()) continue;
    const auto ea = a.exponents_of(i);
    if (!r.in_range(ea)) continue;
    for (const auto& [eb, pb] : bn) {
      bool ok = true;
      for (std::size_t k = 0; k < e.size() && ok; ++k) {
        e[k] = ea[k] + eb[k];
        ok = e[k] <= r.orders_[k];
      }
      if (ok) r.add_to(e, a.cells_[i] * *pb);
    }
  }
  return r;
}

MultiSeries MultiSeries::invert_unit() const {
  const DistPoly& c0 = cells_[0];
  if (c0 != DistPoly{1} && c0 != DistPoly{-1})
    throw SeriesError("invert_unit: constant term " + c0.to_string() + " is not +1 or -1");
  MultiSeries b(vars_, orders_, t_order_);
  b.cells_[0] = c0;
  std::vector<std::pair<std::vector<int>, const DistPoly*>> an;
  for (std::size_t j = 1; j < cells_.size(); ++j)
    if (!cells_[j].is_zero()) an.emplace_back(exponents_of(j), &cells_[j]);
  std::vector<int> diff(vars_.size());
  for (std::size_t i = 1; i < cells_.size(); ++i) {
    const auto e = exponents_of(i);
    DistPoly sum;
    for (const auto& [ea, pa] : an) {
      bool ok = true;
      for (std::size_t k = 0; k < e.size() && ok; ++k) {
        diff[k] = e[k] - ea[k];
        ok = diff[k] >= 0;
      }
      if (!ok) continue;
      const DistPoly& bd = b.cells_[b.offset(diff)];
      if (!bd.is_zero()) sum += *pa * bd;
    }
    if (sum.is_zero()) continue;
    DistPoly v = -(c0 * sum);
    b.clip_t(v);
    b.cells_[i] = std::move(v);
  }
  return b;
}

MultiSeries MultiSeries::substitute_impl(Var v, const Monomial& rep, const std::vector<int>& result_orders,
                                         std::optional<int> result_t) const {
  const int vi = index_of(v);
  MultiSeries r(vars_, result_orders, result_t);
  std::vector<int> step(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) step[i] = rep.exponent(vars_[i]);
  std::vector<int> e(vars_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].is_zero()) continue;
    const auto src = exponents_of(c);
    const int k = src[static_cast<std::size_t>(vi)];
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      e[i] = (static_cast<int>(i) == vi ? 0 : src[i]) + k * step[i];
      ok = e[i] <= r.orders_[i];
    }
    if (!ok) continue;
    if (result_t && k * rep.t > *result_t) continue;
    DistPoly coef = cells_[c];
    if (rep.coeff != 1) coef = coef * power_of(rep.coeff, k);
    if (rep.t != 0) coef = coef.shifted(static_cast<std::size_t>(k * rep.t));
    r.add_to(e, coef);
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (static_cast<int>(i) == vi)
      r.complete_[i] = step[i] == 0 || (complete_[i] && step[i] == 1);
    else
      r.complete_[i] = complete_[i] && step[i] == 0 && result_orders[i] == orders_[i];
  }
  return r;
}

MultiSeries MultiSeries::substitute(Var v, const Monomial& rep) const {
  const int vi = index_of(v);
  if (vi < 0) throw SeriesError(std::string("series has no variable ") + to_char(v));
  for (Var y : {Var::X, Var::S, Var::U})
    if (rep.exponent(y) > 0 && !has_var(y))
      throw SeriesError(std::string("replacement uses variable ") + to_char(y) + " absent from the series; embed first");
  if (rep.x < 0 || rep.s < 0 || rep.u < 0 || rep.t < 0) throw SeriesError("replacement exponents must be >= 0");
  std::vector<int> orders = orders_;
  std::optional<int> t_out = t_order_;
  if (!complete_[static_cast<std::size_t>(vi)]) {
    // unknown source terms have v-exponent >= order_v + 1
    const int first_unknown = orders_[static_cast<std::size_t>(vi)] + 1;
    bool bounded = false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const int step = rep.exponent(vars_[i]);
      if (step <= 0) continue;
      bounded = true;
      if (static_cast<int>(i) != vi) orders[i] = std::min(orders[i], step * first_unknown - 1);
    }
    if (rep.t > 0) {
      const int t_lim = rep.t * first_unknown - 1;
      if (!bounded) t_out = t_out ? std::min(*t_out, t_lim) : t_lim;
      bounded = true;
    }
    if (!bounded)
      throw SeriesError(std::string("substituting ") + to_char(v) +
                        " by a constant needs every coefficient in " + to_char(v) +
                        ", but the series is truncated at order " + std::to_string(first_unknown - 1));
  }
  return substitute_impl(v, rep, orders, t_out);
}

MultiSeries MultiSeries::substitute(Var v, const Monomial& rep, const std::vector<int>& required) const {
  if (required.size() != vars_.size()) throw SeriesError("order tuple has the wrong length");
  MultiSeries r = substitute(v, rep);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (r.orders_[i] >= required[i]) continue;
    const int step = rep.exponent(vars_[i]);
    std::ostringstream os;
    os << "substituting " << to_char(v) << " cannot reach " << to_char(vars_[i]) << "-order " << required[i];
    if (step > 0)
      os << "; needs source " << to_char(v) << "-order >= " << (required[i] + step) / step - 1;
    else
      os << "; needs source " << to_char(vars_[i]) << "-order >= " << required[i];
    throw SeriesError(os.str());
  }
  return r.truncated(required);
}

MultiSeries MultiSeries::embed(const std::vector<Var>& vars, const std::vector<int>& orders) const {
  if (vars.size() != orders.size()) throw SeriesError("variables and orders differ in length");
  std::vector<int> map(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (vars[j] == vars_[i]) map[i] = static_cast<int>(j);
    if (map[i] < 0) throw SeriesError(std::string("embed target lacks variable ") + to_char(vars_[i]));
  }
  std::vector<int> new_orders = orders;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto& o = new_orders[static_cast<std::size_t>(map[i])];
    o = std::min(o, orders_[i]);
  }
  MultiSeries r(vars, new_orders, t_order_);
  std::vector<int> e(vars.size(), 0);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].is_zero()) continue;
    const auto src = exponents_of(c);
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) e[static_cast<std::size_t>(map[i])] = src[i];
    if (r.in_range(e)) r.set(e, cells_[c]);
  }
  r.complete_.assign(vars.size(), true);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    r.complete_[static_cast<std::size_t>(map[i])] = complete_[i] && new_orders[static_cast<std::size_t>(map[i])] >= orders_[i];
  return r;
}

MultiSeries MultiSeries::project_out(Var v) const {
  const int vi = index_of(v);
  if (vi < 0) throw SeriesError(std::string("series has no variable ") + to_char(v));
  std::vector<Var> vars;
  std::vector<int> orders;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (static_cast<int>(i) == vi) continue;
    vars.push_back(vars_[i]);
    orders.push_back(orders_[i]);
  }
  MultiSeries r(vars, orders, t_order_);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].is_zero()) continue;
    auto e = exponents_of(c);
    if (e[static_cast<std::size_t>(vi)] != 0)
      throw SeriesError(std::string("project_out: series depends on ") + to_char(v));
    e.erase(e.begin() + vi);
    r.set(e, cells_[c]);
  }
  std::size_t j = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (static_cast<int>(i) != vi) r.complete_[j++] = complete_[i];
  return r;
}

std::optional<MultiSeries> MultiSeries::divided_by_t() const {
  MultiSeries r = *this;
  for (auto& c : r.cells_) {
    auto d = c.divided_by_t();
    if (!d) return std::nullopt;
    c = std::move(*d);
  }
  if (r.t_order_) r.t_order_ = std::max(0, *r.t_order_ - 1);
  return r;
}

MultiSeries MultiSeries::at_t_one() const {
  MultiSeries r(vars_, orders_, std::nullopt);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!cells_[i].is_zero()) r.cells_[i] = DistPoly::constant(cells_[i].eval_at_one());
  r.complete_ = complete_;
  return r;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  return a.vars_ == b.vars_ && a.orders_ == b.orders_ && a.t_order_ == b.t_order_ && a.cells_ == b.cells_;
}

std::string describe_exponents(const std::vector<Var>& vars, std::span<const int> exps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ' ';
    os << to_char(vars[i]) << '^' << exps[i];
  }
  return os.str();
}

std::string SeriesDifference::describe(const std::vector<Var>& vars) const {
  return "[" + describe_exponents(vars, exponents) + "]: " + lhs.to_string() + " vs " + rhs.to_string();
}

std::optional<SeriesDifference> first_difference(const MultiSeries& a, const MultiSeries& b) {
  if (a.vars() != b.vars()) throw SeriesError("series have different variable tuples");
  std::vector<int> orders(a.vars().size());
  for (std::size_t i = 0; i < orders.size(); ++i) orders[i] = std::min(a.orders()[i], b.orders()[i]);
  std::optional<int> t;
  if (a.t_order() && b.t_order())
    t = std::min(*a.t_order(), *b.t_order());
  else
    t = a.t_order() ? a.t_order() : b.t_order();
  const MultiSeries ta = a.truncated(orders, t);
  const MultiSeries tb = b.truncated(orders, t);
  for (std::size_t i = 0; i < ta.cell_count(); ++i) {
    if (ta.cell(i) != tb.cell(i)) return SeriesDifference{ta.exponents_of(i), ta.cell(i), tb.cell(i)};
  }
  return std::nullopt;
}

}  // namespace patav
