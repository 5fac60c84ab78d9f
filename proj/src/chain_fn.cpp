#include "ifs_cstar/chain_fn.hpp"

#include <cctype>

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

namespace {

// Parses "<prefix><pos>" or "<prefix><pos>_<coord>".
std::optional<std::pair<std::size_t, std::size_t>> split_variable(std::string_view name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  std::size_t i = 1;
  std::size_t pos = 0;
  const std::size_t start = i;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) pos = pos * 10 + (name[i++] - '0');
  if (i == start) return std::nullopt;
  std::size_t coord = 0;
  if (i < name.size()) {
    if (name[i] != '_') return std::nullopt;
    const std::size_t cstart = ++i;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) coord = coord * 10 + (name[i++] - '0');
    if (i == cstart || i != name.size()) return std::nullopt;
  }
  return std::make_pair(pos, coord);
}

std::string variable_name(char prefix, std::size_t pos, std::size_t coord, std::size_t dim) {
  std::string out = prefix + std::to_string(pos);
  if (dim > 1) out += "_" + std::to_string(coord);
  return out;
}

void append_point(std::vector<Rational>& values, const Point& p, std::size_t dim) {
  if (p.dim() != dim) throw ArityError("chain point has wrong dimension");
  for (const auto& c : p.coords()) values.push_back(c);
}

}  // namespace

ChainFn::ChainFn(std::size_t length, std::size_t dim, Polynomial poly)
    : length_(length), dim_(dim), poly_(std::move(poly)) {
  if (poly_.nvars() != (length_ + 1) * dim_) throw ArityError("chain function polynomial has wrong arity");
}

ChainFn ChainFn::constant(std::size_t length, std::size_t dim, const ComplexRational& c) {
  return {length, dim, Polynomial::constant((length + 1) * dim, c)};
}

ChainFn ChainFn::parse(std::string_view text, std::size_t length, std::size_t dim) {
  const std::size_t nvars = (length + 1) * dim;
  auto resolve = [&](std::string_view name) -> std::optional<std::size_t> {
    auto v = split_variable(name, 't');
    if (!v || v->first > length || v->second >= dim) return std::nullopt;
    return variable(v->first, v->second, dim);
  };
  return {length, dim, parse_polynomial(text, nvars, resolve)};
}

ComplexRational ChainFn::evaluate(std::span<const Point> points) const {
  if (points.size() != length_ + 1) throw ArityError("chain has wrong length for this function");
  std::vector<Rational> values;
  values.reserve(poly_.nvars());
  for (std::size_t pos = 0; pos <= length_; ++pos) append_point(values, points[length_ - pos], dim_);
  return poly_.evaluate(values);
}

std::string to_string(const ChainFn& f) {
  const std::size_t d = f.dim();
  return to_string(f.poly(), [d](std::size_t v) { return variable_name('t', v / d, v % d, d); });
}

BichainFn::BichainFn(std::size_t left_length, std::size_t right_length, std::size_t dim, Polynomial poly)
    : m_(left_length), n_(right_length), dim_(dim), poly_(std::move(poly)) {
  if (poly_.nvars() != (m_ + n_ + 2) * dim_) throw ArityError("bichain function polynomial has wrong arity");
}

BichainFn BichainFn::constant(std::size_t left_length, std::size_t right_length, std::size_t dim,
                              const ComplexRational& c) {
  return {left_length, right_length, dim, Polynomial::constant((left_length + right_length + 2) * dim, c)};
}

BichainFn BichainFn::parse(std::string_view text, std::size_t left_length, std::size_t right_length,
                           std::size_t dim) {
  const std::size_t nvars = (left_length + right_length + 2) * dim;
  auto resolve = [&](std::string_view name) -> std::optional<std::size_t> {
    if (auto v = split_variable(name, 'x'); v && v->first <= left_length && v->second < dim)
      return v->first * dim + v->second;
    if (auto v = split_variable(name, 'y'); v && v->first <= right_length && v->second < dim)
      return (left_length + 1 + v->first) * dim + v->second;
    return std::nullopt;
  };
  return {left_length, right_length, dim, parse_polynomial(text, nvars, resolve)};
}

ComplexRational BichainFn::evaluate(std::span<const Point> left, std::span<const Point> right) const {
  if (left.size() != m_ + 1 || right.size() != n_ + 1) throw ArityError("bichain has wrong lengths for this function");
  std::vector<Rational> values;
  values.reserve(poly_.nvars());
  for (std::size_t pos = 0; pos <= m_; ++pos) append_point(values, left[m_ - pos], dim_);
  for (std::size_t pos = 0; pos <= n_; ++pos) append_point(values, right[n_ - pos], dim_);
  return poly_.evaluate(values);
}

BichainFn BichainFn::swapped_conjugate() const {
  const std::size_t nvars = poly_.nvars();
  std::vector<std::size_t> mapping(nvars);
  // Old left group (m) moves to the new right group; old right (n) to new left.
  for (std::size_t pos = 0; pos <= m_; ++pos)
    for (std::size_t c = 0; c < dim_; ++c) mapping[pos * dim_ + c] = (n_ + 1 + pos) * dim_ + c;
  for (std::size_t pos = 0; pos <= n_; ++pos)
    for (std::size_t c = 0; c < dim_; ++c) mapping[(m_ + 1 + pos) * dim_ + c] = pos * dim_ + c;
  return {n_, m_, dim_, poly_.conj().remap(mapping, nvars)};
}

std::string to_string(const BichainFn& f) {
  const std::size_t d = f.dim();
  const std::size_t split = (f.left_length() + 1) * d;
  return to_string(f.poly(), [d, split](std::size_t v) {
    if (v < split) return variable_name('x', v / d, v % d, d);
    v -= split;
    return variable_name('y', v / d, v % d, d);
  });
}

ChainFn boxdot(const ChainFn& f, const ChainFn& g) {
  if (f.dim() != g.dim()) throw ArityError("boxdot of functions in different dimensions");
  const std::size_t d = f.dim();
  const std::size_t m = f.length();
  const std::size_t n = g.length();
  const std::size_t nvars = (m + n + 1) * d;
  std::vector<std::size_t> fmap(f.poly().nvars());
  for (std::size_t v = 0; v < fmap.size(); ++v) fmap[v] = v + n * d;  // t_i -> t_{i+n}
  std::vector<std::size_t> gmap(g.poly().nvars());
  for (std::size_t v = 0; v < gmap.size(); ++v) gmap[v] = v;
  return {m + n, d, f.poly().remap(fmap, nvars) * g.poly().remap(gmap, nvars)};
}

BichainFn boxtimes(const ChainFn& f, const ChainFn& g) {
  if (f.dim() != g.dim()) throw ArityError("boxtimes of functions in different dimensions");
  const std::size_t d = f.dim();
  const std::size_t m = f.length();
  const std::size_t n = g.length();
  const std::size_t nvars = (m + n + 2) * d;
  std::vector<std::size_t> fmap(f.poly().nvars());
  for (std::size_t v = 0; v < fmap.size(); ++v) fmap[v] = v;
  std::vector<std::size_t> gmap(g.poly().nvars());
  for (std::size_t v = 0; v < gmap.size(); ++v) gmap[v] = (m + 1) * d + v;
  return {m, n, d, f.poly().remap(fmap, nvars) * g.poly().conj().remap(gmap, nvars)};
}

ChainFn left_action(const PolyFn& a, const ChainFn& f) {
  if (a.length() != 0 || f.length() != 1) throw ArityError("left action needs a function on X and one on the graph");
  if (a.dim() != f.dim()) throw ArityError("left action across dimensions");
  const std::size_t d = f.dim();
  std::vector<std::size_t> amap(d);
  for (std::size_t c = 0; c < d; ++c) amap[c] = d + c;  // reads x_1
  return {1, d, a.poly().remap(amap, 2 * d) * f.poly()};
}

}  // namespace ifs_cstar
