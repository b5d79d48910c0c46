#include "zbrx/monoid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zbrx {

FiniteMonoid::FiniteMonoid(std::vector<std::vector<int>> table, int unit)
    : size_((int)table.size()), unit_(unit), table_(std::move(table)) {
  if (size_ <= 0) throw std::invalid_argument("monoid: empty table");
  if (unit_ < 0 || unit_ >= size_)
    throw std::invalid_argument("monoid: unit index out of range");
  for (const auto& row : table_) {
    if ((int)row.size() != size_)
      throw std::invalid_argument("monoid: table is not square");
    for (int x : row)
      if (x < 0 || x >= size_)
        throw std::invalid_argument("monoid: table entry out of range");
  }
  for (int x = 0; x < size_; ++x)
    if (table_[unit_][x] != x || table_[x][unit_] != x)
      throw std::invalid_argument("monoid: unit is not a two-sided identity");
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y)
      for (int z = 0; z < size_; ++z)
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
          throw std::invalid_argument("monoid: table is not associative");
  compute_caches();
}

void FiniteMonoid::compute_caches() {
  unit_flag_.assign(size_, 0);
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      if (table_[x][y] == unit_ && table_[y][x] == unit_) {
        unit_flag_[x] = 1;
        break;
      }
    }
    if (unit_flag_[x]) units_.push_back(x);
    if (table_[x][x] == x) idempotents_.push_back(x);
  }

  // regular / inverse / Clifford classification by full scan
  classification_.is_regular = true;
  std::vector<int> inv_map(size_, -1);
  bool inverse_ok = true;
  for (int x = 0; x < size_; ++x) {
    int count = 0;
    bool regular = false;
    for (int y = 0; y < size_; ++y) {
      if (table_[table_[x][y]][x] == x) regular = true;
      if (table_[table_[x][y]][x] == x && table_[table_[y][x]][y] == y) {
        ++count;
        inv_map[x] = y;
      }
    }
    if (!regular) classification_.is_regular = false;
    if (count != 1) inverse_ok = false;
  }
  classification_.is_inverse = classification_.is_regular && inverse_ok;
  if (classification_.is_inverse) {
    classification_.inverse_map = inv_map;
    classification_.is_clifford = true;
    for (int x = 0; x < size_; ++x)
      if (table_[x][inv_map[x]] != table_[inv_map[x]][x])
        classification_.is_clifford = false;
  }
}

int FiniteMonoid::unit_inverse(int x) const {
  if (x < 0 || x >= size_ || !unit_flag_[x])
    throw std::invalid_argument("unit_inverse: not a unit");
  for (int y : units_)
    if (table_[x][y] == unit_ && table_[y][x] == unit_) return y;
  throw std::logic_error("unit_inverse: unreachable");
}

bool FiniteMonoid::natural_leq(int e, int f) const {
  if (!is_idempotent(e) || !is_idempotent(f))
    throw std::invalid_argument("natural_leq: arguments must be idempotent");
  return mul(e, f) == e && mul(f, e) == e;
}

FiniteMonoid FiniteMonoid::adjoin_unit() const {
  int n = size_;
  std::vector<std::vector<int>> t(n + 1, std::vector<int>(n + 1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = table_[x][y];
  for (int x = 0; x <= n; ++x) {
    t[n][x] = x;
    t[x][n] = x;
  }
  return FiniteMonoid(std::move(t), n);
}

FiniteMonoid FiniteMonoid::parse(const std::string& text) {
  std::istringstream in(text);
  int n = 0, unit = 0;
  if (!(in >> n >> unit)) throw std::invalid_argument("monoid parse: bad header");
  if (n <= 0 || n > 4096) throw std::invalid_argument("monoid parse: bad size");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(in >> table[x][y]))
        throw std::invalid_argument("monoid parse: truncated table");
  return FiniteMonoid(std::move(table), unit);
}

std::string FiniteMonoid::format() const {
  std::ostringstream out;
  out << size_ << ' ' << unit_ << '\n';
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      if (y) out << ' ';
      out << table_[x][y];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::shared_ptr<const FiniteMonoid> make_builtin(const std::string& name) {
  auto M = [](std::vector<std::vector<int>> t, int u) {
    return std::make_shared<const FiniteMonoid>(std::move(t), u);
  };
  if (name == "trivial") return M({{0}}, 0);
  if (name == "semilattice2")  // {1, e}, e idempotent below 1
    return M({{0, 1}, {1, 1}}, 0);
  if (name == "chain3")  // semilattice chain 1 > e > f
    return M({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, 0);
  if (name == "c2") return M({{0, 1}, {1, 0}}, 0);
  if (name == "c6") {
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) t[x][y] = (x + y) % 6;
    return std::make_shared<const FiniteMonoid>(std::move(t), 0);
  }
  if (name == "leftzero2+1")  // {1, a, b} with a.b = a, b.a = b
    return M({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  if (name == "nil3")  // {1, a, z} with a.a = z, z a zero
    return M({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
  throw std::invalid_argument("unknown builtin monoid: " + name);
}

}  // namespace

std::shared_ptr<const FiniteMonoid> FiniteMonoid::builtin(const std::string& name) {
  return make_builtin(name);
}

std::vector<std::string> FiniteMonoid::builtin_names() {
  return {"trivial", "semilattice2", "chain3", "c2", "c6", "leftzero2+1", "nil3"};
}

UnitHom::UnitHom(std::shared_ptr<const FiniteMonoid> parent, std::vector<int> image)
    : parent_(std::move(parent)), image_(std::move(image)) {
  if (!parent_) throw std::invalid_argument("UnitHom: null parent");
  if ((int)image_.size() != parent_->size())
    throw std::invalid_argument("UnitHom: image size mismatch");
  for (int x : image_)
    if (x < 0 || x >= parent_->size())
      throw std::invalid_argument("UnitHom: image entry out of range");
}

UnitHom UnitHom::annihilating(std::shared_ptr<const FiniteMonoid> m) {
  std::vector<int> img(m->size(), m->unit());
  return UnitHom(std::move(m), std::move(img));
}

UnitHom UnitHom::identity(std::shared_ptr<const FiniteMonoid> m) {
  std::vector<int> img(m->size());
  for (int x = 0; x < (int)img.size(); ++x) img[x] = x;
  return UnitHom(std::move(m), std::move(img));
}

bool UnitHom::check(std::string* why) const {
  const FiniteMonoid& m = *parent_;
  if (image_[m.unit()] != m.unit()) {
    if (why) *why = "unit not preserved";
    return false;
  }
  for (int x = 0; x < m.size(); ++x) {
    if (!m.is_unit(image_[x])) {
      if (why) *why = "image of element " + std::to_string(x) + " is not a unit";
      return false;
    }
  }
  for (int x = 0; x < m.size(); ++x)
    for (int y = 0; y < m.size(); ++y)
      if (image_[m.mul(x, y)] != m.mul(image_[x], image_[y])) {
        if (why)
          *why = "not multiplicative at (" + std::to_string(x) + "," +
                 std::to_string(y) + ")";
        return false;
      }
  return true;
}

int UnitHom::power(Int n, int s) const {
  if (n < 0) throw std::invalid_argument("theta power: negative exponent");
  if (n == 0) return s;
  if (n <= kPowerCacheBound) {
    auto it = power_cache_.find({n, s});
    if (it != power_cache_.end()) return it->second;
  }
  int r = s;
  for (Int k = 0; k < n; ++k) r = image_[r];
  if (n <= kPowerCacheBound) power_cache_[{n, s}] = r;
  return r;
}

Int IntGroupEndo::power(Int n, Int k) const {
  if (n < 0) throw std::invalid_argument("theta power: negative exponent");
  if (n == 0) return k;
  if (kind == Kind::Annihilating) return 0;
  Int r = k;
  for (Int p = 0; p < n; ++p) r *= scale;
  return r;
}

}  // namespace zbrx
