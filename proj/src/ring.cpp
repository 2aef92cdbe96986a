#include "toda2/ring.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>

namespace toda2 {

// ---------------------------------------------------------------- Registry

Registry::Registry() { intern("s"); }

Registry& Registry::global() {
  static Registry reg;
  return reg;
}

std::size_t Registry::intern(std::string_view name) {
  if (name.empty() || name.find_first_of("*^+ /()") != std::string_view::npos)
    throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
  {
    std::shared_lock lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = index_.emplace(std::string(name), names_.size());
  if (inserted) names_.emplace_back(name);
  return it->second;
}

std::size_t Registry::index_of(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw std::out_of_range("unregistered variable '" + std::string(name) + "'");
  return it->second;
}

bool Registry::contains(std::string_view name) const {
  std::shared_lock lock(mutex_);
  return index_.count(std::string(name)) != 0;
}

std::string Registry::name(std::size_t index) const {
  std::shared_lock lock(mutex_);
  return names_.at(index);
}

std::size_t Registry::size() const {
  std::shared_lock lock(mutex_);
  return names_.size();
}

// ---------------------------------------------------------------- Monomial

namespace {

int16_t narrow_exp(long v) {
  if (v > std::numeric_limits<int16_t>::max() || v < std::numeric_limits<int16_t>::min())
    throw std::overflow_error("monomial exponent overflow");
  return static_cast<int16_t>(v);
}

}  // namespace

Monomial Monomial::unit(std::size_t var, int exp) {
  Monomial m;
  m.set(var, exp);
  return m;
}

bool Monomial::has_negative() const {
  return std::any_of(e_.begin(), e_.end(), [](int16_t x) { return x < 0; });
}

void Monomial::set(std::size_t var, int exp) {
  if (var >= e_.size()) {
    if (exp == 0) return;
    e_.resize(var + 1, 0);
  }
  e_[var] = narrow_exp(exp);
  trim();
}

void Monomial::trim() {
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  const auto& big = e_.size() >= o.e_.size() ? e_ : o.e_;
  const auto& small = e_.size() >= o.e_.size() ? o.e_ : e_;
  r.e_ = big;
  for (std::size_t i = 0; i < small.size(); ++i) r.e_[i] = narrow_exp(long(r.e_[i]) + small[i]);
  r.trim();
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  std::size_t n = std::max(a.e_.size(), b.e_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < a.e_.size() ? a.e_[i] : 0;
    int y = i < b.e_.size() ? b.e_[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& x : r.e_) x = narrow_exp(-long(x));
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r = *this;
  for (auto& x : r.e_) x = narrow_exp(long(x) * k);
  r.trim();
  return r;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long c) : reg_(&Registry::global()) {
  if (c != 0) terms_.emplace_back(Monomial(), Rational(c));
}

Scalar::Scalar(const Rational& c, Registry& reg) : reg_(&reg) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

Scalar::Scalar(Monomial m, Rational c, Registry& reg) : reg_(&reg) {
  if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

Scalar Scalar::var(std::string_view name, int exp, Registry& reg) {
  return Scalar(Monomial::unit(reg.intern(name), exp), Rational(1), reg);
}

Scalar Scalar::s_pow(int e, Registry& reg) {
  return Scalar(Monomial::unit(Registry::s_index, e), Rational(1), reg);
}

bool Scalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

void Scalar::normalize_sorted() {
  // terms_ sorted by monomial, possibly with duplicates and zeros
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  Scalar r(Rational(0), *a.reg_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].first, b.terms_[0].second);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].first, a.terms_[0].second);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.terms_.emplace_back(ma * mb, ca * cb);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Scalar::Term& x, const Scalar::Term& y) { return x.first < y.first; });
  r.normalize_sorted();
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

Scalar Scalar::times_monomial(const Monomial& m, const Rational& c) const {
  Scalar r(Rational(0), *reg_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // the padded lexicographic order is translation invariant
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_back(mt * m, ct * c);
  return r;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial scalar");
    const auto& [m, c] = terms_[0];
    Rational inv(1);
    for (int i = 0; i < -k; ++i) inv /= c;
    return Scalar(m.pow(k), inv, *reg_);
  }
  Scalar result(Rational(1), *reg_);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
  std::map<std::size_t, Scalar> idx;
  for (const auto& [name, img] : bindings) idx.emplace(reg_->intern(name), img);
  return substitute(idx);
}

Scalar Scalar::substitute(const std::map<std::size_t, Scalar>& bindings) const {
  if (bindings.empty()) return *this;
  for (const auto& [v, img] : bindings) {
    check_same(img);
    if (img.is_monomial()) continue;
    for (const auto& [m, c] : terms_)
      if (m[v] < 0)
        throw SubstitutionError("negative power of '" + reg_->name(v) + "' bound to a non-monomial image");
  }
  // cache powers of each image
  std::map<std::pair<std::size_t, int>, Scalar> cache;
  auto power = [&](std::size_t v, const Scalar& img, int e) -> const Scalar& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, img.pow(e)).first;
    return it->second;
  };
  Scalar out(Rational(0), *reg_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Scalar factor(Rational(c), *reg_);
    for (const auto& [v, img] : bindings) {
      int e = m[v];
      if (e == 0) continue;
      rest.set(v, 0);
      factor = factor * power(v, img, e);
    }
    out += factor.times_monomial(rest, Rational(1));
  }
  return out;
}

std::map<int, Scalar> Scalar::coefficients_in(std::size_t var) const {
  std::map<int, Scalar> out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = m[var];
    rest.set(var, 0);
    auto it = out.try_emplace(e, Rational(0), *reg_).first;
    it->second += Scalar(rest, c, *reg_);
  }
  return out;
}

// ---------------------------------------------------------------- text form

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

using NamedMonomial = std::vector<std::pair<std::string, int>>;

NamedMonomial named(const Monomial& m, const Registry& reg) {
  NamedMonomial out;
  for (std::size_t i = 0; i < m.span(); ++i)
    if (m[i] != 0) out.emplace_back(reg.name(i), m[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string render(const NamedMonomial& nm) {
  std::string out;
  for (const auto& [name, e] : nm) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string monomial_to_string(const Monomial& m, const Registry& reg) {
  auto nm = named(m, reg);
  return nm.empty() ? "1" : render(nm);
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<NamedMonomial, const Rational*>> rows;
  rows.reserve(terms_.size());
  for (const auto& [m, c] : terms_) rows.emplace_back(named(m, *reg_), &c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [nm, c] : rows) {
    if (!out.empty()) out += " + ";
    out += rational_to_string(*c);
    if (!nm.empty()) out += '*' + render(nm);
  }
  return out;
}

Scalar Scalar::parse(std::string_view text, Registry& reg) {
  Scalar out(Rational(0), reg);
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text == "0") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string_view term = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    std::size_t star = term.find('*');
    Rational c;
    try {
      c = Rational(std::string(term.substr(0, star)));
      c.canonicalize();
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed scalar term '" + std::string(term) + "'");
    }
    Monomial m;
    while (star != std::string_view::npos) {
      std::size_t start = star + 1;
      star = term.find('*', start);
      std::string_view factor = term.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
      std::size_t caret = factor.find('^');
      int e = caret == std::string_view::npos ? 1 : std::stoi(std::string(factor.substr(caret + 1)));
      std::size_t v = reg.intern(factor.substr(0, caret));
      m = m * Monomial::unit(v, e);
    }
    out += Scalar(m, c, reg);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return out;
}

// ---------------------------------------------------------------- fractions

ScalarFraction::ScalarFraction(Scalar num) : num_(std::move(num)), den_(Rational(1), num_.registry()) {}

ScalarFraction::ScalarFraction(Scalar num, Scalar den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  fold();
}

void ScalarFraction::fold() {
  if (num_.is_zero()) {
    den_ = Scalar(Rational(1), num_.registry());
    return;
  }
  if (den_.is_monomial()) {
    const auto& [m, c] = den_.terms()[0];
    num_ = num_.times_monomial(m.inverse(), Rational(1) / c);
    den_ = Scalar(Rational(1), num_.registry());
  }
}

Scalar ScalarFraction::as_scalar() const {
  if (!den_.is_constant()) throw std::domain_error("fraction is not a Laurent polynomial: " + to_string());
  return num_;
}

ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return ScalarFraction(a.num_ + b.num_, a.den_);
  return ScalarFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b) { return a + (-b); }

ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b) {
  if (a.is_zero() || b.is_zero()) return ScalarFraction(Scalar(Rational(0), a.num_.registry()));
  return ScalarFraction(a.num_ * b.num_, a.den_ * b.den_);
}

ScalarFraction operator/(const ScalarFraction& a, const ScalarFraction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero fraction");
  return ScalarFraction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const ScalarFraction& a, const ScalarFraction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

ScalarFraction ScalarFraction::substitute(const std::map<std::string, Scalar>& bindings) const {
  return ScalarFraction(num_.substitute(bindings), den_.substitute(bindings));
}

std::string ScalarFraction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace toda2
