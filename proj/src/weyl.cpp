#include "toda2/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace toda2 {

namespace {
std::atomic<std::size_t> g_term_cap{1000000};

int doubled(const Rational& p) {
  Rational t = p * 2;
  if (t.get_den() != 1) throw std::domain_error("Weyl exponent must be a half integer");
  return static_cast<int>(t.get_num().get_si());
}

std::string half_to_string(int e2) {
  if (e2 % 2 == 0) return std::to_string(e2 / 2);
  return std::to_string(e2) + "/2";
}
}  // namespace

void set_term_cap(std::size_t cap) { g_term_cap = cap; }
std::size_t term_cap() { return g_term_cap; }

int Lattice::normalize(int site) const {
  if (periodic) return ((site - 1) % sites + sites) % sites + 1;
  if (site < 1 || site > sites)
    throw std::out_of_range("site " + std::to_string(site) + " outside open lattice of " +
                            std::to_string(sites));
  return site;
}

WeylMonomial multiply_monomials(const WeylMonomial& a, const WeylMonomial& b, int& s_exp) {
  WeylMonomial r;
  s_exp = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->site < j->site)) {
      r.push_back(*i++);
    } else if (i == a.end() || j->site < i->site) {
      r.push_back(*j++);
    } else {
      // U^{a1} V^{b2} = q^{2 a1 b2} V^{b2} U^{a1}; in s = q^{1/2} with doubled exponents
      s_exp += i->u2 * j->v2;
      SiteExp e{i->site, i->v2 + j->v2, i->u2 + j->u2};
      if (e.v2 != 0 || e.u2 != 0) r.push_back(e);
      ++i;
      ++j;
    }
  }
  return r;
}

WeylOp::WeylOp(Lattice lat, Scalar c) : lat_(lat) {
  if (!c.is_zero()) terms_.emplace_back(WeylMonomial{}, std::move(c));
}

WeylOp WeylOp::monomial(Lattice lat, const std::vector<SiteExp>& exps, Scalar c) {
  WeylOp r(lat);
  WeylMonomial m;
  for (const auto& e : exps) {
    WeylMonomial one{SiteExp{lat.normalize(e.site), e.v2, e.u2}};
    if (e.v2 == 0 && e.u2 == 0) continue;
    int f = 0;
    m = multiply_monomials(m, one, f);
    c = c.times_monomial(Monomial::unit(Registry::s_index, f), 1);
  }
  r.add_term(std::move(m), std::move(c));
  return r;
}

WeylOp WeylOp::U(Lattice lat, int site, int u2) { return monomial(lat, {{site, 0, u2}}); }
WeylOp WeylOp::V(Lattice lat, int site, int v2) { return monomial(lat, {{site, v2, 0}}); }

void WeylOp::add_term(WeylMonomial m, Scalar c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const WeylMonomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, std::move(m), std::move(c));
  }
}

std::size_t WeylOp::flat_size() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n += t.second.size();
  return n;
}

bool WeylOp::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
}

std::vector<int> WeylOp::support() const {
  std::vector<int> s;
  for (const auto& t : terms_)
    for (const auto& e : t.first) s.push_back(e.site);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

WeylOp WeylOp::operator-() const {
  WeylOp r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  if (!(lat_ == o.lat_)) throw LatticeMismatch();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Scalar c = i->second + j->second;
      if (!c.is_zero()) out.emplace_back(std::move(i->first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) { return *this += -o; }

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  if (!(a.lat_ == b.lat_)) throw LatticeMismatch();
  std::vector<WeylOp::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  std::size_t flat = 0;
  const std::size_t cap = term_cap();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      int f = 0;
      WeylMonomial m = multiply_monomials(ma, mb, f);
      flat += ca.size() * cb.size();
      if (flat > cap) throw TermCapExceeded(flat);
      Scalar c = ca * cb;
      if (f != 0) c = c.times_monomial(Monomial::unit(Registry::s_index, f), 1);
      raw.emplace_back(std::move(m), std::move(c));
    }
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const WeylOp::Term& x, const WeylOp::Term& y) { return x.first < y.first; });
  WeylOp r(a.lat_);
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i + 1;
    Scalar c = std::move(raw[i].second);
    while (j < raw.size() && raw[j].first == raw[i].first) c += raw[j++].second;
    if (!c.is_zero()) r.terms_.emplace_back(std::move(raw[i].first), std::move(c));
    i = j;
  }
  return r;
}

WeylOp operator*(const Scalar& c, const WeylOp& a) {
  WeylOp r(a.lat_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a.terms_) {
    Scalar y = c * x;
    if (!y.is_zero()) r.terms_.emplace_back(m, std::move(y));
  }
  return r;
}

bool operator==(const WeylOp& a, const WeylOp& b) {
  if (!(a.lat_ == b.lat_)) throw LatticeMismatch();
  return a.terms_ == b.terms_;
}

WeylOp WeylOp::substitute(const std::map<std::string, Scalar>& bindings) const {
  WeylOp r(lat_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(bindings));
  return r;
}

std::map<int, WeylOp> WeylOp::coefficients_in(std::string_view var) const {
  std::map<int, WeylOp> out;
  auto& reg = terms_.empty() ? Registry::global() : terms_.front().second.registry();
  std::size_t idx = reg.intern(var);
  for (const auto& [m, c] : terms_) {
    for (auto& [e, part] : c.coefficients_in(idx)) {
      auto [it, fresh] = out.try_emplace(e, lat_);
      it->second.add_term(m, std::move(part));
    }
  }
  return out;
}

WeylOp WeylOp::monomial_inverse() const {
  if (terms_.size() != 1 || !terms_[0].second.is_monomial())
    throw std::domain_error("only single-term operators with monomial coefficient invert");
  WeylMonomial inv;
  for (const auto& e : terms_[0].first) inv.push_back({e.site, -e.v2, -e.u2});
  // (V^b U^a)^{-1} = U^{-a} V^{-b} = q^{2ab} V^{-b} U^{-a}
  int f = 0;
  for (const auto& e : terms_[0].first) f += e.u2 * e.v2;
  WeylOp r(lat_);
  Scalar c = terms_[0].second.pow(-1);
  r.add_term(std::move(inv), c.times_monomial(Monomial::unit(Registry::s_index, f), 1));
  return r;
}

WeylOp normal_order(const std::vector<WeylLetter>& word, const Scalar& coeff, Lattice lat) {
  WeylOp r(lat, coeff);
  for (const auto& l : word) {
    int e = doubled(l.power);
    r = r * (l.gen == Gen::U ? WeylOp::U(lat, l.site, e) : WeylOp::V(lat, l.site, e));
  }
  return r;
}

WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

namespace {
WeylOp conjugate_impl(const WeylOp& a, int only_site) {
  WeylOp r(a.lattice());
  for (const auto& [m, c] : a.terms()) {
    int k2 = 0;
    for (const auto& e : m)
      if (only_site == 0 || e.site == only_site) k2 += e.v2 - e.u2;
    if (k2 % 2 != 0)
      throw std::domain_error("conjugation by V needs integer net exponent, got " +
                              half_to_string(k2) + " in " + weyl_monomial_to_string(m));
    WeylOp t = WeylOp::monomial(a.lattice(), std::vector<SiteExp>(m.begin(), m.end()),
                                c * Scalar::var("d2", k2 / 2, c.registry()));
    r += t;
  }
  return r;
}
}  // namespace

WeylOp conjugate_V(const WeylOp& a) { return conjugate_impl(a, 0); }
WeylOp conjugate_V_site(const WeylOp& a, int site) {
  return conjugate_impl(a, a.lattice().normalize(site));
}

std::string weyl_monomial_to_string(const WeylMonomial& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : m) {
    if (e.v2 != 0) {
      os << (first ? "" : " ") << "V" << e.site;
      if (e.v2 != 2) os << "^{" << half_to_string(e.v2) << "}";
      first = false;
    }
    if (e.u2 != 0) {
      os << (first ? "" : " ") << "U" << e.site;
      if (e.u2 != 2) os << "^{" << half_to_string(e.u2) << "}";
      first = false;
    }
  }
  return first ? "1" : os.str();
}

std::string WeylOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (!m.empty()) out += " " + weyl_monomial_to_string(m);
  }
  return out;
}

}  // namespace toda2
