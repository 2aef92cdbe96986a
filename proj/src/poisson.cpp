#include "toda2/poisson.hpp"

#include <map>
#include <mutex>
#include <regex>

namespace toda2 {

namespace {

Rational theta(int k) {
  if (k > 0) return 1;
  if (k < 0) return 0;
  return Rational(1, 2);
}

bool generator_like(const Registry& reg, std::size_t v) {
  static const std::regex re("^(xi1_|xi2_|Q|P|g|h)[0-9]+$");
  static std::mutex mu;
  static std::map<std::pair<const Registry*, std::size_t>, bool> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({&reg, v}, false);
  if (fresh) it->second = std::regex_match(reg.name(v), re);
  return it->second;
}

std::string var_name(const std::string& family, int n) {
  return family == "xi1" || family == "xi2" ? family + "_" + std::to_string(n)
                                            : family + std::to_string(n);
}

}  // namespace

Matrix<Scalar> exlat_r(bool plus) {
  long s = plus ? 1 : -1;
  Matrix<Scalar> r(4, 4, Scalar());
  r(0, 0) = Scalar(s);
  r(1, 1) = Scalar(-s);
  r(2, 2) = Scalar(-s);
  r(3, 3) = Scalar(s);
  // 4 sigma^+ (x) sigma^- for r^+, -4 sigma^- (x) sigma^+ for r^-
  if (plus)
    r(1, 2) = Scalar(4L);
  else
    r(2, 1) = Scalar(-4L);
  return r;
}

std::vector<std::string> Chart::families() const {
  switch (kind_) {
    case ChartKind::exlat: return {"xi1", "xi2"};
    case ChartKind::qp: return {"Q", "P"};
    case ChartKind::darboux: return {"g", "h"};
  }
  return {};
}

int Chart::site(int n) const {
  if (periodic_) return ((n - 1) % size_ + size_) % size_ + 1;
  if (n < 1 || n > size_)
    throw std::out_of_range("site " + std::to_string(n) + " outside chart of size " +
                            std::to_string(size_));
  return n;
}

Chart Chart::make(ChartKind kind, int size, bool periodic) {
  if (size < 2) throw std::invalid_argument("chart needs at least two sites");
  if (periodic && kind != ChartKind::qp)
    throw std::invalid_argument("only the qp chart may be periodic");
  Chart c;
  c.kind_ = kind;
  c.size_ = size;
  c.periodic_ = periodic;
  auto& reg = Registry::global();
  for (const auto& fam : c.families())
    for (int n = 1; n <= size; ++n) c.vars_.push_back(reg.intern(var_name(fam, n)));
  std::size_t maxv = 0;
  for (auto v : c.vars_) maxv = std::max(maxv, v);
  c.pos_.assign(maxv + 1, -1);
  for (std::size_t i = 0; i < c.vars_.size(); ++i) c.pos_[c.vars_[i]] = static_cast<int>(i);

  const std::size_t G = c.vars_.size();
  c.table_.assign(G * G, Scalar());
  auto set = [&](std::size_t i, std::size_t j, const Scalar& v) { c.table_[i * G + j] = v; };
  auto at = [&](int fam, int n) { return static_cast<std::size_t>(fam * size + (n - 1)); };
  auto g = [&](int fam, int n) { return Scalar::var(var_name(c.families()[fam], n)); };

  switch (kind) {
    case ChartKind::exlat: {
      Matrix<Scalar> rp = exlat_r(true), rm = exlat_r(false);
      for (int n = 1; n <= size; ++n)
        for (int m = 1; m <= size; ++m) {
          Rational tp = theta(n - m), tm = theta(m - n);
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              Scalar v;
              for (int ap = 0; ap < 2; ++ap)
                for (int bp = 0; bp < 2; ++bp) {
                  Scalar coeff = Scalar(tp) * rp(2 * ap + bp, 2 * a + b) +
                                 Scalar(tm) * rm(2 * ap + bp, 2 * a + b);
                  if (!coeff.is_zero()) v += coeff * g(ap, n) * g(bp, m);
                }
              set(at(a, n), at(b, m), v);
            }
        }
      break;
    }
    case ChartKind::qp: {
      auto d = [&](int a, int b) -> long {
        if (periodic) return ((a - b) % size + size) % size == 0 ? 1 : 0;
        return a == b ? 1 : 0;
      };
      for (int n = 1; n <= size; ++n)
        for (int m = 1; m <= size; ++m) {
          Scalar Qn = g(0, n), Qm = g(0, m), Pn = g(1, n), Pm = g(1, m);
          set(at(0, n), at(0, m), Qn * Qm * (d(n + 1, m) - d(n, m + 1)));
          Scalar qp = Qn * Pm * (-2L * (d(n, m) - d(n + 1, m)));
          set(at(0, n), at(1, m), qp);
          set(at(1, m), at(0, n), -qp);
          set(at(1, n), at(1, m), Qm * Qm * (-4L * d(n, m + 1)) + Qn * Qn * (4L * d(n + 1, m)));
        }
      break;
    }
    case ChartKind::darboux: {
      for (int n = 1; n <= size; ++n) {
        Scalar gh = g(0, n) * g(1, n);
        set(at(0, n), at(1, n), gh);
        set(at(1, n), at(0, n), -gh);
      }
      break;
    }
  }
  return c;
}

Scalar Chart::gen(const std::string& family, int n) const {
  return Scalar::var(var_name(family, site(n)));
}

std::size_t Chart::gen_index(const std::string& family, int n) const {
  return Registry::global().index_of(var_name(family, site(n)));
}

int Chart::position(std::size_t var) const {
  return var < pos_.size() ? pos_[var] : -1;
}

void Chart::check_owned(const Scalar& a) const {
  const auto& reg = a.registry();
  for (const auto& [m, c] : a.terms())
    for (std::size_t v = 0; v < m.span(); ++v)
      if (m[v] != 0 && position(v) < 0 && generator_like(reg, v))
        throw ForeignGenerator("generator " + reg.name(v) + " is not part of this chart");
}

Scalar derivative(const Scalar& a, std::size_t var) {
  Scalar r(Rational(0), a.registry());
  Monomial down = Monomial::unit(var, -1);
  for (const auto& [m, c] : a.terms()) {
    int e = m[var];
    if (e != 0) r += Scalar(m * down, c * e, a.registry());
  }
  return r;
}

namespace {

std::vector<std::pair<std::size_t, Scalar>> gradient(const Scalar& a, const Chart& chart) {
  std::vector<bool> seen(chart.generators().size(), false);
  for (const auto& [m, c] : a.terms())
    for (std::size_t v = 0; v < m.span(); ++v)
      if (m[v] != 0) {
        int p = chart.position(v);
        if (p >= 0) seen[p] = true;
      }
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t p = 0; p < seen.size(); ++p)
    if (seen[p]) out.emplace_back(p, derivative(a, chart.generators()[p]));
  return out;
}

}  // namespace

Scalar poisson_bracket(const Scalar& f, const Scalar& g, const Chart& chart) {
  chart.check_owned(f);
  chart.check_owned(g);
  Scalar r(Rational(0), f.registry());
  if (f.is_constant() || g.is_constant()) return r;
  auto gf = gradient(f, chart), gg = gradient(g, chart);
  for (const auto& [i, df] : gf)
    for (const auto& [j, dg] : gg) {
      const Scalar& b = chart.table(i, j);
      if (!b.is_zero()) r += b * df * dg;
    }
  return r;
}

PoissonElem poisson_bracket(const PoissonElem& f, const PoissonElem& g, const Chart& chart) {
  const Scalar &n1 = f.num(), &d1 = f.den(), &n2 = g.num(), &d2 = g.den();
  if (d1.is_constant() && d2.is_constant())
    return PoissonElem(poisson_bracket(n1, n2, chart), d1 * d2);
  auto br = [&](const Scalar& a, const Scalar& b) { return poisson_bracket(a, b, chart); };
  Scalar num = br(n1, n2) * d1 * d2 - br(n1, d2) * d1 * n2 - br(d1, n2) * n1 * d2 +
               br(d1, d2) * n1 * n2;
  return PoissonElem(num, d1 * d1 * d2 * d2);
}

namespace {

PoissonElem xi(int a, int n, const Chart& chart) {
  if (chart.kind() == ChartKind::exlat) return chart.gen(a == 1 ? "xi1" : "xi2", n);
  if (chart.kind() != ChartKind::darboux)
    throw std::invalid_argument("xi lives in the exlat or darboux chart");
  if (n < 1 || n > chart.size()) throw std::out_of_range("xi site out of range");
  auto g = [&](int k) { return chart.gen("g", k); };
  auto h = [&](int k) { return chart.gen("h", k); };
  if (a == 1) {
    Scalar p = g(n).pow(-1);
    for (int b = 1; b <= n; ++b) p *= h(b);
    return p;
  }
  Scalar sum;
  for (int b0 = 1; b0 <= n; ++b0) {
    Scalar t = g(b0) * g(b0);
    for (int b = b0; b <= n; ++b) t *= h(b);
    for (int b = 1; b < b0; ++b) t *= h(b).pow(-1);
    sum += t;
  }
  return sum * g(n).pow(-1);
}

PoissonElem wronskian(int p, int n, const Chart& chart) {
  return xi(1, n, chart) * xi(2, n + p, chart) - xi(2, n, chart) * xi(1, n + p, chart);
}

void need(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace

PoissonElem build_classical(ClassicalSymbol symbol, int n, const Chart& chart) {
  const int L = chart.size();
  switch (symbol) {
    case ClassicalSymbol::W1:
      need(n >= 1 && n + 1 <= L, "W1 index out of range");
      return wronskian(1, n, chart);
    case ClassicalSymbol::W2:
      need(n >= 1 && n + 2 <= L, "W2 index out of range");
      return wronskian(2, n, chart);
    case ClassicalSymbol::S:
      need(n >= 2 && n + 2 <= L, "S index out of range");
      return PoissonElem(4L) * wronskian(1, n + 1, chart) * wronskian(1, n - 1, chart) /
             (wronskian(2, n, chart) * wronskian(2, n - 1, chart));
    case ClassicalSymbol::Q:
      need(n >= 1 && n + 1 <= L, "Q index out of range");
      return PoissonElem(1L) / wronskian(1, n, chart);
    case ClassicalSymbol::P:
      need(n >= 2 && n + 1 <= L, "P index out of range");
      return wronskian(2, n - 1, chart) / (wronskian(1, n - 1, chart) * wronskian(1, n, chart));
    case ClassicalSymbol::xi1_darboux:
    case ClassicalSymbol::xi2_darboux:
      if (chart.kind() != ChartKind::darboux) throw std::invalid_argument("needs the darboux chart");
      return xi(symbol == ClassicalSymbol::xi1_darboux ? 1 : 2, n, chart);
    case ClassicalSymbol::repQ2:
    case ClassicalSymbol::repP: {
      if (chart.kind() != ChartKind::darboux) throw std::invalid_argument("needs the darboux chart");
      need(n >= 1 && n + 1 <= L, "representation index out of range");
      Scalar g = chart.gen("g", n), g1 = chart.gen("g", n + 1), h = chart.gen("h", n),
             h1 = chart.gen("h", n + 1);
      if (symbol == ClassicalSymbol::repQ2) return h1.pow(-2) * g * g * g1.pow(-2);
      return h.pow(-2) + g * g * g1.pow(-2);
    }
  }
  throw std::invalid_argument("unknown classical symbol");
}

}  // namespace toda2
