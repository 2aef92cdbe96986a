#include "toda2/stoch.hpp"

#include "toda2/checks.hpp"
#include "toda2/quantum.hpp"

#include <algorithm>
#include <limits>

namespace toda2 {

namespace {

Scalar s(int k) { return Scalar::s_pow(k); }

std::string levels_to_string(const Levels& k) {
  std::string out = "v(";
  for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "," : "") + std::to_string(k[i]);
  return out + ")";
}

}  // namespace

FockVector::FockVector(int sites, int trunc) : sites_(sites), K_(trunc) {
  if (sites < 1 || trunc < 0) throw std::invalid_argument("Fock space needs sites >= 1 and K >= 0");
}

FockVector FockVector::basis(int sites, int trunc, const Levels& k) {
  if (static_cast<int>(k.size()) != sites) throw std::invalid_argument("level tuple size");
  FockVector v(sites, trunc);
  v.add(k, Scalar(1L));
  return v;
}

Scalar FockVector::coeff(const Levels& k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Scalar() : it->second;
}

void FockVector::add(const Levels& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

void FockVector::same_shape(const FockVector& o) const {
  if (sites_ != o.sites_) throw std::invalid_argument("Fock vectors on different site counts");
}

FockVector& FockVector::operator+=(const FockVector& o) {
  same_shape(o);
  if (den_ == o.den_) {
    for (const auto& [k, c] : o.c_) add(k, c);
    return *this;
  }
  FockVector r(sites_, std::max(K_, o.K_));
  r.den_ = den_ * o.den_;
  for (const auto& [k, c] : c_) r.add(k, c * o.den_);
  for (const auto& [k, c] : o.c_) r.add(k, c * den_);
  return *this = std::move(r);
}

FockVector& FockVector::operator-=(const FockVector& o) { return *this += Scalar(-1L) * o; }

FockVector operator*(const Scalar& c, FockVector v) {
  if (c.is_zero()) {
    v.c_.clear();
    return v;
  }
  for (auto& [k, x] : v.c_) x = c * x;
  return v;
}

std::vector<Levels> FockVector::overflow() const {
  std::vector<Levels> out;
  for (const auto& [k, c] : c_)
    if (*std::max_element(k.begin(), k.end()) > K_) out.push_back(k);
  return out;
}

int FockVector::max_level() const {
  int m = -1;
  for (const auto& [k, c] : c_) m = std::max(m, *std::max_element(k.begin(), k.end()));
  return m;
}

int FockVector::min_top_level() const {
  if (c_.empty()) return -1;
  int m = std::numeric_limits<int>::max();
  for (const auto& [k, c] : c_) m = std::min(m, *std::max_element(k.begin(), k.end()));
  return m;
}

std::size_t FockVector::term_count() const {
  std::size_t n = 0;
  for (const auto& [k, c] : c_) n += c.size();
  return n;
}

std::string FockVector::first_term() const {
  if (c_.empty()) return "0";
  const auto& [k, c] = *c_.begin();
  return "(" + c.to_string() + ") " + levels_to_string(k);
}

FockVector fock_act(FockOp op, int site, const FockVector& v) {
  if (site < 1 || site > v.sites()) throw std::out_of_range("Fock site out of range");
  const std::size_t i = static_cast<std::size_t>(site - 1);
  FockVector r(v.sites(), v.trunc());
  r.set_den(v.den());
  for (const auto& [k, c] : v.coeffs()) {
    Levels t = k;
    switch (op) {
      case FockOp::a:
        t[i] -= 1;
        r.add(t, (Scalar(1L) - s(-4 * k[i])) * c);
        break;
      case FockOp::astar:
        t[i] += 1;
        r.add(t, c);
        break;
      case FockOp::qD:
        r.add(t, s(-4 * k[i]) * c);
        break;
    }
  }
  return r;
}

FockVector weyl_act(const FockVector& v, const WeylOp& op) {
  if (op.lattice().sites != v.sites()) throw std::invalid_argument("operator and Fock space sizes differ");
  FockVector r(v.sites(), v.trunc());
  r.set_den(v.den());
  for (const auto& [k, c] : v.coeffs())
    for (const auto& [mono, coeff] : op.terms()) {
      Levels t = k;
      int e = 0;
      for (const auto& x : mono) {
        if (x.v2 % 2 || x.u2 % 2) throw std::domain_error("half-integer power has no Fock action");
        const std::size_t i = static_cast<std::size_t>(x.site - 1);
        // v^k V^b = q^{2kb} v^k, then U^a shifts the level by a
        e += 2 * t[i] * x.v2;
        t[i] += x.u2 / 2;
      }
      r.add(t, s(e) * coeff * c);
    }
  return r;
}

FockVector build_state(StateKind kind, int K, int N, int k) {
  if (kind == StateKind::vk) {
    if (k < 0) throw std::invalid_argument("negative level");
    return FockVector::basis(1, K, {k});
  }
  if (K < 0) throw std::invalid_argument("negative truncation");
  // c_k = q^{-2k} / prod_{j<=k} (1 - q^{-2j}) over the common denominator
  Scalar den(1L);
  for (int j = 1; j <= K; ++j) den *= Scalar(1L) - s(-4 * j);
  std::vector<Scalar> num(K + 1);
  for (int i = 0; i <= K; ++i) {
    Scalar c = s(-4 * i);
    for (int j = i + 1; j <= K; ++j) c *= Scalar(1L) - s(-4 * j);
    num[i] = c;
  }
  if (kind == StateKind::omega) N = 1;
  if (N < 1) throw std::invalid_argument("Omega needs N >= 1");
  FockVector v(N, K);
  Levels lv(N, 0);
  while (true) {
    Scalar c(1L);
    for (int x : lv) c *= num[x];
    v.add(lv, c);
    int pos = N - 1;
    while (pos >= 0 && lv[pos] == K) lv[pos--] = 0;
    if (pos < 0) break;
    ++lv[pos];
  }
  v.set_den(den.pow(N));
  return v;
}

WeylOp qosc_a(Lattice lat, int n) {
  return (WeylOp(lat, Scalar(1L)) - WeylOp::V(lat, n, -2)) * WeylOp::U(lat, n, -2);
}
WeylOp qosc_astar(Lattice lat, int n) { return WeylOp::U(lat, n, 2); }
WeylOp qosc_q2D(Lattice lat, int n) { return WeylOp::V(lat, n, -2); }

WeylOp qosc_H1(Lattice lat) {
  WeylOp h(lat);
  for (int n = 1; n <= lat.sites; ++n) h += qosc_a(lat, n) * qosc_astar(lat, n + 1) + qosc_q2D(lat, n);
  return h;
}

// ------------------------------------------------------------------ checks

namespace {

void log_fock(ResidualLog& log, const std::string& where, const FockVector& v) {
  log.add_raw(where, v.term_count(), v.first_term());
}

// Components whose every site level lies at or below `top`.
FockVector restrict_to(const FockVector& v, int top) {
  FockVector r(v.sites(), v.trunc());
  r.set_den(v.den());
  for (const auto& [k, c] : v.coeffs())
    if (*std::max_element(k.begin(), k.end()) <= top) r.add(k, c);
  return r;
}

}  // namespace

CheckReport check_stoch(const std::string& id, const CheckParams& p) {
  CheckReport r;
  r.id = id;
  ResidualLog log;
  const int K = p.trunc;
  if (K < 3) throw std::invalid_argument("truncation K must be at least 3");
  const int N = std::clamp(p.sites, 2, 3);
  const Lattice one{1, true};
  const WeylOp id1(one, Scalar(1L));

  if (id == "qosc_algebra") {
    WeylOp a = qosc_a(one, 1), as = qosc_astar(one, 1), qd = qosc_q2D(one, 1);
    log.add("a a*", a * as - (id1 - qd));
    log.add("a* a", as * a - (id1 - s(-4) * qd));
    log.add("a q2D", a * qd - s(4) * (qd * a));
    log.add("a* q2D", as * qd - s(-4) * (qd * as));
    for (int k = 0; k < K; ++k) {
      FockVector v = build_state(StateKind::vk, K, 1, k);
      const std::string w = "v(" + std::to_string(k) + ")";
      log_fock(log, w + " a", fock_act(FockOp::a, 1, v) - weyl_act(v, a));
      log_fock(log, w + " a*", fock_act(FockOp::astar, 1, v) - weyl_act(v, as));
      log_fock(log, w + " q2D", fock_act(FockOp::qD, 1, v) - weyl_act(v, qd));
    }
    r.params = {{"K", K}};
  } else if (id == "Lqosc_match") {
    ModelParams mp = ModelParams::make(N, Preset::qOsc);
    mp.mutation = p.mutation;
    const Scalar lam = lam_var();
    for (int n = 1; n <= N; ++n) {
      auto res = residual(build_lax(LaxKind::Lloc, n, lam, mp), build_lax(LaxKind::Lqosc, n, lam, mp));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          log.add("n=" + std::to_string(n) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                  res(i, j));
    }
    // Hamiltonians of the preset against the oscillator transfer matrix
    auto M = build_lax(LaxKind::Lqosc, 1, lam, mp);
    for (int n = 2; n <= N; ++n) M = build_lax(LaxKind::Lqosc, n, lam, mp) * M;
    auto cf = trace(M).coefficients_in("lam");
    auto H = hamiltonians(mp);
    for (int j = 0; j <= N; ++j) {
      auto it = cf.find(N - j);
      WeylOp c = it == cf.end() ? WeylOp(mp.lattice()) : it->second;
      log.add("H" + std::to_string(j), H[j] - (j % 2 ? -c : c));
    }
    r.params = {{"N", N}, {"preset", "qOsc"}};
  } else if (id == "column_eigen") {
    ModelParams mp = ModelParams::make(1, Preset::qOsc);
    mp.mutation = p.mutation;
    const Scalar lam = lam_var();
    auto L = build_lax(LaxKind::Lqosc, 1, lam, mp);
    FockVector w = build_state(StateKind::omega, K);
    for (int j = 0; j < 2; ++j) {
      FockVector res = weyl_act(w, L(0, j) + L(1, j)) - (lam - Scalar(1L)) * w;
      log_fock(log, "column " + std::to_string(j + 1), restrict_to(res, K - 1));
    }
    r.params = {{"K", K}};
    r.note = "compared on levels below K";
  } else if (id == "omega_identity") {
    WeylOp a = qosc_a(one, 1), as = qosc_astar(one, 1), qd = qosc_q2D(one, 1);
    FockVector w = build_state(StateKind::omega, K);
    FockVector lhs = Scalar(-1L) * s(-4) * weyl_act(w, as);
    FockVector res = lhs - weyl_act(w, qd - id1);
    log_fock(log, "-q^-2 omega a* vs omega (q2D - 1)", restrict_to(res, K));
    FockVector ev = weyl_act(w, a) - s(-4) * w;
    log_fock(log, "omega a vs q^-2 omega", restrict_to(ev, K - 1));
    if (ev.is_zero() || ev.min_top_level() != K || ev.max_level() != K)
      log.add_raw("eigen defect level", 1, "defect not confined to level K");
    if (res.is_zero() || res.min_top_level() != K + 1)
      log.add_raw("identity defect level", 1, "defect not confined to level K+1");
    r.params = {{"K", K}};
  } else if (id == "Omega_H1") {
    const Lattice lat{N, true};
    FockVector W = build_state(StateKind::Omega, K, N);
    FockVector res = weyl_act(W, qosc_H1(lat)) - Scalar(static_cast<long>(N)) * W;
    log_fock(log, "interior", restrict_to(res, K - 2));
    r.params = {{"N", N}, {"K", K}, {"interior", {0, K - 2}}};
    r.note = std::to_string(res.coeffs().size()) + " boundary components at levels >= " + std::to_string(K - 1);
  } else if (id == "zero_column_sum") {
    // matrix of H1 - N in the basis v^(k), rows from the primitive actions
    FockVector W = build_state(StateKind::Omega, K, N);
    std::map<Levels, Scalar> column;
    for (const auto& [k, wk] : W.coeffs()) {
      FockVector row = FockVector::basis(N, K, k);
      FockVector acc(N, K);
      for (int n = 1; n <= N; ++n) {
        acc += fock_act(FockOp::astar, n % N + 1, fock_act(FockOp::a, n, row));
        acc += fock_act(FockOp::qD, n, row);
      }
      acc -= Scalar(static_cast<long>(N)) * row;
      for (const auto& [kp, g] : acc.coeffs()) {
        Scalar& slot = column[kp];
        slot += wk * g;
      }
    }
    std::size_t cols = 0;
    for (const auto& [kp, sum] : column) {
      if (*std::max_element(kp.begin(), kp.end()) > K - 2) continue;
      ++cols;
      log.add(levels_to_string(kp), sum);
    }
    r.params = {{"N", N}, {"K", K}, {"interior_columns", cols}};
  } else {
    throw std::invalid_argument("unknown stochastic check " + id);
  }
  log.fill(r);
  return r;
}

}  // namespace toda2
