#include "toda2/quantum.hpp"

namespace toda2 {

namespace {

Scalar s(int k) { return Scalar::s_pow(k); }
const Scalar& q2() {
  static const Scalar v = Scalar::s_pow(4);
  return v;
}

WeylOp W(Lattice lat, const Scalar& c) { return WeylOp(lat, c); }
WeylOp Vp(Lattice lat, int n, int v2) { return WeylOp::V(lat, n, v2); }
WeylOp Up(Lattice lat, int n, int u2) { return WeylOp::U(lat, n, u2); }

Matrix<WeylOp> m2(const WeylOp& a, const WeylOp& b, const WeylOp& c, const WeylOp& d) {
  return from_rows<WeylOp>({{a, b}, {c, d}});
}

Matrix<Scalar> m2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  return from_rows<Scalar>({{a, b}, {c, d}});
}

// Row-major 4x4 from 16 entries.
Matrix<Scalar> m4(std::initializer_list<Scalar> e) {
  Matrix<Scalar> m(4, 4, Scalar());
  std::size_t k = 0;
  for (const auto& x : e) {
    m(k / 4, k % 4) = x;
    ++k;
  }
  return m;
}

ModelParams shifted(const ModelParams& p, int d1_shift, int d3_shift) {
  ModelParams r = p;
  r.d1 = s(d1_shift) * p.d1;
  r.d3 = s(d3_shift) * p.d3;
  return r;
}

}  // namespace

Scalar lam_var() { return Scalar::var("lam"); }
Scalar l_var(int i) { return Scalar::var("l" + std::to_string(i)); }

ModelParams ModelParams::make(int N, Preset preset) {
  if (N < 1) throw std::invalid_argument("model needs at least one site");
  ModelParams p;
  p.N = N;
  p.preset = preset;
  p.d1 = Scalar::var("d1");
  p.d2 = Scalar::var("d2");
  p.d3 = Scalar::var("d3");
  switch (preset) {
    case Preset::generic: break;
    case Preset::qToda: p.d2 = p.d3 = Scalar(); break;
    case Preset::Toda2: p.d1 = p.d3 = Scalar(); break;
    case Preset::qOsc:
      p.d1 = -s(-2);
      p.d2 = Scalar(1L);
      p.d3 = Scalar();
      break;
  }
  return p;
}

ScalarFraction theta_q(int n) {
  if (n > 0) return ScalarFraction(1L);
  if (n < 0) return ScalarFraction(0L);
  return ScalarFraction(Scalar(1L), s(1) + s(-1));
}

Matrix<Scalar> build_aux(AuxKind kind, const Scalar& l1, const Scalar& l2) {
  const Scalar Z, one(1L), c32 = s(3) - s(-1), qq = q2() - one;
  const Scalar den = l2 * q2() - l1;
  switch (kind) {
    case AuxKind::A:
    case AuxKind::Rtwisted: {
      Matrix<Scalar> m = m4({den, Z, Z, Z,
                             Z, l2 - l1, l1 * qq, Z,
                             Z, l2 * qq, (l2 - l1) * q2(), Z,
                             Z, Z, Z, den});
      m.set_den(den);
      return m;
    }
    case AuxKind::D: {
      Matrix<Scalar> m = m4({den, Z, Z, Z,
                             Z, (l2 - l1) * q2(), l2 * qq, Z,
                             Z, l1 * qq, l2 - l1, Z,
                             Z, l1 * (l2 - l1) * qq, -(l2 * (l2 - l1) * qq), den});
      m.set_den(den);
      return m;
    }
    case AuxKind::C:
      return m4({one, Z, Z, Z,
                 Z, one, -c32, Z,
                 Z, Z, q2(), Z,
                 Z, Z, l2 * qq, one});
    case AuxKind::B:
      return m4({one, Z, Z, Z,
                 Z, q2(), Z, Z,
                 Z, -c32, one, Z,
                 Z, l1 * qq, Z, one});
    case AuxKind::Rplus:
      return m4({s(1), Z, Z, Z,
                 Z, s(-1), s(1) - s(-3), Z,
                 Z, Z, s(-1), Z,
                 Z, Z, Z, s(1)});
    case AuxKind::Rminus: {
      // R^- = P R^+(s -> 1/s) P
      Matrix<Scalar> inv = m4({s(-1), Z, Z, Z,
                               Z, s(1), s(-1) - s(3), Z,
                               Z, Z, s(1), Z,
                               Z, Z, Z, s(-1)});
      auto P = flip<Scalar>(2, Z, one);
      return P * inv * P;
    }
    case AuxKind::Btilde: {
      auto b = build_aux(AuxKind::B, l1, l2);
      return partial_transpose(inverse(partial_transpose(b, 2, 1)), 2, 1);
    }
    case AuxKind::Ctilde: {
      auto c = build_aux(AuxKind::C, l1, l2);
      return partial_transpose(inverse(partial_transpose(c, 2, 2)), 2, 2);
    }
  }
  throw std::invalid_argument("unknown structure matrix");
}

Matrix<Scalar> build_scalar_aux(ScalarAuxKind kind, const Scalar& lam, const ModelParams& p,
                                const AuxConstants& c) {
  const bool flip_beta = p.mutation == "flip_G0_beta";
  const Scalar one(1L);
  switch (kind) {
    case ScalarAuxKind::M0:
    case ScalarAuxKind::Mtilde0: {
      if (kind == ScalarAuxKind::M0 && c.gamma == one) throw GammaOneBranch();
      const Scalar corner = kind == ScalarAuxKind::M0 ? s(-1) : s(3);
      Scalar b12 = c.beta * lam;
      if (flip_beta) b12 = -b12;
      return c.alpha * m2(one, b12, c.gamma * lam, corner + c.delta * lam + c.beta * lam * lam);
    }
    case ScalarAuxKind::G0: {
      Scalar b = s(7) * p.d2 * p.d3 * lam;
      Scalar b12 = flip_beta ? -b : b;
      return m2(one, b12, (one - q2()) * lam, s(-1) + s(5) * p.d1 * lam + b * lam);
    }
    case ScalarAuxKind::Gtilde0: {
      Scalar b = s(-1) * p.d2 * p.d3 * lam;
      return m2(one, b, (one - q2()) * lam, s(-1) + s(1) * p.d1 * lam + b * lam);
    }
  }
  throw std::invalid_argument("unknown scalar matrix");
}

WeylOp P_hat(int n, Lattice lat) {
  return Vp(lat, n, -2) + WeylOp::monomial(lat, {{n, 0, 2}, {n + 1, 0, -2}});
}

WeylOp Q2_hat(int n, Lattice lat) {
  return WeylOp::monomial(lat, {{n + 1, -2, 0}, {n, 0, 2}, {n + 1, 0, -2}}, s(1));
}

WeylOp Q_hat(int n, Lattice lat) {
  return WeylOp::monomial(lat, {{n + 1, -1, 0}, {n, 0, 1}, {n + 1, 0, -1}});
}

Matrix<WeylOp> build_lax(LaxKind kind, int n, const Scalar& lam, const ModelParams& p) {
  const Lattice lat = p.lattice();
  n = lat.normalize(n);
  const WeylOp one = W(lat, Scalar(1L)), zero = W(lat, Scalar());
  const WeylOp L = W(lat, lam);
  const WeylOp V = Vp(lat, n, 2), Vi = Vp(lat, n, -2), U = Up(lat, n, 2), Ui = Up(lat, n, -2);
  const Scalar &d1 = p.d1, &d2 = p.d2, &d3 = p.d3;

  switch (kind) {
    case LaxKind::l:
      return m2(L - P_hat(n, lat), -one, Q2_hat(n, lat), zero);
    case LaxKind::lhat:
      return build_lax(LaxKind::l, n, lam, p) *
             lift(build_scalar_aux(ScalarAuxKind::G0, lam, p), lat);
    case LaxKind::lhat_display: {
      // alpha[[(1-gamma)lam - P, -s^-1 - delta lam - lam beta P], [Q^2, lam beta Q^2]]
      const Scalar gamma = Scalar(1L) - q2(), delta = s(5) * d1, beta = s(7) * d2 * d3;
      WeylOp P = P_hat(n, lat), Q2 = Q2_hat(n, lat);
      return m2(W(lat, (Scalar(1L) - gamma) * lam) - P, W(lat, -s(-1) - delta * lam) - (lam * beta) * P,
                Q2, (lam * beta) * Q2);
    }
    case LaxKind::gaugeN:
      return m2(one, -s(-1) * Ui, zero, WeylOp::monomial(lat, {{n, -2, -2}}));
    case LaxKind::gaugeNinv:
      return m2(one, s(-1) * V, zero, U * V);
    case LaxKind::gauge_l_display:
      return m2(L - Vi, (-s(-1) * L + (s(-1) - Scalar(1L)) * Vi) * Ui, s(1) * U, -one);
    case LaxKind::G0n:
      return build_lax(LaxKind::gaugeNinv, n, lam, p) *
             lift(build_scalar_aux(ScalarAuxKind::G0, lam, p), lat) *
             build_lax(LaxKind::gaugeN, n, lam, p);
    case LaxKind::G0n_display: {
      const Scalar dd = d2 * d3;
      WeylOp g12 = (W(lat, s(-2) + s(4) * d1 * lam + s(6) * dd * lam * lam - s(-1)) +
                    (s(7) * dd * lam) * Vi - ((s(-2) - s(2)) * lam) * V) *
                   Ui;
      WeylOp g22 = W(lat, s(-1) + s(5) * d1 * lam + s(7) * dd * lam * lam) - (lam * (s(3) - s(7))) * V;
      return m2(one + ((s(-1) - s(3)) * lam) * V, g12, ((Scalar(1L) - q2()) * lam) * (U * V), g22);
    }
    case LaxKind::scriptL:
      return build_lax(LaxKind::gaugeNinv, n + 1, lam, p) * build_lax(LaxKind::lhat, n, lam, p) *
             build_lax(LaxKind::gaugeN, n, lam, p);
    case LaxKind::scriptL_display: {
      const Scalar dd = d2 * d3;
      WeylOp inner = one + (s(2) * d1) * Vi + (q2() * dd) * Vp(lat, n, -4);
      return m2(W(lat, q2() * lam) - Vi, (-s(3) * lam) * inner * Ui, s(1) * U,
                -one + (q2() * lam * dd) * Vi);
    }
    case LaxKind::scriptLtilde:
      return build_lax(LaxKind::scriptL_display, n, lam, shifted(p, -4, -8));
    case LaxKind::scriptLtilde_literal:
      return build_lax(LaxKind::scriptL_display, n, lam, shifted(p, -4, 0));
    case LaxKind::Lloc: {
      WeylOp inner = W(lat, d2) + (s(2) * d1) * Vi + (q2() * d3) * Vp(lat, n, -4);
      WeylOp c21 = p.mutation == "zero_Lloc_21" ? zero : -s(-4) * U;
      return m2(L - Vi, (q2() * lam) * inner * Ui, c21, W(lat, -d2) + (lam * d3) * Vi);
    }
    case LaxKind::Lqosc: {
      WeylOp a = (one - Vi) * Ui, astar = U, q2D = Vi;
      WeylOp c21 = p.mutation == "zero_Lqosc_21" ? zero : -s(-4) * astar;
      return m2(L - q2D, (q2() * lam) * a, c21, -one);
    }
  }
  throw std::invalid_argument("unknown Lax kind");
}

Matrix<WeylOp> monodromy(const Scalar& lam, const ModelParams& p) {
  Matrix<WeylOp> T = build_lax(LaxKind::l, 1, lam, p);
  for (int n = 2; n <= p.N; ++n) T = build_lax(LaxKind::lhat, n, lam, p) * T;
  return T;
}

WeylOp transfer_trace(TraceKind kind, const Scalar& lam, const ModelParams& p) {
  const Lattice lat = p.lattice();
  if (kind == TraceKind::tau) {
    Matrix<Scalar> close = build_scalar_aux(ScalarAuxKind::Gtilde0, lam, p) *
                           m2(s(-2), Scalar(), Scalar(), s(2));
    return trace(monodromy(lam, p) * lift(close, lat));
  }
  Matrix<WeylOp> M = build_lax(LaxKind::Lloc, 1, lam, p);
  for (int n = 2; n <= p.N; ++n) M = build_lax(LaxKind::Lloc, n, lam, p) * M;
  return trace(M);
}

std::vector<WeylOp> hamiltonians(const ModelParams& p) {
  auto coeffs = transfer_trace(TraceKind::tloc, lam_var(), p).coefficients_in("lam");
  std::vector<WeylOp> H;
  for (int j = 0; j <= p.N; ++j) {
    auto it = coeffs.find(p.N - j);
    WeylOp h = it == coeffs.end() ? WeylOp(p.lattice()) : it->second;
    H.push_back(j % 2 ? -h : h);
  }
  return H;
}

WeylOp trq(int power, Lattice lat) {
  if (power != 1 && power != 2) throw std::invalid_argument("trq power must be 1 or 2");
  WeylOp sum(lat);
  for (int n = 1; n <= lat.sites; ++n) {
    WeylOp P = P_hat(n, lat);
    sum += power == 1 ? P : P * P + (s(3) + s(-1)) * Q2_hat(n, lat);
  }
  return sum;
}

WeylOp xi_quantum(int component, int n, Lattice lat) {
  if (lat.periodic) throw std::invalid_argument("xi lives on an open lattice");
  n = lat.normalize(n);
  if (component == 1) {
    WeylOp r = Up(lat, n, -1);
    for (int a = 1; a <= n; ++a) r *= Vp(lat, a, 1);
    return r;
  }
  if (component != 2) throw std::invalid_argument("xi component must be 1 or 2");
  WeylOp sum(lat);
  for (int a = 1; a <= n; ++a) {
    WeylOp t = Up(lat, n, -1);
    for (int b = a; b <= n; ++b) t *= Vp(lat, b, 1);
    t *= Up(lat, a, 2);
    for (int b = 1; b < a; ++b) t *= Vp(lat, b, -1);
    sum += t;
  }
  return sum;
}

WeylOp W_quantum(int p, int n, Lattice lat) {
  return s(2) * xi_quantum(1, n, lat) * xi_quantum(2, n + p, lat) -
         xi_quantum(2, n, lat) * xi_quantum(1, n + p, lat);
}

}  // namespace toda2
