#include "toda2/checks.hpp"

#include "toda2/matrix.hpp"
#include "toda2/poisson.hpp"
#include "toda2/weyl.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace toda2 {

// ------------------------------------------------------------------ property checks

namespace {

constexpr int kSamples = 12;

Scalar random_scalar(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> len(1, 3), e(-2, 2), c(-5, 5), d(1, 3);
  Scalar out;
  for (int t = len(rng); t > 0; --t) {
    Scalar m(Rational(c(rng), d(rng)));
    for (const auto& v : vars) m *= Scalar::var(v, e(rng));
    out += m;
  }
  return out;
}

// Doubled exponents in [-2, 2]; `step` 2 keeps them integral.
WeylOp random_weyl(std::mt19937_64& rng, Lattice lat, int step = 1) {
  std::uniform_int_distribution<int> len(1, 3), site(1, lat.sites), e(-2 / step, 2 / step), c(-3, 3);
  WeylOp out(lat);
  for (int t = len(rng); t > 0; --t) {
    std::vector<SiteExp> ex;
    for (int k = 0; k < 2; ++k) ex.push_back({site(rng), step * e(rng), step * e(rng)});
    out += WeylOp::monomial(lat, ex, Scalar(static_cast<long>(c(rng))) * Scalar::s_pow(e(rng)));
  }
  return out;
}

Matrix<Scalar> random_matrix(std::mt19937_64& rng, std::size_t n, const std::vector<std::string>& vars) {
  Matrix<Scalar> m(n, n, Scalar());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(rng, vars);
  return m;
}

void prop_ring(std::mt19937_64& rng, ResidualLog& log) {
  const std::vector<std::string> vars{"s", "d1", "d2"};
  for (int i = 0; i < kSamples; ++i) {
    const std::string at = "#" + std::to_string(i);
    Scalar a = random_scalar(rng, vars), b = random_scalar(rng, vars), c = random_scalar(rng, vars);
    log.add("assoc " + at, (a * b) * c - a * (b * c));
    log.add("distrib " + at, a * (b + c) - (a * b + a * c));
    log.add("commute " + at, a * b - b * a);
    const std::map<std::string, Scalar> sub{{"s", Scalar(Rational(3, 2)) * Scalar::var("d1")}, {"d2", Scalar(-2L) * Scalar::s_pow(3)}};
    Scalar hom = (a * b).substitute(sub) - a.substitute(sub) * b.substitute(sub);
    log.add("substitute " + at, hom);
    log.add("round trip " + at, Scalar::parse(a.to_string()) - a);
  }
}

void prop_weyl(std::mt19937_64& rng, ResidualLog& log) {
  const Lattice lat{3, true};
  for (int i = 0; i < kSamples; ++i) {
    const std::string at = "#" + std::to_string(i);
    WeylOp a = random_weyl(rng, lat), b = random_weyl(rng, lat), c = random_weyl(rng, lat);
    log.add("assoc " + at, (a * b) * c - a * (b * c));
    log.add("distrib " + at, a * (b + c) - (a * b + a * c));
    // rebuilding from the stored terms must reproduce the same normal form
    WeylOp again(lat);
    for (const auto& [m, k] : a.terms())
      again += WeylOp::monomial(lat, std::vector<SiteExp>(m.begin(), m.end()), k);
    log.add("idempotent " + at, again - a);
    WeylOp f = random_weyl(rng, lat, 2), g = random_weyl(rng, lat, 2);
    log.add("automorphism " + at, conjugate_V(f * g) - conjugate_V(f) * conjugate_V(g));
    // disjoint supports commute
    const Lattice wide{4, true};
    WeylOp x(wide), y(wide);
    for (const auto& [m, k] : a.terms()) {
      std::vector<SiteExp> ex;
      for (const auto& e : m)
        if (e.site == 1) ex.push_back(e);
      x += WeylOp::monomial(wide, ex, k);
    }
    for (const auto& [m, k] : b.terms()) {
      std::vector<SiteExp> ex;
      for (const auto& e : m)
        if (e.site != 1) ex.push_back({e.site + 1, e.v2, e.u2});
      y += WeylOp::monomial(wide, ex, k);
    }
    log.add("locality " + at, commutator(x, y));
  }
}

void prop_matrix(std::mt19937_64& rng, ResidualLog& log) {
  const std::vector<std::string> vars{"s", "d1"};
  const Scalar one(1L);
  for (int i = 0; i < kSamples / 2; ++i) {
    const std::string at = "#" + std::to_string(i);
    auto a = random_matrix(rng, 2, vars), b = random_matrix(rng, 2, vars), c = random_matrix(rng, 2, vars);
    auto ab = residual((a * b) * c, a * (b * c));
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t k = 0; k < 2; ++k) log.add("assoc " + at, ab(r, k));
    log.add("det2 " + at, det_comm(a * b).first - det_comm(a).first * det_comm(b).first);
    auto x = random_matrix(rng, 3, vars), y = random_matrix(rng, 3, vars);
    log.add("det3 " + at, det_comm(x * y).first - det_comm(x).first * det_comm(y).first);
    log.add("trace " + at, trace(a * b) - trace(b * a));
    auto legs = residual(tensor_embed(a, 1, one) * tensor_embed(b, 2, one),
                         tensor_embed(b, 2, one) * tensor_embed(a, 1, one));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t k = 0; k < 4; ++k) log.add("legs " + at, legs(r, k));
  }
  // the trace is not cyclic for noncommuting entries
  const Lattice one_site{1, true};
  const WeylOp z(one_site), u = WeylOp::U(one_site, 1), v = WeylOp::V(one_site, 1);
  auto A = from_rows<WeylOp>({{u, z}, {z, z}}), B = from_rows<WeylOp>({{v, z}, {z, z}});
  if ((trace(A * B) - trace(B * A)).is_zero()) log.add_raw("Weyl trace counterexample", 1, "tr(UV) = tr(VU)");
}

void prop_poisson(std::mt19937_64& rng, ResidualLog& log) {
  Chart c = Chart::make(ChartKind::qp, 3, true);
  std::vector<std::string> vars;
  for (int n = 1; n <= 3; ++n) {
    vars.push_back("Q" + std::to_string(n));
    vars.push_back("P" + std::to_string(n));
  }
  std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1), e(0, 2), len(1, 3);
  auto poly = [&] {
    Scalar out;
    for (int t = len(rng); t > 0; --t) out += Scalar(static_cast<long>(t)) * Scalar::var(vars[pick(rng)], e(rng)) *
                                              Scalar::var(vars[pick(rng)], e(rng));
    return out;
  };
  for (int i = 0; i < kSamples; ++i) {
    const std::string at = "#" + std::to_string(i);
    Scalar f = poly(), g = poly(), h = poly();
    log.add("antisymmetry " + at, poisson_bracket(f, g, c) + poisson_bracket(g, f, c));
    log.add("Leibniz " + at,
            poisson_bracket(f * g, h, c) - f * poisson_bracket(g, h, c) - poisson_bracket(f, h, c) * g);
  }
}

}  // namespace

CheckReport check_property(const std::string& id, const CheckParams& p) {
  CheckReport r;
  r.id = id;
  ResidualLog log;
  std::mt19937_64 rng(p.seed);
  if (id == "prop_ring")
    prop_ring(rng, log);
  else if (id == "prop_weyl")
    prop_weyl(rng, log);
  else if (id == "prop_matrix")
    prop_matrix(rng, log);
  else if (id == "prop_poisson")
    prop_poisson(rng, log);
  else
    throw std::invalid_argument("unknown property check " + id);
  r.params = {{"seed", p.seed}, {"samples", kSamples}};
  log.fill(r);
  return r;
}

// ------------------------------------------------------------------ registry

namespace {

using Runner = CheckReport (*)(const std::string&, const CheckParams&);

struct Row {
  const char* id;
  const char* module;
  const char* anchor;
  const char* defaults;
  Runner run;
};

// clang-format off
const Row kRows[] = {
  {"w1w1", "poisson", "first Wronskian components close quadratically", "open chain of 8 sites, n,m in 1..7", check_bracket_identity},
  {"w1w2", "poisson", "mixed Wronskian bracket", "open chain of 8 sites", check_bracket_identity},
  {"w2w2", "poisson", "second Wronskian components, interior only", "open chain of 8 sites, n in 3..6", check_bracket_identity},
  {"virlat", "poisson", "lattice Virasoro algebra from the Wronskians", "open chain of 8 sites", check_bracket_identity},
  {"qq", "poisson", "Q-Q bracket recovered from the lattice chart", "open chain of 8 sites", check_bracket_identity},
  {"qp", "poisson", "Q-P bracket recovered from the lattice chart", "open chain of 8 sites", check_bracket_identity},
  {"pp", "poisson", "P-P bracket recovered from the lattice chart", "open chain of 8 sites", check_bracket_identity},
  {"exlat_from_darboux", "poisson", "Darboux coordinates realise the exchange algebra", "open chain of 6 sites", check_bracket_identity},
  {"qp_from_rep", "poisson", "Q and P from the Darboux realisation", "open chain of 6 sites", check_bracket_identity},
  {"jacobi", "poisson", "Jacobi identity on every chart", "qp N=sites, exlat 6, darboux 4", check_bracket_identity},
  {"AD", "quantum", "diagonal structure matrices exchange the Lax matrices", "N=sites", check_quantum},
  {"B", "quantum", "off-diagonal structure matrix B", "N=sites", check_quantum},
  {"C", "quantum", "off-diagonal structure matrix C", "N=sites", check_quantum},
  {"DGCG_general", "quantum", "scalar compatibility with free alpha, beta, gamma, delta", "formal parameters", check_quantum},
  {"dual_general", "quantum", "dual scalar compatibility", "formal parameters", check_quantum},
  {"ATT_TTD", "quantum", "quadratic exchange relation of the monodromy", "N=sites", check_quantum},
  {"distant_commute", "quantum", "Lax matrices two or more sites apart commute", "N=max(sites,4)", check_quantum},
  {"YBE_twisted", "quantum", "Yang-Baxter equation for the twisted R-matrix", "generic d1,d2,d3", check_quantum},
  {"RLL_ultralocal", "quantum", "RLL relation of the ultralocal Lax matrix", "generic d1,d2,d3", check_quantum},
  {"gauge_l", "quantum", "gauge transform of the two-site Lax matrix", "chain of max(sites,3)", check_quantum},
  {"gauge_G", "quantum", "gauge transform of the scalar factor", "chain of max(sites,3)", check_quantum},
  {"scriptL_assembly", "quantum", "ultralocal Lax matrix assembled from its factors", "chain of max(sites,3)", check_quantum},
  {"entrywise_conjugation", "quantum", "shift conjugation acts entrywise", "chain of max(sites,3)", check_quantum},
  {"taut", "quantum", "twisted transfer matrix equals the ultralocal trace", "N=1..sites", check_quantum},
  {"trace_identity", "quantum", "closure of the gauge chain under the trace", "N=1..sites", check_quantum},
  {"exchange_xi", "quantum", "exchange algebra of the quantum xi operators", "open chain of 6 sites", check_quantum},
  {"W_algebra_q", "quantum", "quantum lattice Wronskian algebra", "open chain of 6 sites", check_quantum},
  {"W1_monomial", "quantum", "first Wronskian is a single Weyl monomial", "open chain of 6 sites", check_quantum},
  {"QP_match", "quantum", "Q and P from the Wronskians match the canonical operators", "open chain of 6 sites", check_quantum},
  {"QP_relations", "quantum", "exchange relations of the canonical operators", "open chain of 6 sites", check_quantum},
  {"commute", "quantum", "Hamiltonians commute pairwise", "N=sites, generic d's", check_quantum},
  {"tau_commute", "quantum", "twisted transfer matrices commute", "N=2..max(sites,2)", check_quantum},
  {"tloc_commute", "quantum", "ultralocal transfer matrices commute", "N=2..max(sites,2)", check_quantum},
  {"H1_qToda", "quantum", "first Hamiltonian of the q-Toda limit", "N=sites, d2=d3=0", check_quantum},
  {"H1_Toda2", "quantum", "first Hamiltonian of the Toda2 limit", "N=sites, d1=d3=0", check_quantum},
  {"H2_Toda2", "quantum", "second Hamiltonian of the Toda2 limit", "N=sites, d1=d3=0", check_quantum},
  {"trq_commute", "quantum", "power-sum traces commute", "N=sites", check_quantum},
  {"trq_match1", "quantum", "first Hamiltonian as a power-sum trace", "N=sites, d2=1", check_quantum},
  {"trq_match2", "quantum", "second Hamiltonian as a power-sum trace", "N=sites, d2=1", check_quantum},
  {"poissonL_explicit", "classical", "quadratic bracket of the Lax matrix, explicit form", "N=sites", check_classical},
  {"poissonL_dform", "classical", "quadratic bracket of the Lax matrix, d-form", "N=sites", check_classical},
  {"involution", "classical", "traces of Lax powers are in involution", "N=sites, powers 1..3", check_classical},
  {"curve_NxN", "classical", "spectral curve of the N x N Lax matrix", "N=sites", check_classical},
  {"curve_2x2", "classical", "spectral curve of the 2 x 2 monodromy", "N=sites", check_classical},
  {"pN_equals_trT", "classical", "both spectral curves share the same polynomial", "N=2..max(4,sites)", check_classical},
  {"qosc_algebra", "stoch", "q-oscillator relations in the Weyl realisation", "K=trunc", check_stoch},
  {"Lqosc_match", "stoch", "oscillator Lax matrix is the ultralocal limit", "N=clamp(sites,2,3)", check_stoch},
  {"column_eigen", "stoch", "column sums act on omega as lambda - 1", "K=trunc", check_stoch},
  {"omega_identity", "stoch", "omega intertwines raising and the number operator", "K=trunc", check_stoch},
  {"Omega_H1", "stoch", "Omega is a left eigenvector of H1 with eigenvalue N", "N=clamp(sites,2,3), K=trunc", check_stoch},
  {"zero_column_sum", "stoch", "weighted column sums of H1 - N vanish", "N=clamp(sites,2,3), K=trunc", check_stoch},
  {"prop_ring", "property", "ring axioms, substitution and parsing on random samples", "seed", check_property},
  {"prop_weyl", "property", "Weyl product laws, locality and the shift automorphism", "seed", check_property},
  {"prop_matrix", "property", "matrix product, determinant, trace and tensor legs", "seed", check_property},
  {"prop_poisson", "property", "antisymmetry and Leibniz rule of the bracket", "seed", check_property},
};
// clang-format on

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> reg = [] {
    std::vector<CheckInfo> out;
    for (const Row& row : kRows) {
      Runner run = row.run;
      std::string id = row.id;
      out.push_back({id, row.module, row.anchor, row.defaults,
                     [run, id](const CheckParams& p) { return run(id, p); }});
    }
    std::sort(out.begin(), out.end(), [](const CheckInfo& a, const CheckInfo& b) { return a.id < b.id; });
    return out;
  }();
  return reg;
}

const CheckInfo* find_check(std::string_view id) {
  const auto& reg = check_registry();
  auto it = std::lower_bound(reg.begin(), reg.end(), id,
                             [](const CheckInfo& c, std::string_view v) { return c.id < v; });
  return it != reg.end() && it->id == id ? &*it : nullptr;
}

CheckReport run_check(const CheckInfo& info, const CheckParams& params, bool timing) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = info.run(params);
  } catch (const TermCapExceeded& e) {
    r = CheckReport{};
    r.status = Status::fail;
    r.note = e.what();
  } catch (const std::domain_error& e) {
    r = CheckReport{};
    r.status = Status::fail;
    r.note = e.what();
  } catch (const std::invalid_argument& e) {
    r = CheckReport{};
    r.status = Status::fail;
    r.note = e.what();
  }
  r.id = info.id;
  r.anchor = info.anchor;
  if (r.status == Status::fail && r.witness.empty()) r.witness = r.note;
  if (timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<std::string> known_mutations() {
  return {"flip_G0_beta", "flip_bracket_sign", "zero_L_corner", "zero_Lloc_21", "zero_Lqosc_21"};
}

}  // namespace toda2
