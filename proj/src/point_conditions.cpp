#include "chowforge/point_conditions.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>
#include <set>

#include "chowforge/error.hpp"

namespace chowforge {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 62) ||
      mpz_probab_prime_p(BigInt(std::to_string(p)).get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::kConfig, "working prime must be an odd prime below 2^62, got " + std::to_string(p));
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::kZeroDenominator, "inverse of 0 mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const BigRational& q) const {
  BigInt pp(std::to_string(p_));
  BigInt den = q.get_den() % pp;
  if (den == 0) throw Error(ErrorCode::kFieldMismatch, "denominator divisible by " + std::to_string(p_));
  BigInt num = q.get_num() % pp;
  if (num < 0) num += pp;
  return mul(num.get_ui(), inv(den.get_ui()));
}

bool PrimeField::is_square(std::uint64_t a) const { return a % p_ == 0 || pow(a, (p_ - 1) / 2) == 1; }

std::optional<std::uint64_t> PrimeField::sqrt(std::uint64_t a) const {
  a %= p_;
  if (a == 0) return 0;
  if (!is_square(a)) return std::nullopt;
  std::uint64_t q = p_ - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (is_square(z)) ++z;
  std::uint64_t m = static_cast<std::uint64_t>(s), c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

std::uint64_t default_prime() {
  if (const char* env = std::getenv("CHOWFORGE_PRIME_DEFAULT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw Error(ErrorCode::kConfig, std::string("bad CHOWFORGE_PRIME_DEFAULT: ") + env);
    return PrimeField(v).p();
  }
  return 1000003;
}

Bidegree bidegree_for_genus(int g) {
  if (g < 2) throw Error(ErrorCode::kBadGenus, "genus must be at least 2, got " + std::to_string(g));
  return {g + 1, 2};
}

std::vector<Monomial> monomial_basis(int g) {
  Bidegree d = bidegree_for_genus(g);
  std::vector<Monomial> out;
  for (int alpha = d.a; alpha >= 0; --alpha)
    for (int beta = d.b; beta >= 0; --beta) out.push_back({alpha, beta});
  return out;
}

int PointCondition::rows() const {
  switch (kind) {
    case ConditionKind::kSimple: return 1;
    case ConditionKind::kHorizontalJet: return order;
    case ConditionKind::kVerticalJet: return 2;
  }
  return 0;
}

namespace {

BigRational qpow(const BigRational& x, int e) {
  BigRational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

BigRational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRational(r);
}

int pick_chart(const BigRational& c0, const BigRational& c1, int requested, const char* factor) {
  if (c0 == 0 && c1 == 0) throw Error(ErrorCode::kPointAtChartBoundary, std::string("both ") + factor + " coordinates vanish");
  if (requested == 0 && c0 == 0) throw Error(ErrorCode::kPointAtChartBoundary, std::string(factor) + "0 = 0 in requested chart");
  if (requested == 1 && c1 == 0) throw Error(ErrorCode::kPointAtChartBoundary, std::string(factor) + "1 = 0 in requested chart");
  if (requested == 0 || requested == 1) return requested;
  return c0 != 0 ? 0 : 1;
}

// k-th Hasse derivative of c0^e0 c1^(deg-e0) in the affine coordinate of
// the chart, scaled by the chart coordinate to the power deg - k.
BigRational factor_entry(const BigRational& c0, const BigRational& c1, int deg, int e0, int k, int chart) {
  int e1 = deg - e0;
  if (chart == 0) return e1 < k ? BigRational(0) : binom(e1, k) * qpow(c1, e1 - k) * qpow(c0, e0);
  return e0 < k ? BigRational(0) : binom(e0, k) * qpow(c0, e0 - k) * qpow(c1, e1);
}

void check_residue(const BigRational& c, std::uint64_t p) {
  if (c.get_den() != 1 || c < 0 || c >= BigRational(BigInt(std::to_string(p))))
    throw Error(ErrorCode::kFieldMismatch, "coordinate " + c.get_str() + " is not a residue mod " + std::to_string(p));
}

}  // namespace

FieldMatrix evaluation_matrix(const PointConfig& cfg, int g) {
  const Bidegree d = bidegree_for_genus(g);
  const auto basis = monomial_basis(g);
  std::optional<PrimeField> field;
  if (cfg.prime) field.emplace(*cfg.prime);
  FieldMatrix m{cfg.prime, {}, basis.size()};
  std::vector<const ProjPoint*> seen;
  for (const auto& cond : cfg.conditions) {
    const ProjPoint& pt = cond.point;
    if (field)
      for (const auto* c : {&pt.x0, &pt.x1, &pt.y0, &pt.y1}) check_residue(*c, field->p());
    int xc = pick_chart(pt.x0, pt.x1, cond.x_chart, "x");
    int yc = pick_chart(pt.y0, pt.y1, cond.y_chart, "y");
    if (cond.kind == ConditionKind::kHorizontalJet && (cond.order < 1 || cond.order > g + 2))
      throw Error(ErrorCode::kBadIndex, "horizontal jet order must be in [1, g+2]");
    if (cond.kind == ConditionKind::kVerticalJet && cond.order != 1)
      throw Error(ErrorCode::kBadIndex, "vertical jets have order 1");
    if (cfg.distinct_first_projections) {
      for (const auto* q : seen) {
        BigRational cross = pt.x0 * q->x1 - pt.x1 * q->x0;
        bool same = field ? field->reduce(cross) == 0 : cross == 0;
        if (same) throw Error(ErrorCode::kConfig, "first-factor projections of two points coincide");
      }
      seen.push_back(&pt);
    }
    std::vector<std::pair<int, int>> orders;  // (x order, y order)
    if (cond.kind == ConditionKind::kSimple) orders = {{0, 0}};
    if (cond.kind == ConditionKind::kHorizontalJet)
      for (int k = 0; k < cond.order; ++k) orders.push_back({k, 0});
    if (cond.kind == ConditionKind::kVerticalJet) orders = {{0, 0}, {0, 1}};
    for (auto [kx, ky] : orders) {
      std::vector<BigRational> row;
      for (const auto& mono : basis) {
        BigRational v = factor_entry(pt.x0, pt.x1, d.a, mono.alpha, kx, xc) *
                        factor_entry(pt.y0, pt.y1, d.b, mono.beta, ky, yc);
        row.push_back(field ? BigRational(static_cast<unsigned long>(field->reduce(v))) : v);
      }
      m.rows.push_back(std::move(row));
    }
  }
  return m;
}

namespace {

int rank_mod_p(const FieldMatrix& m) {
  PrimeField f(*m.prime);
  std::vector<std::vector<std::uint64_t>> a;
  for (const auto& row : m.rows) {
    a.emplace_back();
    for (const auto& e : row) a.back().push_back(f.reduce(e));
  }
  int rank = 0;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < m.cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t r0 = static_cast<std::size_t>(rank), p = r0;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r0]);
    std::uint64_t inv = f.inv(a[r0][c]);
    for (std::size_t i = r0 + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t factor = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < m.cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r0][j]));
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination on the integer matrix obtained by clearing
// each row's denominators.
int rank_rational(const FieldMatrix& m) {
  std::vector<std::vector<BigInt>> a;
  for (const auto& row : m.rows) {
    BigInt l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    a.emplace_back();
    for (const auto& e : row) a.back().push_back(BigInt(e * BigRational(l)));
  }
  int rank = 0;
  BigInt prev = 1;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < m.cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t r0 = static_cast<std::size_t>(rank), p = r0;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r0]);
    for (std::size_t i = r0 + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        BigInt t = a[r0][c] * a[i][j] - a[i][c] * a[r0][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][c] = 0;
    }
    prev = a[r0][c];
    ++rank;
  }
  return rank;
}

std::uint64_t split_seed(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

ProjPoint affine_point(std::uint64_t x, std::uint64_t y) {
  return {BigRational(1), BigRational(static_cast<unsigned long>(x)), BigRational(1),
          BigRational(static_cast<unsigned long>(y))};
}

}  // namespace

int rank_exact(const FieldMatrix& m) { return m.prime ? rank_mod_p(m) : rank_rational(m); }

GeneralPositionVerdict check_general_position(int g, int n, std::uint64_t seed, int trials, std::uint64_t p,
                                              bool exploratory) {
  bidegree_for_genus(g);
  if (n < 1) throw Error(ErrorCode::kBadN, "general position needs n >= 1");
  if (n - 1 > 3 * g + 5 && !exploratory)
    throw Error(ErrorCode::kBoundViolated, "n-1 = " + std::to_string(n - 1) + " exceeds 3g+5 = " + std::to_string(3 * g + 5));
  PrimeField f(p);
  GeneralPositionVerdict v{g, n, p, seed, false, exploratory, 0, 0, std::min(n - 1, 3 * g + 6), std::nullopt};
  const int on_line = std::min(g, n - 1);
  for (int t = 0; t < trials; ++t) {
    std::uint64_t ts = split_seed(seed, t);
    std::mt19937_64 rng(ts);
    std::uniform_int_distribution<std::uint64_t> coord(0, p - 1);
    std::set<std::uint64_t> xs;
    std::vector<ProjPoint> pts;
    const std::uint64_t line_y = coord(rng);
    while (static_cast<int>(pts.size()) < n - 1) {
      std::uint64_t x = coord(rng);
      if (!xs.insert(x).second) continue;
      std::uint64_t y = static_cast<int>(pts.size()) < on_line ? line_y : coord(rng);
      pts.push_back(affine_point(x, y));
    }
    PointConfig cfg{{}, p, true};
    for (const auto& pt : pts) cfg.conditions.push_back(PointCondition::simple(pt));
    int rank = rank_exact(evaluation_matrix(cfg, g));
    ++v.trials_run;
    v.best_rank = std::max(v.best_rank, rank);
    if (rank == v.target_rank) {
      v.pass = true;
      v.witness = GeneralPositionWitness{ts, t, pts, rank};
      break;
    }
  }
  return v;
}

namespace {

// Dense polynomials over F_p, low degree first.
using FpPoly = std::vector<std::uint64_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t peval(const PrimeField& f, const FpPoly& a, std::uint64_t x) {
  std::uint64_t r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

FpPoly pmul(const PrimeField& f, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(r);
  return r;
}

FpPoly psub(const PrimeField& f, FpPoly a, const FpPoly& b) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

FpPoly padd(const PrimeField& f, FpPoly a, const FpPoly& b) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
  trim(a);
  return a;
}

FpPoly pscale(const PrimeField& f, FpPoly a, std::uint64_t c) {
  for (auto& x : a) x = f.mul(x, c);
  trim(a);
  return a;
}

FpPoly pderiv(const PrimeField& f, const FpPoly& a) {
  FpPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], i % f.p()));
  trim(r);
  return r;
}

FpPoly pmod(const PrimeField& f, FpPoly a, const FpPoly& b) {
  std::uint64_t inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t c = f.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

FpPoly pgcd(const PrimeField& f, FpPoly a, FpPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = pmod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_square_poly(const PrimeField& f, const FpPoly& d) {
  if (d.empty()) return true;
  std::size_t deg = d.size() - 1;
  if (deg % 2) return false;
  auto lead = f.sqrt(d.back());
  if (!lead) return false;
  std::size_t h = deg / 2;
  FpPoly s(h + 1, 0);
  s[h] = *lead;
  std::uint64_t inv2s = f.inv(f.mul(2, *lead));
  for (std::size_t k = h; k-- > 0;) {
    // Coefficient of x^(h+k) in s^2 determines s_k.
    std::uint64_t acc = 0;
    for (std::size_t i = k + 1; i <= h; ++i) {
      std::size_t j = h + k - i;
      if (j > k && j <= h) acc = f.add(acc, f.mul(s[i], s[j]));
    }
    s[k] = f.mul(f.sub(d[h + k], acc), inv2s);
  }
  return pmul(f, s, s) == d;
}

// F = A(x) y^2 + B(x) y + C(x) in the chart x0 = y0 = 1.
struct AffineForm {
  FpPoly A, B, C;
};

AffineForm affine_form(const PrimeField& f, const std::vector<std::uint64_t>& coeffs, int g) {
  auto basis = monomial_basis(g);
  const int a = g + 1;
  AffineForm out{FpPoly(static_cast<std::size_t>(a + 1), 0), FpPoly(static_cast<std::size_t>(a + 1), 0),
                 FpPoly(static_cast<std::size_t>(a + 1), 0)};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t xdeg = static_cast<std::size_t>(a - basis[i].alpha);
    FpPoly& target = basis[i].beta == 0 ? out.A : basis[i].beta == 1 ? out.B : out.C;
    target[xdeg] = f.add(target[xdeg], coeffs[i]);
  }
  trim(out.A);
  trim(out.B);
  trim(out.C);
  return out;
}

std::vector<std::uint64_t> form_coefficients(const AffineForm& F, int g) {
  auto basis = monomial_basis(g);
  const int a = g + 1;
  std::vector<std::uint64_t> out;
  for (const auto& m : basis) {
    const FpPoly& src = m.beta == 0 ? F.A : m.beta == 1 ? F.B : F.C;
    std::size_t xdeg = static_cast<std::size_t>(a - m.alpha);
    out.push_back(xdeg < src.size() ? src[xdeg] : 0);
  }
  return out;
}

FpPoly discriminant(const PrimeField& f, const AffineForm& F) {
  return psub(f, pmul(f, F.B, F.B), pscale(f, pmul(f, F.A, F.C), 4));
}

// Rejects forms that are visibly reducible: no y^2 term, a common factor
// in x alone, or a discriminant that is a square (two (g+1,1) factors).
bool passes_irreducibility_heuristics(const PrimeField& f, const AffineForm& F) {
  if (F.A.empty()) return false;
  FpPoly disc = discriminant(f, F);
  if (disc.empty()) return false;
  if (pgcd(f, pgcd(f, F.A, F.B), F.C).size() > 1) return false;
  return !is_square_poly(f, disc);
}

struct Roots {
  std::uint64_t y1, y2;
};

std::optional<Roots> solve_in_y(const PrimeField& f, const AffineForm& F, std::uint64_t x) {
  std::uint64_t a = peval(f, F.A, x), b = peval(f, F.B, x), c = peval(f, F.C, x);
  if (a == 0) return std::nullopt;
  std::uint64_t disc = f.sub(f.mul(b, b), f.mul(4, f.mul(a, c)));
  if (disc == 0) return std::nullopt;
  auto s = f.sqrt(disc);
  if (!s) return std::nullopt;
  std::uint64_t inv2a = f.inv(f.mul(2, a));
  return Roots{f.mul(f.sub(*s, b), inv2a), f.mul(f.sub(f.neg(*s), b), inv2a)};
}

}  // namespace

std::uint64_t evaluate_form(const CurveSample& s, const ProjPoint& pt) {
  PrimeField f(s.prime);
  auto basis = monomial_basis(s.g);
  const int a = s.g + 1;
  std::uint64_t x0 = f.reduce(pt.x0), x1 = f.reduce(pt.x1), y0 = f.reduce(pt.y0), y1 = f.reduce(pt.y1);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& m = basis[i];
    std::uint64_t term = f.mul(f.pow(x0, static_cast<std::uint64_t>(m.alpha)), f.pow(x1, static_cast<std::uint64_t>(a - m.alpha)));
    term = f.mul(term, f.mul(f.pow(y0, static_cast<std::uint64_t>(m.beta)), f.pow(y1, static_cast<std::uint64_t>(2 - m.beta))));
    acc = f.add(acc, f.mul(term, s.form[i]));
  }
  return acc;
}

bool is_smooth_point(const CurveSample& s, const ProjPoint& pt) {
  PrimeField f(s.prime);
  if (evaluate_form(s, pt) != 0) return false;
  if (f.reduce(pt.x0) != 1 || f.reduce(pt.y0) != 1)
    throw Error(ErrorCode::kPointAtChartBoundary, "smoothness is checked in the chart x0 = y0 = 1");
  AffineForm F = affine_form(f, s.form, s.g);
  std::uint64_t x = f.reduce(pt.x1), y = f.reduce(pt.y1);
  std::uint64_t fx = f.add(f.add(f.mul(peval(f, pderiv(f, F.A), x), f.mul(y, y)), f.mul(peval(f, pderiv(f, F.B), x), y)),
                           peval(f, pderiv(f, F.C), x));
  std::uint64_t fy = f.add(f.mul(f.mul(2, peval(f, F.A, x)), y), peval(f, F.B, x));
  return fx != 0 || fy != 0;
}

CurveSample sample_curve_points(int g, int count, std::uint64_t p, std::uint64_t seed, SamplingOptions opts) {
  bidegree_for_genus(g);
  PrimeField f(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(0, p - 1);
  const std::size_t nmono = monomial_basis(g).size();
  for (int attempt = 0; attempt < opts.form_attempts; ++attempt) {
    CurveSample s{g, p, seed, {}, {}};
    for (std::size_t i = 0; i < nmono; ++i) s.form.push_back(coord(rng));
    AffineForm F = affine_form(f, s.form, g);
    if (!passes_irreducibility_heuristics(f, F)) continue;
    std::set<std::uint64_t> xs;
    int budget = opts.point_attempts_per_point * std::max(count, 1);
    while (static_cast<int>(s.points.size()) < count && budget-- > 0) {
      std::uint64_t x = coord(rng);
      if (xs.count(x)) continue;
      auto roots = solve_in_y(f, F, x);
      if (!roots) continue;
      ProjPoint pt = affine_point(x, rng() % 2 ? roots->y1 : roots->y2);
      if (!is_smooth_point(s, pt)) continue;
      xs.insert(x);
      s.points.push_back(pt);
    }
    if (static_cast<int>(s.points.size()) == count) return s;
  }
  throw Error(ErrorCode::kSamplingExhausted,
              "no curve with " + std::to_string(count) + " smooth points found (p = " + std::to_string(p) + ")");
}

CurveSample sample_complete_intersection_points(int g, std::uint64_t p, std::uint64_t seed, SamplingOptions opts) {
  bidegree_for_genus(g);
  PrimeField f(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(0, p - 1);
  const std::size_t a = static_cast<std::size_t>(g + 1);
  for (int attempt = 0; attempt < opts.form_attempts; ++attempt) {
    // F(x, c) and F(x, d) split into distinct linear factors by construction.
    std::uint64_t c = coord(rng), d = coord(rng);
    if (c == d) continue;
    std::set<std::uint64_t> xs;
    std::vector<std::uint64_t> r, s;
    while (r.size() < a) {
      std::uint64_t x = coord(rng);
      if (xs.insert(x).second) r.push_back(x);
    }
    while (s.size() < a) {
      std::uint64_t x = coord(rng);
      if (xs.insert(x).second) s.push_back(x);
    }
    FpPoly P{1}, Q{1};
    for (auto x : r) P = pmul(f, P, {f.neg(x), 1});
    for (auto x : s) Q = pmul(f, Q, {f.neg(x), 1});
    FpPoly R;
    for (std::size_t i = 0; i <= a; ++i) R.push_back(coord(rng));
    trim(R);
    // F = P (y - d) + Q (y - c) + R (y - c)(y - d)
    AffineForm F;
    F.A = R;
    F.B = psub(f, padd(f, P, Q), pscale(f, R, f.add(c, d)));
    F.C = padd(f, psub(f, pscale(f, P, f.neg(d)), pscale(f, Q, c)), pscale(f, R, f.mul(c, d)));
    if (!passes_irreducibility_heuristics(f, F)) continue;
    CurveSample out{g, p, seed, form_coefficients(F, g), {}};
    for (auto x : r) out.points.push_back(affine_point(x, c));
    for (auto x : s) out.points.push_back(affine_point(x, d));
    int verticals = 0;
    int budget = opts.point_attempts_per_point;
    while (verticals < 2 && budget-- > 0) {
      std::uint64_t x = coord(rng);
      if (xs.count(x)) continue;
      auto roots = solve_in_y(f, F, x);
      if (!roots || roots->y1 == c || roots->y1 == d || roots->y2 == c || roots->y2 == d) continue;
      xs.insert(x);
      out.points.push_back(affine_point(x, roots->y1));
      out.points.push_back(affine_point(x, roots->y2));
      ++verticals;
    }
    if (verticals < 2) continue;
    bool smooth = true;
    for (const auto& pt : out.points) smooth = smooth && is_smooth_point(out, pt);
    if (smooth) return out;
  }
  throw Error(ErrorCode::kSamplingExhausted, "no complete-intersection configuration found");
}

RiemannRochCounts riemann_roch_counts(int g) {
  bidegree_for_genus(g);
  Bidegree d{g + 1, 2};
  // Sections of O(a, b) on P^1 x P^1, and the self-intersection of C.
  int h0_ambient = (d.a + 1) * (d.b + 1);
  int deg_N = 2 * d.a * d.b;
  int h0_restricted = deg_N - g + 1;
  RiemannRochCounts r{h0_ambient, h0_restricted, deg_N, h0_ambient - h0_restricted};
  if (r.kernel_dim != 1) throw Error(ErrorCode::kBadGenus, "kernel of restriction is not one-dimensional");
  return r;
}

nlohmann::ordered_json point_to_json(const ProjPoint& p) {
  return nlohmann::ordered_json::array({p.x0.get_str(), p.x1.get_str(), p.y0.get_str(), p.y1.get_str()});
}

nlohmann::ordered_json verdict_to_json(const GeneralPositionVerdict& v) {
  nlohmann::ordered_json j;
  j["g"] = v.g;
  j["n"] = v.n;
  j["prime"] = v.prime;
  j["seed"] = v.seed;
  j["verdict"] = v.pass ? "PASS" : "FAIL (probabilistic: no sampled trial reached full rank)";
  j["exploratory"] = v.exploratory;
  j["trials_run"] = v.trials_run;
  j["target_rank"] = v.target_rank;
  j["best_rank"] = v.best_rank;
  if (v.witness) {
    nlohmann::ordered_json w;
    w["trial"] = v.witness->trial;
    w["trial_seed"] = v.witness->trial_seed;
    w["rank"] = v.witness->rank;
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : v.witness->points) pts.push_back(point_to_json(p));
    w["points"] = pts;
    j["witness"] = w;
  }
  return j;
}

nlohmann::ordered_json sample_to_json(const CurveSample& s, int rank) {
  nlohmann::ordered_json j;
  j["g"] = s.g;
  j["prime"] = s.prime;
  j["seed"] = s.seed;
  j["form"] = s.form;
  auto pts = nlohmann::ordered_json::array();
  for (const auto& p : s.points) pts.push_back(point_to_json(p));
  j["points"] = pts;
  j["rank"] = rank;
  return j;
}

}  // namespace chowforge
