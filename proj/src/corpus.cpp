#include "hjrelax/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <set>

#include "hjrelax/godunov.hpp"
#include "hjrelax/guerand.hpp"
#include "hjrelax/relaxation.hpp"

namespace hjrelax {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
  state_ = seed;
  std::uint64_t mix = splitmix64(state_);
  state_ = mix ^ (index * 0x9e3779b97f4a7c15ull) ^ (salt * 0xda942042e4dd58b5ull);
  (void)splitmix64(state_);
}

std::uint64_t Rng::next() {
  return splitmix64(state_);
}

long Rng::range(long lo, long hi) {
  if (hi < lo) throw InvalidInputs("Rng::range with hi < lo");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Rng::rational(long lo, long hi, long max_den) {
  long den = range(1, max_den);
  long num = range(lo * den, hi * den);
  return Rational(num, den);
}

namespace {

std::vector<Rational> distinct_abscissas(Rng& rng, int count) {
  std::set<Rational> xs;
  while (static_cast<int>(xs.size()) < count) xs.insert(rng.rational(-8, 8, 4));
  return std::vector<Rational>(xs.begin(), xs.end());
}

PLFunction random_hamiltonian(Rng& rng) {
  int nb = static_cast<int>(rng.range(3, 9));
  auto xs = distinct_abscissas(rng, nb);
  std::vector<PLFunction::Point> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, rng.rational(-4, 6, 4)});
  Rational sl = -rng.rational(1, 8, 2);
  Rational sr = rng.rational(1, 8, 2);
  return PLFunction(std::move(pts), std::move(sl), std::move(sr));
}

PLFunction random_nonincreasing(Rng& rng) {
  int nb = static_cast<int>(rng.range(1, 7));
  auto xs = distinct_abscissas(rng, nb);
  std::vector<PLFunction::Point> pts;
  pts.reserve(xs.size());
  Rational y = rng.rational(-2, 6, 4);
  for (const auto& x : xs) {
    pts.push_back({x, y});
    y = y - rng.rational(0, 3, 4);
  }
  Rational sl = -rng.rational(1, 6, 2);
  Rational sr = -rng.rational(0, 2, 2);
  return PLFunction(std::move(pts), std::move(sl), std::move(sr));
}

PLFunction tangent_boundary(const PLFunction& H, Rng& rng) {
  // Shares the left ray of H up to a cutoff, constant afterwards.
  const auto& first = H.breakpoints().front();
  Rational sl = H.slope_left();
  Rational cutoff = first.x - rng.rational(0, 2, 2);
  Rational level = H.eval(cutoff);
  PLFunction ray = PLFunction::affine(sl, first.y - sl * first.x);
  return pointwise_max(ray, PLFunction::constant(level));
}

}  // namespace

CorpusCase random_pair(std::uint64_t seed, std::uint64_t index) {
  Rng rng(seed, index, 0);
  PLFunction H = random_hamiltonian(rng);
  bool tangency = (index % 5 == 3);
  PLFunction F0 = tangency ? tangent_boundary(H, rng) : random_nonincreasing(rng);
  return CorpusCase{std::move(H), std::move(F0), tangency};
}

PLFunction random_boundary(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
  Rng rng(seed, index, salt);
  return random_nonincreasing(rng);
}

std::vector<Rational> probe_points(const std::vector<const PLFunction*>& fs, Rng& rng, int extra) {
  std::vector<Rational> xs;
  for (const auto* f : fs)
    for (const auto& pt : f->breakpoints()) xs.push_back(pt.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.empty()) xs.push_back(Rational(0));

  std::vector<Rational> out = xs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) out.push_back((xs[i] + xs[i + 1]) / Rational(2));
  out.push_back(xs.front() - Rational(1));
  out.push_back(xs.front() - Rational(2));
  out.push_back(xs.back() + Rational(1));
  out.push_back(xs.back() + Rational(2));
  long lo = static_cast<long>(std::floor(xs.front().to_double())) - 4;
  long hi = static_cast<long>(std::ceil(xs.back().to_double())) + 4;
  for (int i = 0; i < extra; ++i) out.push_back(rng.rational(lo, hi, 8));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename Fn>
PLFunction reconstruct_pl(const Fn& fn, const PLFunction& hint, Rng& rng, int checks) {
  std::vector<Rational> xs;
  for (const auto& pt : hint.breakpoints()) xs.push_back(pt.x);
  std::vector<Rational> probes = xs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) probes.push_back((xs[i] + xs[i + 1]) / Rational(2));
  Rational l1 = xs.front() - Rational(1), l2 = xs.front() - Rational(2);
  Rational r1 = xs.back() + Rational(1), r2 = xs.back() + Rational(2);
  probes.insert(probes.end(), {l1, l2, r1, r2});
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

  std::vector<PLFunction::Point> pts;
  pts.reserve(probes.size());
  for (const auto& x : probes) pts.push_back({x, fn(x)});
  Rational sl = (pts[1].y - pts[0].y) / (pts[1].x - pts[0].x);
  std::size_t n = pts.size();
  Rational sr = (pts[n - 1].y - pts[n - 2].y) / (pts[n - 1].x - pts[n - 2].x);
  PLFunction out(std::move(pts), std::move(sl), std::move(sr));

  long lo = static_cast<long>(std::floor(l2.to_double())) - 2;
  long hi = static_cast<long>(std::ceil(r2.to_double())) + 2;
  for (int i = 0; i < checks; ++i) {
    Rational x = rng.rational(lo, hi, 8);
    if (fn(x) != out.eval(x))
      throw InternalMismatch("pointwise route disagrees with its reconstructed function");
  }
  return out;
}

namespace {

PLFunction abs_pl(const PLFunction& f) {
  return pointwise_max(f, f.negate());
}

bool covered_by(const std::vector<ExtendedInterval>& comps, const ExtendedRational& lo,
                const ExtendedRational& hi) {
  for (const auto& c : comps)
    if (c.lo <= lo && hi <= c.hi) return true;
  return false;
}

using Detail = std::optional<std::string>;

struct CaseContext {
  const CorpusCase& cs;
  std::uint64_t seed;
  std::uint64_t index;
  // Shared intermediates.
  PLFunction sub, sup, R, Hm;

  CaseContext(const CorpusCase& c, std::uint64_t s, std::uint64_t i)
      : cs(c),
        seed(s),
        index(i),
        sub(sub_relax(c.H, c.F0)),
        sup(super_relax(c.H, c.F0)),
        R(relax(c.H, c.F0)),
        Hm(lower_envelope(c.H)) {}
};

Detail check_sandwich(CaseContext& ctx) {
  const auto& H = ctx.cs.H;
  const auto& F0 = ctx.cs.F0;
  if (!pointwise_leq(pointwise_min(F0, H), ctx.sub)) return "min(F0,H) <= sub_relax fails";
  if (!pointwise_leq(ctx.sub, F0)) return "sub_relax <= F0 fails";
  if (!pointwise_leq(F0, ctx.sup)) return "F0 <= super_relax fails";
  if (!pointwise_leq(ctx.sup, pointwise_max(F0, H))) return "super_relax <= max(F0,H) fails";
  return std::nullopt;
}

Detail check_idempotence(CaseContext& ctx) {
  const auto& H = ctx.cs.H;
  if (sub_relax(H, ctx.sub) != ctx.sub) return "sub_relax not idempotent";
  if (super_relax(H, ctx.sup) != ctx.sup) return "super_relax not idempotent";
  if (relax(H, ctx.R) != ctx.R) return "relax not idempotent";
  if (sub_relax(H, ctx.R) != ctx.R || super_relax(H, ctx.R) != ctx.R)
    return "relaxed condition is not a fixed point of the semi-relaxations";
  return std::nullopt;
}

Detail check_contraction(CaseContext& ctx) {
  PLFunction lhs = abs_pl(subtract(ctx.R, ctx.cs.H));
  PLFunction rhs = abs_pl(subtract(ctx.cs.F0, ctx.cs.H));
  if (!pointwise_leq(lhs, rhs)) return "|R F0 - H| <= |F0 - H| fails";
  return std::nullopt;
}

Detail check_commutation(CaseContext& ctx) {
  PLFunction Fb = random_boundary(ctx.seed, ctx.index, 101);
  const auto& H = ctx.cs.H;
  PLFunction Ra = ctx.R, Rb = relax(H, Fb);
  if (relax(H, pointwise_min(ctx.cs.F0, Fb)) != pointwise_min(Ra, Rb))
    return "relax does not commute with min";
  if (relax(H, pointwise_max(ctx.cs.F0, Fb)) != pointwise_max(Ra, Rb))
    return "relax does not commute with max";
  return std::nullopt;
}

Detail check_envelope_invariance(CaseContext& ctx) {
  if (relax(ctx.cs.H, pointwise_max(ctx.cs.F0, ctx.Hm)) != ctx.R)
    return "relax(F0) != relax(max(F0, H-))";
  return std::nullopt;
}

Detail check_minimality(CaseContext& ctx) {
  if (!pointwise_leq(ctx.Hm, ctx.R)) return "relaxed condition dips below the lower envelope";
  return std::nullopt;
}

Detail check_ordering(CaseContext& ctx) {
  PLFunction d = subtract(ctx.cs.F0, ctx.cs.H);
  auto f0_above_r = nonneg_set(subtract(ctx.cs.F0, ctx.R));
  auto r_above_h = nonneg_set(subtract(ctx.R, ctx.cs.H));
  auto r_above_f0 = nonneg_set(subtract(ctx.R, ctx.cs.F0));
  auto h_above_r = nonneg_set(subtract(ctx.cs.H, ctx.R));
  for (const auto& region : sign_partition(d)) {
    if (region.sign > 0) {
      if (!covered_by(f0_above_r, region.lo, region.hi) || !covered_by(r_above_h, region.lo, region.hi))
        return "F0 >= R >= H fails on {F0 >= H}";
    } else if (region.sign < 0) {
      if (!covered_by(r_above_f0, region.lo, region.hi) || !covered_by(h_above_r, region.lo, region.hi))
        return "F0 <= R <= H fails on {F0 <= H}";
    } else {
      if (!covered_by(f0_above_r, region.lo, region.hi) || !covered_by(r_above_f0, region.lo, region.hi))
        return "R != F0 on {F0 = H}";
    }
  }
  return std::nullopt;
}

Detail check_local_constancy(CaseContext& ctx) {
  for (const auto& region : sign_partition(subtract(ctx.R, ctx.cs.H)))
    if (region.sign != 0 && !ctx.R.is_constant_on(region.lo, region.hi))
      return "relaxed condition not constant on a component of {R != H}";
  return std::nullopt;
}

Detail check_coincidence(CaseContext& ctx) {
  auto lims = limiter_points_unchecked(ctx.cs.H, ctx.cs.F0);
  auto chars = characteristic_points(ctx.cs.H, ctx.R);
  std::vector<std::pair<Rational, int>> a, b;
  for (const auto& c : chars) a.emplace_back(c.location, c.sign == PointSign::Positive ? 1 : 0);
  for (const auto& l : lims) b.emplace_back(l.p, l.sign == PointSign::Positive ? 1 : 0);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return "limiter points != characteristic points of the relaxed condition";

  std::vector<ExtendedInterval> intervals;
  for (const auto& l : lims) intervals.push_back(l.interval);
  if (apply_limiter_plateaus(ctx.cs.H, intervals) != ctx.R)
    return "limiter-based operator != relaxation operator";

  // The open plateau intervals are pairwise disjoint.
  std::vector<std::pair<ExtendedRational, ExtendedRational>> opens;
  for (const auto& l : lims) opens.emplace_back(l.interval.lo, l.interval.hi);
  std::sort(opens.begin(), opens.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i + 1 < opens.size(); ++i) {
    if (opens[i] == opens[i + 1]) continue;  // the same interval under both signs
    if (open_intervals_overlap(opens[i].first, opens[i].second, opens[i + 1].first, opens[i + 1].second))
      return "limiter plateau intervals overlap";
  }
  return std::nullopt;
}

Detail check_plateaus(CaseContext& ctx) {
  const auto& H = ctx.cs.H;
  for (const auto& c : characteristic_points(H, ctx.R)) {
    Rational Hp = H.eval(c.location);
    if (ctx.R.eval(c.location) != Hp) return "characteristic point off the Hamiltonian";
    if (c.sign == PointSign::Negative) {
      Rational pm = lower_point(H, c.location);
      if (!ctx.R.is_constant_on(ExtendedRational(pm), ExtendedRational(c.location)) ||
          ctx.R.eval(pm) != Hp)
        return "R not frozen at H(p) on [p-, p]";
      if (ctx.R.eval(c.location) > ctx.cs.F0.eval(c.location))
        return "R > F0 at a negative characteristic point";
    } else {
      ExtendedRational pp = upper_point(H, c.location);
      if (!ctx.R.is_constant_on(ExtendedRational(c.location), pp))
        return "R not frozen at H(p) on [p, p+]";
      if (pp.is_finite() && ctx.R.eval(pp.finite()) != Hp) return "R != H(p) at p+";
      if (ctx.R.eval(c.location) < ctx.cs.F0.eval(c.location))
        return "R < F0 at a positive characteristic point";
    }
  }
  return std::nullopt;
}

Detail check_godunov_equivalence(CaseContext& ctx) {
  Rng rng(ctx.seed, ctx.index, 7);
  PLFunction viaG = reconstruct_pl(
      [&](const Rational& p) { return apply_godunov(ctx.cs.H, ctx.cs.F0, p); }, ctx.R, rng);
  if (viaG != ctx.R) return "Godunov operator != relaxation operator";
  return std::nullopt;
}

Detail check_semiflux_identification(CaseContext& ctx) {
  Rng rng(ctx.seed, ctx.index, 8);
  PLFunction lo = reconstruct_pl(
      [&](const Rational& p) { return apply_lower_semiflux(ctx.cs.H, ctx.cs.F0, p); }, ctx.sub, rng);
  if (lo != ctx.sub) return "lower semi-flux application != sub_relax";
  PLFunction hi = reconstruct_pl(
      [&](const Rational& p) { return apply_upper_semiflux(ctx.cs.H, ctx.cs.F0, p); }, ctx.sup, rng);
  if (hi != ctx.sup) return "upper semi-flux application != super_relax";
  if (!lo.is_nonincreasing() || !hi.is_nonincreasing()) return "semi-flux application not non-increasing";
  if (ctx.cs.F0.is_semicoercive() && (!lo.is_semicoercive() || !hi.is_semicoercive()))
    return "semi-flux application lost semi-coercivity";
  return std::nullopt;
}

Detail check_composition(CaseContext& ctx) {
  Rng rng(ctx.seed, ctx.index, 9);
  const auto& H = ctx.cs.H;
  PLFunction upperd = reconstruct_pl(
      [&](const Rational& p) { return apply_upper_semiflux(H, ctx.cs.F0, p); }, ctx.sup, rng);
  PLFunction lowered = reconstruct_pl(
      [&](const Rational& p) { return apply_lower_semiflux(H, ctx.cs.F0, p); }, ctx.sub, rng);
  auto probes = probe_points({&ctx.R, &H, &ctx.cs.F0}, rng, 6);
  for (const auto& p : probes) {
    Rational direct = apply_godunov(H, ctx.cs.F0, p);
    if (apply_lower_semiflux(H, upperd, p) != direct)
      return "(F0 upperG) lowerG != F0 G at p=" + p.str();
    if (apply_upper_semiflux(H, lowered, p) != direct)
      return "(F0 lowerG) upperG != F0 G at p=" + p.str();
  }
  return std::nullopt;
}

Detail check_germ_agreement(CaseContext& ctx) {
  Germ g = germ(ctx.cs.H, ctx.cs.F0);  // internally cross-checks the two routes
  Rng rng(ctx.seed, ctx.index, 10);
  auto probes = probe_points({&ctx.cs.H, &ctx.R}, rng, 10);
  for (const auto& p : probes) {
    bool in1 = g.contains(p);
    bool in2 = ctx.sub.eval(p) <= ctx.cs.H.eval(p) && ctx.cs.H.eval(p) <= ctx.sup.eval(p);
    bool in3 = ctx.cs.H.eval(p) == ctx.R.eval(p);
    if (in1 != in2 || in1 != in3) return "germ membership routes disagree at p=" + p.str();
  }
  return std::nullopt;
}

Detail check_godunov_monotonicity(CaseContext& ctx) {
  Rng rng(ctx.seed, ctx.index, 11);
  for (int i = 0; i < 12; ++i) {
    Rational q1 = rng.rational(-10, 10, 4), q2 = rng.rational(-10, 10, 4), p = rng.rational(-10, 10, 4);
    if (q2 < q1) std::swap(q1, q2);
    if (godunov_flux(ctx.cs.H, q1, p) > godunov_flux(ctx.cs.H, q2, p))
      return "Godunov flux not non-decreasing in q";
    if (godunov_flux(ctx.cs.H, p, q1) < godunov_flux(ctx.cs.H, p, q2))
      return "Godunov flux not non-increasing in p";
  }
  return std::nullopt;
}

Detail check_bln_equivalence(CaseContext& ctx) {
  Rng rng(ctx.seed, ctx.index, 12);
  const auto& H = ctx.cs.H;
  Rational h = rng.rational(-6, 6, 4);
  PLFunction N = neumann_relaxed(H, h);
  if (relax(H, N) != N) return "relaxed Neumann flux is not self-relaxed";
  Germ g = germ(H, N);

  std::vector<Rational> probes = probe_points({&H, &N}, rng, 10);
  probes.push_back(h);
  for (const auto& comp : zero_set(subtract(H, N))) {
    if (comp.lo.is_finite()) probes.push_back(comp.lo.finite());
    if (comp.hi.is_finite()) probes.push_back(comp.hi.finite());
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  std::vector<Rational> refined = probes;
  for (std::size_t i = 0; i + 1 < probes.size(); ++i)
    refined.push_back((probes[i] + probes[i + 1]) / Rational(2));

  for (const auto& p : refined) {
    bool via_sign = bln_check(H, h, p);
    bool via_flux = (H.eval(p) == godunov_flux(H, h, p));
    bool via_germ = g.contains(p);
    if (via_sign != via_flux || via_sign != via_germ)
      return "BLN routes disagree at p=" + p.str();
    // Godunov sign property of the Neumann flux.
    if ((H.eval(p) - N.eval(p)) * (p - h) < Rational(0))
      return "Neumann flux sign property fails at p=" + p.str();
  }
  return std::nullopt;
}

Detail check_dirichlet_example(CaseContext& ctx) {
  Rng rng(ctx.seed, ctx.index, 13);
  Rational A0 = rng.rational(-4, 6, 4);
  PLFunction expect = pointwise_max(PLFunction::constant(A0), ctx.Hm);
  if (dirichlet_relaxed(ctx.cs.H, A0) != expect) return "dirichlet_relaxed != max(A0, H-)";
  if (relax(ctx.cs.H, PLFunction::constant(A0)) != expect) return "relax(const A0) != max(A0, H-)";
  return std::nullopt;
}

struct NamedCheck {
  std::string name;
  std::function<Detail(CaseContext&)> fn;
};

const std::vector<NamedCheck>& checks() {
  static const std::vector<NamedCheck> kChecks = {
      {"sandwich", check_sandwich},
      {"idempotence", check_idempotence},
      {"contraction", check_contraction},
      {"commutation", check_commutation},
      {"envelope-invariance", check_envelope_invariance},
      {"minimality", check_minimality},
      {"ordering", check_ordering},
      {"local-constancy", check_local_constancy},
      {"coincidence", check_coincidence},
      {"plateau-constancy", check_plateaus},
      {"godunov-equivalence", check_godunov_equivalence},
      {"semiflux-identification", check_semiflux_identification},
      {"composition", check_composition},
      {"germ-agreement", check_germ_agreement},
      {"godunov-monotonicity", check_godunov_monotonicity},
      {"bln-equivalence", check_bln_equivalence},
      {"dirichlet-obstacle", check_dirichlet_example},
  };
  return kChecks;
}

}  // namespace

const std::vector<std::string>& corpus_identity_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& c : checks()) names.push_back(c.name);
    return names;
  }();
  return kNames;
}

CorpusReport run_corpus(std::uint64_t seed, int cases) {
  auto t0 = std::chrono::steady_clock::now();
  CorpusReport report;
  report.seed = seed;
  report.cases = cases;
  for (const auto& c : checks()) report.pass_counts.emplace_back(c.name, 0);

  for (int i = 0; i < cases; ++i) {
    CorpusCase cs = random_pair(seed, static_cast<std::uint64_t>(i));
    CaseContext ctx(cs, seed, static_cast<std::uint64_t>(i));
    for (std::size_t k = 0; k < checks().size(); ++k) {
      Detail detail;
      try {
        detail = checks()[k].fn(ctx);
      } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
      }
      if (detail) {
        report.failures.push_back({static_cast<std::uint64_t>(i), checks()[k].name, *detail,
                                   cs.H.str(), cs.F0.str()});
      } else {
        report.pass_counts[k].second += 1;
      }
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// Explicit instantiations for the evaluator signatures used by tests.
template PLFunction reconstruct_pl<std::function<Rational(const Rational&)>>(
    const std::function<Rational(const Rational&)>&, const PLFunction&, Rng&, int);

}  // namespace hjrelax
