#include "rcl/placement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "rcl/rng.hpp"

namespace rcl {

namespace {

RationalComplex half(const RationalComplex& v) {
  return RationalComplex(v.re / 2, v.im / 2);
}

}  // namespace

PlacementFunction place_recursive(const SigmaIndex& sigma,
                                  const std::vector<RationalComplex>& f1,
                                  const std::vector<RationalComplex>& angles) {
  const std::size_t gen1_size = std::size_t(1) << (sigma.n_generations - 1);
  if (f1.size() != gen1_size)
    throw std::invalid_argument("initial placement must cover all of Sigma_1");
  if (angles.size() != sigma.families.size())
    throw std::invalid_argument("need one angle per nuclear family");
  for (const auto& q : angles)
    if (!q.unit_modulus())
      throw std::invalid_argument("family angle " + q.str() + " is not unit modulus");

  PlacementFunction f;
  f.sigma = sigma;
  f.initial = f1;
  f.angles = angles;
  f.values.assign(static_cast<std::size_t>(sigma.total()), RationalComplex{});

  auto [g1_begin, g1_end] = sigma.gen_range[0];
  for (int i = g1_begin; i < g1_end; ++i)
    f.values[static_cast<std::size_t>(i)] = f1[static_cast<std::size_t>(i - g1_begin)];

  const RationalComplex one = RationalComplex::integer(1, 0);
  // Families are stored level-major, so parents are always placed before
  // their children.
  for (std::size_t fid = 0; fid < sigma.families.size(); ++fid) {
    const auto& fam = sigma.families[fid];
    const RationalComplex& q = angles[fid];
    RationalComplex cp = half(one + q);  // (1+e^{i theta})/2
    RationalComplex cm = half(one - q);  // (1-e^{i theta})/2
    const RationalComplex& p1 = f.values[static_cast<std::size_t>(fam.f1)];
    const RationalComplex& pi = f.values[static_cast<std::size_t>(fam.fi)];
    f.values[static_cast<std::size_t>(fam.f1pi)] = cp * p1 + cm * pi;
    f.values[static_cast<std::size_t>(fam.f0)] = cm * p1 + cp * pi;
  }
  return f;
}

PlacementFunction model_example(int n_generations, long radius) {
  if (n_generations < 2 || radius < 1)
    throw std::invalid_argument("model example needs N >= 2, R >= 1");
  SigmaIndex sigma = build_sigma_index(n_generations);
  std::vector<RationalComplex> f1;
  auto [b, e] = sigma.gen_range[0];
  f1.reserve(static_cast<std::size_t>(e - b));
  for (int i = b; i < e; ++i) {
    RationalComplex prod = RationalComplex::integer(radius, 0);
    for (Sym s : sigma.points[static_cast<std::size_t>(i)].coords()) prod = prod * sym_value(s);
    f1.push_back(prod);
  }
  std::vector<RationalComplex> angles(sigma.families.size(), RationalComplex::integer(0, 1));
  return place_recursive(sigma, f1, angles);
}

std::vector<RationalComplex> pythagorean_angles(long max_hyp) {
  if (max_hyp < 5) throw std::invalid_argument("max hypotenuse must be >= 5");
  std::vector<RationalComplex> out;
  out.push_back(RationalComplex::integer(1, 0));
  out.push_back(RationalComplex::integer(0, 1));
  out.push_back(RationalComplex::integer(-1, 0));
  out.push_back(RationalComplex::integer(0, -1));
  for (long c = 5; c <= max_hyp; ++c) {
    for (long a = 1; a < c; ++a) {
      long b2 = c * c - a * a;
      long bs = std::lround(std::sqrt(static_cast<double>(b2)));
      if (bs < 1 || bs * bs != b2) continue;
      for (long sa : {a, -a}) {
        for (long sb : {bs, -bs}) {
          out.push_back(RationalComplex::fraction(sa, sb, c));
          out.push_back(RationalComplex::fraction(sb, sa, c));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), rc_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Exact norm sums over integer points. Exact mode requires 2s to be an even
// integer (i.e. s a positive integer); otherwise doubles are used, accurate
// to ~1e-15 relative since |n|^2 fits a double exactly.
NormSums norm_sums_impl(const std::vector<std::vector<FreqPoint>>& gens, double s) {
  NormSums out;
  long s_int = std::lround(s);
  out.exact_mode = std::abs(s - static_cast<double>(s_int)) < 1e-12 && s_int >= 1;
  for (const auto& gen : gens) {
    if (out.exact_mode) {
      mpz_class total = 0;
      for (FreqPoint n : gen) {
        mpz_class term;
        mpz_class base = mpz_class(static_cast<long>(norm2(n)));
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(s_int));
        total += term;
      }
      out.exact.push_back(total.get_str());
      out.value.push_back(total.get_d());
    } else {
      double total = 0;
      for (FreqPoint n : gen)
        total += std::pow(static_cast<double>(norm2(n)), s);
      out.value.push_back(total);
    }
  }
  return out;
}

struct IntegerPlacement {
  bool ok = false;
  mpz_class lcd;
  std::vector<FreqPoint> points;
  std::string failure;
};

IntegerPlacement clear_denominators(const std::vector<RationalComplex>& values) {
  IntegerPlacement out;
  out.lcd = common_denominator(values);
  out.points.reserve(values.size());
  for (const auto& v : values) {
    try {
      out.points.push_back(to_freq_point(v, out.lcd));
    } catch (const LatticeOverflow& e) {
      out.failure = e.what();
      return out;
    }
  }
  out.ok = true;
  return out;
}

// The three sigma points of a right triangle belong to one nuclear family
// iff their coordinate tuples agree everywhere except a single position.
bool single_pivot(const CombinatorialPoint& a, const CombinatorialPoint& b,
                  const CombinatorialPoint& c) {
  int pivots = 0;
  for (int pos = 1; pos <= a.size(); ++pos) {
    Sym sa = a.coord(pos), sb = b.coord(pos), sc = c.coord(pos);
    if (sa != sb || sb != sc) {
      if (++pivots > 1) return false;
    }
  }
  return pivots == 1;
}

}  // namespace

NormSums norm_sums(const std::vector<std::vector<FreqPoint>>& generations, double s) {
  return norm_sums_impl(generations, s);
}

NormSums norm_sums(const LambdaSet& lambda, double s) {
  return norm_sums_impl(lambda.generations, s);
}

LambdaCertificate verify_lambda(const PlacementFunction& f, double s,
                                const VerifyOptions& opts) {
  const SigmaIndex& sigma = f.sigma;
  const int N = sigma.n_generations;
  LambdaCertificate cert;
  cert.n_generations = N;
  cert.s = s;
  auto witness = [&](const std::string& msg) {
    if (static_cast<int>(cert.violations.size()) < opts.max_witnesses)
      cert.violations.push_back(msg);
  };

  // (ii) non-zero values.
  cert.nonzero = true;
  for (int i = 0; i < sigma.total(); ++i) {
    if (f.values[static_cast<std::size_t>(i)].is_zero()) {
      cert.nonzero = false;
      witness("zero value at " + sigma.points[static_cast<std::size_t>(i)].str());
    }
  }

  // (i) injectivity, by exact sort.
  {
    std::vector<int> order(static_cast<std::size_t>(sigma.total()));
    for (int i = 0; i < sigma.total(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return rc_less(f.values[static_cast<std::size_t>(a)], f.values[static_cast<std::size_t>(b)]);
    });
    cert.injective = true;
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (f.values[static_cast<std::size_t>(order[k - 1])] ==
          f.values[static_cast<std::size_t>(order[k])]) {
        cert.injective = false;
        witness("collision: " + sigma.points[static_cast<std::size_t>(order[k - 1])].str() +
                " and " + sigma.points[static_cast<std::size_t>(order[k])].str() + " at " +
                f.values[static_cast<std::size_t>(order[k])].str());
      }
    }
  }

  // (iii) integrality after clearing the least common denominator.
  IntegerPlacement ip = clear_denominators(f.values);
  cert.lcd = ip.lcd.get_str();
  cert.integral = ip.ok;
  if (!ip.ok) {
    witness("LCD scaling failed: " + ip.failure);
    return cert;
  }
  const std::vector<FreqPoint>& pts = ip.points;

  // (iv) magnitude bounds.
  {
    cert.min_norm2 = INT64_MAX;
    cert.max_norm2 = 0;
    for (FreqPoint p : pts) {
      std::int64_t n2 = norm2(p);
      cert.min_norm2 = std::min(cert.min_norm2, n2);
      cert.max_norm2 = std::max(cert.max_norm2, n2);
    }
    if (cert.min_norm2 > 0) {
      cert.magnitude_ratio =
          std::sqrt(static_cast<double>(cert.max_norm2) / static_cast<double>(cert.min_norm2));
      double bound = opts.ratio_bound > 0 ? opts.ratio_bound : std::pow(8.0, N);
      // Exact comparison max2 <= bound^2 * min2 via integers.
      mpz_class b2 = 1;
      {
        mpz_class bb(std::to_string(static_cast<long long>(std::ceil(bound))));
        b2 = bb * bb;
      }
      cert.magnitude_ok = mpz_class(static_cast<long>(cert.max_norm2)) <=
                          b2 * mpz_class(static_cast<long>(cert.min_norm2));
      if (!cert.magnitude_ok) witness("magnitude ratio exceeds bound");
    } else {
      cert.magnitude_ok = false;
    }
  }

  // (v)+(vi) faithfulness and closure via the exact right-triangle scan.
  if (N > opts.max_scan_generations && !opts.allow_large_scan)
    throw std::invalid_argument(
        "refusing O(|Lambda|^3) scan for N > " + std::to_string(opts.max_scan_generations) +
        " without allow_large_scan");
  if (cert.injective && cert.nonzero) {
    cert.scan_run = true;
    cert.faithful = true;
    cert.closed = true;
    std::unordered_map<FreqPoint, int, FreqPointHash> where;
    for (int i = 0; i < sigma.total(); ++i) where[pts[static_cast<std::size_t>(i)]] = i;
    const int M = sigma.total();
    long triangles = 0;
    for (int a = 0; a < M; ++a) {
      for (int b = a + 1; b < M; ++b) {
        FreqPoint pa = pts[static_cast<std::size_t>(a)], pb = pts[static_cast<std::size_t>(b)];
        for (int c = b + 1; c < M; ++c) {
          FreqPoint pc = pts[static_cast<std::size_t>(c)];
          // right angle at whichever vertex; at most one can hold for a
          // nondegenerate triangle.
          int apex = -1;
          if (right_angle_at(pa, pb, pc)) apex = 0;
          else if (right_angle_at(pb, pa, pc)) apex = 1;
          else if (right_angle_at(pc, pa, pb)) apex = 2;
          if (apex < 0) continue;
          ++triangles;
          const CombinatorialPoint& xa = sigma.points[static_cast<std::size_t>(a)];
          const CombinatorialPoint& xb = sigma.points[static_cast<std::size_t>(b)];
          const CombinatorialPoint& xc = sigma.points[static_cast<std::size_t>(c)];
          if (!single_pivot(xa, xb, xc)) {
            cert.faithful = false;
            witness("foreign right triangle " + pa.str() + " " + pb.str() + " " + pc.str());
            continue;
          }
          // Closure: the fourth rectangle corner must be the remaining
          // family member.
          FreqPoint va = pa, vb = pb, vc = pc;
          if (apex == 1) std::swap(va, vb);
          if (apex == 2) std::swap(va, vc);
          FreqPoint fourth = vb + vc - va;
          auto it = where.find(fourth);
          if (it == where.end()) {
            cert.closed = false;
            witness("fourth corner " + fourth.str() + " missing from Lambda");
            continue;
          }
          if (!single_pivot(xa, xb, sigma.points[static_cast<std::size_t>(it->second)])) {
            cert.closed = false;
            witness("fourth corner " + fourth.str() + " not in the same family");
          }
        }
      }
    }
    cert.right_triangle_count = triangles;
  }

  // Generation moment identities: sum of n and of |n|^2 constant in j.
  {
    cert.moments_ok = true;
    mpz_class ref_re, ref_im, ref_n2;
    for (int j = 0; j < N; ++j) {
      auto [gb, ge] = sigma.gen_range[static_cast<std::size_t>(j)];
      mpz_class sre = 0, sim = 0, sn2 = 0;
      for (int i = gb; i < ge; ++i) {
        FreqPoint p = pts[static_cast<std::size_t>(i)];
        sre += static_cast<long>(p.re);
        sim += static_cast<long>(p.im);
        sn2 += mpz_class(static_cast<long>(norm2(p)));
      }
      cert.moments.push_back({sre.get_str(), sim.get_str(), sn2.get_str()});
      if (j == 0) {
        ref_re = sre; ref_im = sim; ref_n2 = sn2;
      } else if (sre != ref_re || sim != ref_im || sn2 != ref_n2) {
        cert.moments_ok = false;
        witness("generation moments differ at j=" + std::to_string(j + 1));
      }
    }
  }

  // (vii) norm sums and the explosion ratio.
  {
    std::vector<std::vector<FreqPoint>> gens(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
      auto [gb, ge] = sigma.gen_range[static_cast<std::size_t>(j)];
      for (int i = gb; i < ge; ++i) gens[static_cast<std::size_t>(j)].push_back(pts[static_cast<std::size_t>(i)]);
    }
    NormSums sums = norm_sums_impl(gens, s);
    cert.norm_sums = sums.value;
    cert.norm_sums_exact = sums.exact;
    cert.norm_sums_are_exact = sums.exact_mode;
    cert.ratio_applicable = N >= 6;
    cert.explosion_threshold = 0.5 * std::pow(2.0, (s - 1.0) * (N - 5));
    if (cert.ratio_applicable) {
      double s3 = sums.value[2];
      double sn2 = sums.value[static_cast<std::size_t>(N - 3)];
      cert.explosion_ratio = s3 > 0 ? sn2 / s3 : 0;
      cert.ratio_ok = s3 > 0 && cert.explosion_ratio > cert.explosion_threshold;
      if (!cert.ratio_ok) witness("norm explosion ratio below threshold");
    }
  }

  return cert;
}

namespace {

LambdaSet assemble(const SigmaIndex& sigma, std::vector<FreqPoint> pts, double s,
                   LambdaCertificate cert, std::uint64_t seed, int attempts, long radius) {
  LambdaSet out;
  out.n_generations = sigma.n_generations;
  out.s = s;
  out.seed = seed;
  out.attempts_used = attempts;
  out.inner_radius_target = radius;
  out.sigma = sigma;
  out.points = std::move(pts);
  out.generations.resize(static_cast<std::size_t>(sigma.n_generations));
  for (int j = 0; j < sigma.n_generations; ++j) {
    auto [gb, ge] = sigma.gen_range[static_cast<std::size_t>(j)];
    for (int i = gb; i < ge; ++i)
      out.generations[static_cast<std::size_t>(j)].push_back(out.points[static_cast<std::size_t>(i)]);
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace

LambdaSet construct_good_lambda(int n_generations, double s, long radius_target,
                                std::uint64_t seed, int budget,
                                const ConstructOptions& opts) {
  if (n_generations < 2) throw std::invalid_argument("need N >= 2");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  SigmaIndex sigma = build_sigma_index(n_generations);

  std::vector<RationalComplex> pool = pythagorean_angles(opts.angle_pool_hyp);
  if (opts.exclude_degenerate_angles) {
    std::erase_if(pool, [](const RationalComplex& q) {
      return q == RationalComplex::integer(1, 0) || q == RationalComplex::integer(-1, 0);
    });
  }

  // Model-example baseline for f1.
  std::vector<RationalComplex> base;
  {
    auto [gb, ge] = sigma.gen_range[0];
    for (int i = gb; i < ge; ++i) {
      RationalComplex prod = RationalComplex::integer(opts.base_radius, 0);
      for (Sym sym : sigma.points[static_cast<std::size_t>(i)].coords()) prod = prod * sym_value(sym);
      base.push_back(prod);
    }
  }

  Rng rng(seed);
  LambdaCertificate best;
  int best_score = -1;
  VerifyOptions vopts;
  vopts.ratio_bound = opts.ratio_bound;

  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<RationalComplex> f1 = base;
    for (auto& v : f1) {
      long u = rng.range(-opts.grid_span, opts.grid_span);
      long w = rng.range(-opts.grid_span, opts.grid_span);
      v = v + RationalComplex::fraction(u, w, opts.grid_denominator);
    }
    std::vector<RationalComplex> angles;
    angles.reserve(sigma.families.size());
    for (std::size_t k = 0; k < sigma.families.size(); ++k)
      angles.push_back(pool[static_cast<std::size_t>(rng.below(pool.size()))]);

    PlacementFunction pf = place_recursive(sigma, f1, angles);
    LambdaCertificate cert = verify_lambda(pf, s, vopts);
    if (!cert.pass()) {
      int score = cert.nonzero + cert.injective + cert.integral + cert.faithful + cert.closed +
                  cert.magnitude_ok + cert.moments_ok + (cert.ratio_applicable ? cert.ratio_ok : 1);
      if (score > best_score) {
        best_score = score;
        best = cert;
      }
      continue;
    }

    // Clear denominators, then dilate so the inner radius reaches the target.
    IntegerPlacement ip = clear_denominators(pf.values);
    std::vector<FreqPoint> pts = std::move(ip.points);
    double min_abs = std::sqrt(static_cast<double>(cert.min_norm2));
    long k = 1;
    if (radius_target > 0 && min_abs < static_cast<double>(radius_target))
      k = static_cast<long>(std::ceil(static_cast<double>(radius_target) / min_abs));
    if (k > 1)
      for (auto& p : pts) p = FreqPoint::checked(Wide(p.re) * k, Wide(p.im) * k);

    // Re-certify the final integer set (dilation invariance, but the
    // certificate shipped with the set must describe the set itself).
    std::vector<RationalComplex> scaled;
    scaled.reserve(pts.size());
    for (FreqPoint p : pts)
      scaled.push_back(RationalComplex::integer(static_cast<long>(p.re), static_cast<long>(p.im)));
    PlacementFunction final_pf;
    final_pf.sigma = sigma;
    final_pf.values = std::move(scaled);
    LambdaCertificate final_cert = verify_lambda(final_pf, s, vopts);
    if (!final_cert.pass()) continue;  // dilation overflow edge; try again

    return assemble(sigma, std::move(pts), s, std::move(final_cert), seed, attempt + 1,
                    radius_target);
  }

  throw BudgetExhausted("no certified placement within budget", best, budget);
}

LambdaSet dilate(const LambdaSet& lambda, long k) {
  if (k < 1) throw std::invalid_argument("dilation factor must be >= 1");
  LambdaSet out = lambda;
  for (auto& p : out.points) p = FreqPoint::checked(Wide(p.re) * k, Wide(p.im) * k);
  for (auto& gen : out.generations)
    for (auto& p : gen) p = FreqPoint::checked(Wide(p.re) * k, Wide(p.im) * k);
  std::vector<RationalComplex> vals;
  vals.reserve(out.points.size());
  for (FreqPoint p : out.points)
    vals.push_back(RationalComplex::integer(static_cast<long>(p.re), static_cast<long>(p.im)));
  PlacementFunction pf;
  pf.sigma = out.sigma;
  pf.values = std::move(vals);
  out.certificate = verify_lambda(pf, lambda.s);
  return out;
}

}  // namespace rcl
