#include "herbrand/hierarchy.hpp"

#include <stdexcept>

namespace herbrand {

namespace {

void guard_bits(std::size_t bits, std::size_t budget, const char* who) {
  if (bits > budget)
    throw ResourceLimitError(std::string(who) + ": result exceeds the bit budget");
}

/// base^e, capped by the bit budget.
BigNat pow_guarded(const BigNat& base, const BigNat& e, std::size_t budget,
                   const char* who) {
  if (e == 0) return 1;
  if (base <= 1) return base;
  if (!e.fits_ulong_p() ||
      e * BigNat(static_cast<unsigned long>(bit_length(base))) > budget)
    throw ResourceLimitError(std::string(who) + ": result exceeds the bit budget");
  BigNat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e.get_ui());
  return r;
}

}  // namespace

// ── exp / log towers ────────────────────────────────────────────────────────

BigNat exp_(const BigNat& x, std::size_t bit_budget) {
  if (x >= static_cast<unsigned long>(bit_budget))
    throw ResourceLimitError("exp_: result exceeds the bit budget");
  BigNat r = 1;
  r <<= x.get_ui();
  return r;
}

BigNat log_(const BigNat& x) {
  if (x <= 0) throw std::domain_error("log_: argument must be positive");
  std::size_t bits = bit_length(x);
  // Powers of two hit the minimum exactly: log 2^k = k.
  bool pow2 = mpz_popcount(x.get_mpz_t()) == 1;
  return BigNat(static_cast<unsigned long>(pow2 ? bits - 1 : bits));
}

BigNat exp_iter(int k, const BigNat& x, std::size_t bit_budget) {
  if (k < 0) throw std::invalid_argument("exp_iter: negative iteration count");
  BigNat r = x;
  for (int i = 0; i < k; ++i) r = exp_(r, bit_budget);
  return r;
}

BigNat log_iter(int k, const BigNat& x) {
  if (k < 0) throw std::invalid_argument("log_iter: negative iteration count");
  BigNat r = x;
  for (int i = 0; i < k; ++i) r = log_(r);
  return r;
}

// ── The ω hierarchy ─────────────────────────────────────────────────────────

BigNat omega(int m, const BigNat& x, std::size_t bit_budget) {
  if (m < -1) throw std::invalid_argument("omega: m must be ≥ -1");
  if (m == -1) {
    guard_bits(bit_length(x) + 1, bit_budget, "omega");
    return 2 * x;
  }
  if (m == 0) {
    guard_bits(2 * bit_length(x), bit_budget, "omega");
    return x * x;
  }
  return exp_(omega(m - 1, log_(x), bit_budget), bit_budget);
}

BigNat omega_closed(int m, const BigNat& x, std::size_t bit_budget) {
  if (m < -1) throw std::invalid_argument("omega_closed: m must be ≥ -1");
  if (m == -1) {
    guard_bits(bit_length(x) + 1, bit_budget, "omega_closed");
    return 2 * x;
  }
  BigNat l = log_iter(m, x);
  guard_bits(2 * bit_length(l), bit_budget, "omega_closed");
  return exp_iter(m, l * l, bit_budget);
}

BigNat omega_iter(int m, int N, const BigNat& x, std::size_t bit_budget) {
  if (m < -1) throw std::invalid_argument("omega_iter: m must be ≥ -1");
  if (N < 1) throw std::invalid_argument("omega_iter: N must be ≥ 1");
  if (m == -1) {
    guard_bits(bit_length(x) + static_cast<std::size_t>(N), bit_budget,
               "omega_iter");
    BigNat f = 1;
    f <<= static_cast<unsigned long>(N);
    return f * x;
  }
  BigNat l = log_iter(m, x);
  BigNat e = exp_(BigNat(N), bit_budget);
  return exp_iter(m, pow_guarded(l, e, bit_budget, "omega_iter"), bit_budget);
}

BigNat varpi(int n, const BigNat& x, std::size_t bit_budget) {
  if (n < -1) throw std::invalid_argument("varpi: n must be ≥ -1");
  if (x < 1) throw std::domain_error("varpi: x must be ≥ 1");
  (void)bit_budget;  // the adjunction keeps every comparison narrow

  // ω_n(y) ≥ x ⟺ log^n x ≤ (log^n y)² (undefined logs mean y is too small).
  auto big_enough = [&](const BigNat& y) {
    if (n == -1) return 2 * y >= x;
    try {
      BigNat ly = log_iter(n, y);
      return log_iter(n, x) <= ly * ly;
    } catch (const std::domain_error&) {
      return false;
    }
  };

  BigNat hi = 1;
  while (!big_enough(hi)) hi *= 2;  // terminates: ω_n(x) ≥ x for defined x
  BigNat lo = hi / 2;               // big_enough(lo) is false (or lo = 0)
  while (lo + 1 < hi) {
    BigNat mid = (lo + hi) / 2;
    (big_enough(mid) ? hi : lo) = mid;
  }
  return hi;
}

// ── Lemma checks ────────────────────────────────────────────────────────────

namespace {

/// Sample widths above bits(threshold): threshold+1, threshold+2, `count`
/// seeded mid-width values, and one near-budget value.
std::vector<BigNat> sample_xs(const BigNat& threshold, int count,
                              std::uint64_t seed, std::size_t bit_budget,
                              LemmaReport& report) {
  std::vector<BigNat> xs = {threshold + 1, threshold + 2};
  std::size_t tb = bit_length(threshold);
  if (tb + 1 > bit_budget) {
    report.partial = true;
    report.note += "no head-room above the threshold for random samples\n";
    return xs;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  auto with_width = [&](std::size_t width) -> BigNat {
    BigNat x = 1;
    x <<= static_cast<unsigned long>(width - 1);
    BigNat low = rng.get_z_bits(static_cast<unsigned long>(width - 1));
    return x + low;
  };
  for (int i = 0; i < count; ++i) {
    std::size_t span = bit_budget - tb;
    std::size_t width =
        tb + 1 + mpz_class(rng.get_z_range(static_cast<unsigned long>(span)))
                     .get_ui();
    xs.push_back(with_width(width));
  }
  xs.push_back(with_width(bit_budget));
  return xs;
}

}  // namespace

LemmaReport check_lemma1(int m, int N, int samples, std::uint64_t seed,
                         std::size_t bit_budget) {
  if (m < 0) throw std::invalid_argument("check_lemma1: m must be ≥ 0");
  if (N <= 2) throw std::invalid_argument("check_lemma1: N must be > 2");
  if (samples < 0) throw std::invalid_argument("check_lemma1: negative count");

  LemmaReport r;
  r.lemma = 1;
  r.m = m;
  r.big_n = N;

  BigNat threshold;
  try {
    threshold = exp_iter(m + 2, BigNat(N), bit_budget);
  } catch (const ResourceLimitError&) {
    r.partial = true;
    r.note = "threshold exp^" + std::to_string(m + 2) + "(" +
             std::to_string(N) + ") exceeds the bit budget; nothing sampled\n";
    return r;
  }

  for (const BigNat& x : sample_xs(threshold, samples, seed, bit_budget, r)) {
    LemmaSample s;
    s.x = x;
    // Peel the common exp^m layer: ω_m^N(x) < ω_{m+1}(x) reduces to
    // L^{2^N} < 2^{(log L)²} for L = log^m x.
    BigNat l = log_iter(m, x);
    BigNat lq = log_(l);
    BigNat q = lq * lq;
    BigNat e = exp_(BigNat(N), bit_budget);
    bool exact_fits = l >= 2 && e.fits_ulong_p() &&
                      e * BigNat(static_cast<unsigned long>(bit_length(l))) <=
                          bit_budget &&
                      q < static_cast<unsigned long>(bit_budget);
    if (exact_fits) {
      s.direct = true;
      s.holds = pow_guarded(l, e, bit_budget, "check_lemma1") < exp_(q, bit_budget);
    } else {
      // log(L^{2^N}) ≤ 2^N·log L, so 2^N·log L ≤ (log L)² − 1 certifies the
      // strict inequality; above the threshold this margin always holds.
      s.direct = false;
      s.holds = e * lq <= q - 1;
      if (!s.holds)
        r.note += "sample with " + std::to_string(bit_length(x)) +
                  " bits: log-route margin failed (indeterminate)\n";
    }
    if (!s.holds) r.violations.push_back(x);
    r.samples.push_back(std::move(s));
  }
  return r;
}

namespace {

/// Exact verification of ω_m^N(y) < x ≤ ω_{m+1}(y) via the adjunction
/// x ≤ exp^k(t) ⟺ log^k x ≤ t.
bool lemma2_inequalities(int m, int N, const BigNat& x, const BigNat& y,
                         std::size_t bit_budget) {
  if (y > x) return false;
  if (m == -1) {
    BigNat lhs = 1;
    lhs <<= static_cast<unsigned long>(N);
    return lhs * y < x && x <= y * y;
  }
  // x ≤ ω_{m+1}(y) = exp^{m+1}((log^{m+1} y)²)
  BigNat ly = log_iter(m + 1, y);
  if (log_iter(m + 1, x) > ly * ly) return false;
  // ω_m^N(y) = exp^m((log^m y)^{2^N}) < x
  BigNat w = log_iter(m, y);
  BigNat e = exp_(BigNat(N), bit_budget);
  BigNat r;
  try {
    r = pow_guarded(w, e, bit_budget, "lemma2");
  } catch (const ResourceLimitError&) {
    return false;  // the iterate is astronomically above any admissible x
  }
  return log_iter(m, x) > r;
}

}  // namespace

BigNat find_lemma2_witness(int m, int N, const BigNat& x,
                           std::size_t bit_budget) {
  if (m < -1) throw std::invalid_argument("find_lemma2_witness: m must be ≥ -1");
  if (N < 1) throw std::invalid_argument("find_lemma2_witness: N must be ≥ 1");

  // x > exp^{m+2}(4N+4) ⟺ log^{m+2} x > 4N+4 (logs of small x bottom out
  // in a domain error, which likewise means x is too small).
  bool above = false;
  try {
    above = log_iter(m + 2, x) > 4 * N + 4;
  } catch (const std::domain_error&) {
  }
  if (!above)
    throw std::invalid_argument(
        "find_lemma2_witness: x must exceed exp^" + std::to_string(m + 2) +
        "(" + std::to_string(4 * N + 4) + ")");

  BigNat y;
  if (m == -1) {
    // Least y with y² ≥ x.
    BigNat root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
    y = rem == 0 ? root : root + 1;
  } else {
    y = exp_(find_lemma2_witness(m - 1, N, log_(x), bit_budget), bit_budget);
  }

  if (!lemma2_inequalities(m, N, x, y, bit_budget))
    throw std::logic_error(
        "find_lemma2_witness: construction failed re-verification");
  return y;
}

LemmaReport check_lemma2(int m, int N, int samples, std::uint64_t seed,
                         std::size_t bit_budget) {
  if (m < -1) throw std::invalid_argument("check_lemma2: m must be ≥ -1");
  if (N < 1) throw std::invalid_argument("check_lemma2: N must be ≥ 1");
  if (samples < 0) throw std::invalid_argument("check_lemma2: negative count");

  LemmaReport r;
  r.lemma = 2;
  r.m = m;
  r.big_n = N;

  BigNat threshold;
  try {
    threshold = exp_iter(m + 2, BigNat(4 * N + 4), bit_budget);
  } catch (const ResourceLimitError&) {
    r.partial = true;
    r.note = "threshold exp^" + std::to_string(m + 2) + "(" +
             std::to_string(4 * N + 4) +
             ") exceeds the bit budget; nothing sampled\n";
    return r;
  }

  for (const BigNat& x : sample_xs(threshold, samples, seed, bit_budget, r)) {
    LemmaSample s;
    s.x = x;
    s.direct = m == -1;
    try {
      BigNat y = find_lemma2_witness(m, N, x, bit_budget);
      s.holds = true;
      r.witnesses.emplace_back(x, std::move(y));
    } catch (const std::exception& e) {
      s.holds = false;
      r.note += std::string("witness failed: ") + e.what() + "\n";
    }
    if (!s.holds) r.violations.push_back(x);
    r.samples.push_back(std::move(s));
  }
  return r;
}

}  // namespace herbrand
