#include "herbrand/coding.hpp"

#include <algorithm>
#include <stdexcept>

#include "herbrand/universe.hpp"

namespace herbrand {

namespace {

using Bytes = std::vector<std::uint8_t>;

void put_varint(Bytes& out, std::size_t n) {
  while (n >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(n) | 0x80);
    n >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(n));
}

void wrap(Bytes& out, CodeKind kind, const Bytes& payload) {
  out.push_back(static_cast<std::uint8_t>(kind));
  put_varint(out, payload.size());
  out.insert(out.end(), payload.begin(), payload.end());
}

void encode_symbol(std::string_view name, Bytes& out) {
  Bytes payload(name.begin(), name.end());
  wrap(out, CodeKind::Symbol, payload);
}

void encode_term(TermId t, Bytes& out) {
  Bytes payload;
  const TermNode& n = term(t);
  encode_symbol(symbol_name(n.head), payload);
  for (TermId a : n.args) encode_term(a, payload);
  wrap(out, CodeKind::Term, payload);
}

void encode_formula(const Formula& f, Bytes& out) {
  Bytes payload;
  const FormulaNode& n = f.node();
  payload.push_back(static_cast<std::uint8_t>(n.kind));
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      encode_symbol(symbol_name(n.pred), payload);
      for (TermId a : n.args) encode_term(a, payload);
      break;
    case FormulaKind::Not:
      encode_formula(f.left(), payload);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      encode_formula(f.left(), payload);
      encode_formula(f.right(), payload);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      encode_symbol(symbol_name(n.var), payload);
      encode_formula(f.body(), payload);
      break;
  }
  wrap(out, CodeKind::Formula, payload);
}

/// Bytes read as a binary number with a leading 1: numeric order on values
/// is exactly (length, lexicographic) order on the strings.
BigNat bytes_value(const Bytes& b) {
  BigNat v = 0;
  if (!b.empty())
    mpz_import(v.get_mpz_t(), b.size(), 1, 1, 0, 0, b.data());
  BigNat lead = 1;
  lead <<= 8 * b.size();
  return lead + v;
}

GodelCode from_bytes(const Bytes& b, CodeKind kind) {
  return GodelCode{bytes_value(b), kind};
}

bool byte_less(const Bytes& a, const Bytes& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Set encoding over element byte strings: deduplicate, sort ascending by
/// code (= by length then bytes), concatenate.
Bytes set_bytes(std::vector<Bytes> elems) {
  std::sort(elems.begin(), elems.end(), byte_less);
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Bytes payload;
  for (const Bytes& e : elems) payload.insert(payload.end(), e.begin(), e.end());
  Bytes out;
  wrap(out, CodeKind::Set, payload);
  return out;
}

Bytes pair_bytes(const Bytes& a, const Bytes& b) {
  Bytes payload = a;
  payload.insert(payload.end(), b.begin(), b.end());
  Bytes out;
  wrap(out, CodeKind::Pair, payload);
  return out;
}

constexpr std::size_t kBitBudget = std::size_t{1} << 22;

BigNat ceil_div(const BigNat& a, const BigNat& b) {
  BigNat q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

// ── Codes ───────────────────────────────────────────────────────────────────

GodelCode code_symbol(std::string_view name) {
  Bytes out;
  encode_symbol(name, out);
  return from_bytes(out, CodeKind::Symbol);
}

GodelCode code_term(TermId t) {
  Bytes out;
  encode_term(t, out);
  return from_bytes(out, CodeKind::Term);
}

GodelCode code_formula(const Formula& f) {
  Bytes out;
  encode_formula(f, out);
  return from_bytes(out, CodeKind::Formula);
}

std::vector<std::uint8_t> code_bytes(const GodelCode& c) {
  std::size_t bits = bit_length(c.value);
  if (bits == 0 || (bits - 1) % 8 != 0)
    throw std::invalid_argument("code_bytes: value is not a byte-string code");
  std::size_t n = (bits - 1) / 8;
  BigNat rest = c.value;
  mpz_clrbit(rest.get_mpz_t(), bits - 1);
  Bytes out(n, 0);
  if (rest != 0) {
    std::size_t count = 0;
    // Export is big-endian and skips leading zero bytes; right-align it.
    std::vector<std::uint8_t> buf((bit_length(rest) + 7) / 8);
    mpz_export(buf.data(), &count, 1, 1, 0, 0, rest.get_mpz_t());
    std::copy(buf.begin(), buf.begin() + count, out.end() - count);
  }
  return out;
}

GodelCode code_pair(const GodelCode& a, const GodelCode& b) {
  return from_bytes(pair_bytes(code_bytes(a), code_bytes(b)), CodeKind::Pair);
}

GodelCode code_set(const std::vector<GodelCode>& elements) {
  std::vector<Bytes> elems;
  elems.reserve(elements.size());
  for (const GodelCode& e : elements) elems.push_back(code_bytes(e));
  return from_bytes(set_bytes(std::move(elems)), CodeKind::Set);
}

GodelCode code_term_set(const TermSet& lambda) {
  std::vector<Bytes> elems;
  elems.reserve(lambda.size());
  for (TermId t : lambda.members()) {
    Bytes b;
    encode_term(t, b);
    elems.push_back(std::move(b));
  }
  return from_bytes(set_bytes(std::move(elems)), CodeKind::Set);
}

GodelCode code_evaluation(const Evaluation& p) {
  const AtomTable& table = p.table();
  if (table.size() == 0)
    throw std::invalid_argument("code_evaluation: empty atom table");
  std::vector<Bytes> pairs;
  pairs.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Atom& a = table.atom(i);
    Bytes fb;
    encode_formula(atom(a.pred, a.args), fb);
    Bytes bb;
    encode_symbol(p.value(i) ? "1" : "0", bb);
    pairs.push_back(pair_bytes(fb, bb));
  }
  Bytes out;
  wrap(out, CodeKind::Evaluation, set_bytes(std::move(pairs)));
  return from_bytes(out, CodeKind::Evaluation);
}

// ── Measured bounds ─────────────────────────────────────────────────────────

BigNat union_constant(const std::vector<GodelCode>& a,
                      const std::vector<GodelCode>& b) {
  std::vector<GodelCode> both = a;
  both.insert(both.end(), b.begin(), b.end());
  BigNat u = code_set(both).value;
  BigNat d = code_set(a).value * code_set(b).value;
  return ceil_div(u, d);
}

PBoundCheck fit_p_bound(std::vector<std::pair<BigNat, BigNat>> samples,
                        int max_exponent) {
  PBoundCheck r;
  r.samples = std::move(samples);
  if (r.samples.empty()) {
    r.exponent = 1;
    r.holds = true;
    r.note = "empty sample";
    return r;
  }
  for (int n = 1; n <= max_exponent; ++n) {
    bool all = true;
    for (const auto& [y, code] : r.samples) {
      if (y <= 1) {
        // yⁿ is 0 or 1; only the additive n is available.
        if (code <= y + n) continue;
        all = false;
        break;
      }
      std::size_t by = bit_length(y);
      if (bit_length(code) <= std::size_t(n) * (by - 1)) continue;  // ≤ yⁿ
      if (std::size_t(n) * by <= kBitBudget) {
        BigNat yn;
        mpz_pow_ui(yn.get_mpz_t(), y.get_mpz_t(), n);
        if (code <= yn + n) continue;
        all = false;
        break;
      }
      // Too wide to compute and the bit-length test was inconclusive.
      r.partial = true;
      all = false;
      break;
    }
    if (all) {
      r.exponent = n;
      r.holds = true;
      return r;
    }
  }
  r.note = "no exponent up to " + std::to_string(max_exponent) +
           " covers the sample";
  return r;
}

PBoundCheck check_universe_code_bound(const TermSet& lambda, int n) {
  if (n < 0 || n > 3)
    throw std::invalid_argument("check_universe_code_bound: depth must be in [0,3]");
  if (lambda.size() < 2)
    throw std::invalid_argument(
        "check_universe_code_bound: need at least two seed terms");

  Signature sig = Signature::arithmetic();
  UniverseConfig ucfg;
  ucfg.level_budget = std::size_t{1} << 18;
  ClosureResult cr = close_universe(lambda, n, sig, nullptr, ucfg);

  BigNat base = code_term_set(lambda).value;
  std::size_t base_bits = bit_length(base);
  static const unsigned long kFactorial[4] = {1, 2, 6, 24};

  std::vector<std::pair<BigNat, BigNat>> samples;
  std::string note;
  bool partial = cr.truncated;
  bool loglog_failed = false;
  if (cr.truncated) note += "closure truncated at the level budget\n";

  for (int j = 0; j <= n; ++j) {
    BigNat code = code_term_set(cr.level(j)).value;
    BigNat e;
    mpz_ui_pow_ui(e.get_mpz_t(), lambda.size(), kFactorial[j]);
    if (e * BigNat(static_cast<unsigned long>(base_bits)) <= kBitBudget) {
      BigNat y;
      mpz_pow_ui(y.get_mpz_t(), base.get_mpz_t(), e.get_ui());
      samples.emplace_back(std::move(y), std::move(code));
    } else {
      // y = ⌈Λ⌉^e is too wide; compare exponents of 2 instead: code ≤ yᵏ
      // whenever bits(code) ≤ k·e·(bits(⌈Λ⌉)−1).
      BigNat k = ceil_div(BigNat(static_cast<unsigned long>(bit_length(code))),
                          e * BigNat(static_cast<unsigned long>(base_bits - 1)));
      note += "level " + std::to_string(j) +
              ": bound base not representable; log-log exponent " +
              k.get_str() + "\n";
      partial = true;
      if (k > 64) loglog_failed = true;
    }
  }

  PBoundCheck r = fit_p_bound(std::move(samples));
  r.partial = r.partial || partial;
  if (loglog_failed) {
    r.holds = false;
    note += "a log-log level needs an exponent beyond 64\n";
  }
  r.note = note + r.note;
  return r;
}

PBoundCheck cartesian_power_bound(const std::vector<GodelCode>& a, int m) {
  if (m < 1 || m > 3)
    throw std::invalid_argument("cartesian_power_bound: power must be in [1,3]");
  if (a.empty())
    throw std::invalid_argument("cartesian_power_bound: empty set");

  // Set semantics: deduplicate before counting |A|.
  std::vector<Bytes> elems;
  for (const GodelCode& e : a) elems.push_back(code_bytes(e));
  std::sort(elems.begin(), elems.end(), byte_less);
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  BigNat base = bytes_value(set_bytes(elems));
  std::size_t base_bits = bit_length(base);

  std::vector<std::pair<BigNat, BigNat>> samples;
  std::string note;
  bool partial = false;

  // Tuples nest as pairs on the right: (a,b,c) = ⟨a, ⟨b, c⟩⟩; A¹ is A itself.
  std::vector<Bytes> tuples = elems;
  for (int j = 1; j <= m; ++j) {
    if (j > 1) {
      std::vector<Bytes> next;
      next.reserve(elems.size() * tuples.size());
      for (const Bytes& e : elems)
        for (const Bytes& t : tuples) next.push_back(pair_bytes(e, t));
      tuples = std::move(next);
    }
    BigNat code = bytes_value(set_bytes(tuples));
    BigNat e;
    mpz_ui_pow_ui(e.get_mpz_t(), elems.size(), static_cast<unsigned long>(j));
    if (e * BigNat(static_cast<unsigned long>(base_bits)) <= kBitBudget) {
      BigNat y;
      mpz_pow_ui(y.get_mpz_t(), base.get_mpz_t(), e.get_ui());
      samples.emplace_back(std::move(y), std::move(code));
    } else {
      BigNat k = ceil_div(BigNat(static_cast<unsigned long>(bit_length(code))),
                          e * BigNat(static_cast<unsigned long>(base_bits - 1)));
      note += "power " + std::to_string(j) +
              ": bound base not representable; log-log exponent " +
              k.get_str() + "\n";
      partial = true;
    }
  }

  PBoundCheck r = fit_p_bound(std::move(samples));
  r.partial = r.partial || partial;
  r.note = note + r.note;
  return r;
}

}  // namespace herbrand
