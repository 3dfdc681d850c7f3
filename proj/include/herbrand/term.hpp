// ═══════════════════════════════════════════════════════════════════════════
// term.hpp — hash-consed first-order terms
//
// Terms are immutable nodes (head symbol + argument list) interned in a
// process-wide arena, so structural equality of terms is identity of their
// 32-bit ids and set membership is a hash lookup on ids.  The arena is
// append-only; nodes live in a deque so references stay valid while the
// arena grows.  Interning is guarded by a shared mutex: insertions take the
// exclusive lock, lookups the shared one, which keeps concurrent insertion
// safe without slowing down the (single-threaded) hot paths much.
//
// Symbols are interned strings.  A term does not know by itself whether a
// 0-ary head is a variable or a constant — that distinction is contextual
// (see signature.hpp): the signature declares constants and functions, a
// Skolem registry may add more, and every other 0-ary head is a variable.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace herbrand {

using SymId = std::uint32_t;
using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = static_cast<TermId>(-1);

/// Interns a symbol name, returning its stable id.
SymId intern_symbol(std::string_view name);

/// Name of an interned symbol.
const std::string& symbol_name(SymId sym);

/// One immutable term node: a head symbol applied to argument terms.
struct TermNode {
  SymId head;
  std::vector<TermId> args;

  bool operator==(const TermNode& other) const {
    return head == other.head && args == other.args;
  }
};

/// Interns a term, returning its stable id.  Idempotent.
TermId make_term(SymId head, std::vector<TermId> args = {});
TermId make_term(std::string_view head, std::vector<TermId> args = {});

/// Node accessor.  The reference stays valid for the process lifetime.
const TermNode& term(TermId id);

/// Head name of a term, for matching on "0", "S", "+", "*", ...
const std::string& term_head(TermId id);

// ── Structural queries ──────────────────────────────────────────────────────

/// Depth-first, left-to-right list of all subterm occurrences (including the
/// term itself).  Shared subterms appear once per occurrence.
void append_subterm_occurrences(TermId id, std::vector<TermId>& out);

/// Deduplicated subterm set in first-occurrence (DFS) order.
std::vector<TermId> subterms(TermId id);

/// A position is a path of argument indices from the root.
using TermPos = std::vector<std::uint8_t>;

/// All (position, subterm) pairs of a term in DFS order; the root has the
/// empty position.
std::vector<std::pair<TermPos, TermId>> positions(TermId id);

/// Replaces the subterm at `pos` by `replacement`.
TermId replace_at(TermId id, const TermPos& pos, TermId replacement);

/// Simultaneous substitution of leaf heads: every 0-ary occurrence of a key
/// symbol is replaced by the mapped term.  (Which 0-ary heads are variables
/// is decided by the caller; the map's keys simply select the leaves.)
TermId substitute(TermId id, const std::vector<std::pair<SymId, TermId>>& map);

// ── Printing ────────────────────────────────────────────────────────────────
//
// Canonical concrete syntax, mirroring the input grammar:
//   0, S(t), (t + t), (t * t), name, name(t, ..., t)

std::string to_string(TermId id);

}  // namespace herbrand
