// ═══════════════════════════════════════════════════════════════════════════
// termset.hpp — ordered finite sets of (ground) terms
//
// Membership is a hash lookup on interned ids; iteration follows insertion
// order, which keeps every enumeration downstream deterministic.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <unordered_set>
#include <vector>

#include "herbrand/term.hpp"

namespace herbrand {

class TermSet {
 public:
  TermSet() = default;
  explicit TermSet(const std::vector<TermId>& members) {
    for (TermId t : members) insert(t);
  }

  /// Inserts a term; returns false when already present.
  bool insert(TermId t) {
    if (index_.count(t)) return false;
    index_.insert(t);
    members_.push_back(t);
    return true;
  }

  bool contains(TermId t) const { return index_.count(t) != 0; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<TermId>& members() const { return members_; }

  /// All subterms of all members, deduplicated, in first-occurrence
  /// (member-order, then DFS) order.  Always a superset of the members.
  std::vector<TermId> subterm_closure() const {
    std::vector<TermId> closure;
    std::unordered_set<TermId> seen;
    std::vector<TermId> occ;
    for (TermId t : members_) {
      occ.clear();
      append_subterm_occurrences(t, occ);
      for (TermId s : occ)
        if (seen.insert(s).second) closure.push_back(s);
    }
    return closure;
  }

 private:
  std::vector<TermId> members_;
  std::unordered_set<TermId> index_;
};

}  // namespace herbrand
