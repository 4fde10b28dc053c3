#ifndef RECALC_REWRITE_HPP
#define RECALC_REWRITE_HPP

#include "recalc/ncpoly.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace recalc {

class PresentationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string &what, std::vector<Word> trace)
      : std::runtime_error(what), trace(std::move(trace)) {}
  std::vector<Word> trace;
};

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

// Rules lhs -> rhs with every rhs word smaller than lhs in the deg-lex
// order on letter codes.  Immutable once built.
class RewriteSystem {
public:
  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<RewriteRule> rules);

  const std::vector<RewriteRule> &rules() const { return rules_; }
  const NCPoly *find(const Word &lhs) const;
  std::size_t max_lhs() const { return max_lhs_; }
  bool empty() const { return rules_.empty(); }
  // True when no lhs occurs as a factor of w.
  bool is_normal(const Word &w) const;

private:
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::size_t max_lhs_ = 0;
};

// Row-reduces the span of the relations (columns ordered by decreasing
// word) and turns every pivot into a rule.  Zero relations are dropped and
// duplicates removed first.
RewriteSystem rules_from_relations(const std::vector<NCPoly> &relations);

// Rule applications allowed per Normalizer when none is given.
long default_rewrite_budget();
void set_default_rewrite_budget(long budget);

// Exhaustive rewriting with memoized normal forms of words.
class Normalizer {
public:
  // budget < 0 takes default_rewrite_budget().
  explicit Normalizer(std::shared_ptr<const RewriteSystem> sys, long budget = -1);

  NCPoly normal_form(const NCPoly &p);
  const NCPoly &normal_form(const Word &w);
  const RewriteSystem &system() const { return *sys_; }
  long applications() const { return applications_; }
  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

private:
  const NCPoly &prefixed(Letter a, const Word &v);
  NCPoly concat(const Word &t, const Word &rest);
  void charge(const Word &w);

  std::shared_ptr<const RewriteSystem> sys_;
  long budget_;
  long applications_ = 0;
  std::unordered_map<Word, NCPoly, WordHash> memo_;
  std::vector<Word> trace_;
};

struct ConfluenceWitness {
  Word word;
  NCPoly difference;
};

// Reduces every overlap and inclusion ambiguity of the rule set both ways;
// returns the ambiguities whose two reductions differ, up to the given
// word length.
std::vector<ConfluenceWitness> confluence_residuals(const RewriteSystem &sys, std::size_t max_len = 3);

// Interreduced rule set for the relations, completed by adding the
// differences of ambiguities up to word length max_len until none remain.
RewriteSystem complete_system(const std::vector<NCPoly> &relations, std::size_t max_len = 3, int max_rounds = 20);

} // namespace recalc

#endif
