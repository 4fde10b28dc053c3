#include "recalc/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

namespace recalc {

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  DegLex less;
  std::sort(rules_.begin(), rules_.end(),
            [&](const RewriteRule &a, const RewriteRule &b) { return less(a.lhs, b.lhs); });
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const auto &r = rules_[k];
    if (r.lhs.empty()) throw PresentationError("rule with empty left-hand side");
    if (!index_.emplace(r.lhs, k).second)
      throw PresentationError("duplicate rule for " + word_str(r.lhs));
    if (!r.rhs.is_zero() && !less(r.rhs.leading_word(), r.lhs))
      throw PresentationError("order error: rule " + word_str(r.lhs) + " -> " + r.rhs.str() +
                              " does not decrease");
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
}

const NCPoly *RewriteSystem::find(const Word &lhs) const {
  auto it = index_.find(lhs);
  return it == index_.end() ? nullptr : &rules_[it->second].rhs;
}

bool RewriteSystem::is_normal(const Word &w) const {
  for (std::size_t start = 0; start < w.size(); ++start)
    for (std::size_t len = 1; len <= max_lhs_ && start + len <= w.size(); ++len)
      if (index_.count(w.substr(start, len))) return false;
  return true;
}

RewriteSystem rules_from_relations(const std::vector<NCPoly> &relations) {
  std::unordered_set<std::string> seen;
  std::unordered_map<Word, NCPoly, WordHash> pivots;
  std::vector<Word> order;
  for (const NCPoly &rel : relations) {
    if (rel.is_zero()) continue;
    if (!seen.insert(rel.str()).second) continue;
    NCPoly row = rel;
    // one descending sweep suffices: pivot rows only contain smaller non-pivot words
    bool first = true;
    Word cursor;
    for (;;) {
      const auto &t = row.terms();
      if (t.empty()) break;
      auto it = first ? t.end() : t.lower_bound(cursor);
      if (it == t.begin()) break;
      --it;
      first = false;
      cursor = it->first;
      auto piv = pivots.find(cursor);
      if (piv != pivots.end()) row -= it->second * piv->second;
    }
    if (row.is_zero()) continue;
    Word lead = row.leading_word();
    Coeff c = row.coeff(lead);
    if (lead.empty())
      throw PresentationError("inconsistent presentation: relations imply " + row.str() + " = 0");
    if (!c.is_unit())
      throw PresentationError("pivot coefficient " + c.str() + " of " + word_str(lead) + " is not invertible");
    row = c.inverse() * row;
    for (auto &[w, p] : pivots) {
      Coeff d = p.coeff(lead);
      if (!d.is_zero()) p -= d * row;
    }
    pivots.emplace(lead, std::move(row));
    order.push_back(lead);
  }
  std::vector<RewriteRule> rules;
  for (const Word &lead : order) {
    NCPoly rhs = pivots[lead];
    rhs.add_term(lead, Coeff(-1));
    rules.push_back({lead, -rhs});
  }
  return RewriteSystem(std::move(rules));
}

namespace {
std::atomic<long> g_default_budget{1000000};
} // namespace

long default_rewrite_budget() { return g_default_budget.load(); }
void set_default_rewrite_budget(long budget) {
  if (budget <= 0) throw std::invalid_argument("rewrite budget must be positive");
  g_default_budget.store(budget);
}

Normalizer::Normalizer(std::shared_ptr<const RewriteSystem> sys, long budget)
    : sys_(std::move(sys)), budget_(budget < 0 ? default_rewrite_budget() : budget) {}

void Normalizer::charge(const Word &w) {
  if (++applications_ > budget_) {
    std::vector<Word> trace = trace_;
    trace.push_back(w);
    applications_ = 0;
    throw BudgetExceeded("rewriting budget of " + std::to_string(budget_) +
                             " rule applications exceeded while reducing " + word_str(w),
                         std::move(trace));
  }
}

NCPoly Normalizer::normal_form(const NCPoly &p) {
  PolyAccumulator acc;
  for (const auto &[w, c] : p.terms()) acc.add(normal_form(w), c);
  return acc.take();
}

const NCPoly &Normalizer::normal_form(const Word &w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (w.size() <= 1) return prefixed(w.empty() ? Letter(0) : w[0], Word());
  Word tail = w.substr(1);
  NCPoly rest = normal_form(tail); // copy: later insertions may rehash
  PolyAccumulator acc;
  for (const auto &[v, c] : rest.terms()) acc.add(prefixed(w[0], v), c);
  return memo_.emplace(w, acc.take()).first->second;
}

// Normal form of a.v where v is already normal; a == 0 means the empty prefix.
const NCPoly &Normalizer::prefixed(Letter a, const Word &v) {
  Word w = a ? Word(1, a) + v : v;
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  const auto &sys = *sys_;
  for (std::size_t len = 1; len <= sys.max_lhs() && len <= w.size(); ++len) {
    const NCPoly *rhs = sys.find(w.substr(0, len));
    if (!rhs) continue;
    charge(w);
    trace_.push_back(w);
    Word rest = w.substr(len);
    PolyAccumulator acc;
    NCPoly r = *rhs;
    for (const auto &[t, c] : r.terms()) acc.add(concat(t, rest), c);
    trace_.pop_back();
    return memo_.emplace(w, acc.take()).first->second;
  }
  return memo_.emplace(w, NCPoly::word(w)).first->second;
}

NCPoly Normalizer::concat(const Word &t, const Word &rest) {
  NCPoly cur = NCPoly::word(rest);
  for (auto l = t.rbegin(); l != t.rend(); ++l) {
    PolyAccumulator acc;
    for (const auto &[v, c] : cur.terms()) acc.add(prefixed(*l, v), c);
    cur = acc.take();
  }
  return cur;
}

std::vector<ConfluenceWitness> confluence_residuals(const RewriteSystem &sys, std::size_t max_len) {
  auto shared = std::make_shared<const RewriteSystem>(sys);
  Normalizer nf(shared);
  std::vector<ConfluenceWitness> out;
  auto check = [&](const Word &w, const NCPoly &one, const NCPoly &two) {
    NCPoly d = nf.normal_form(one) - nf.normal_form(two);
    if (!d.is_zero()) out.push_back({w, d});
  };
  const auto &rules = sys.rules();
  for (const auto &r1 : rules) {
    for (const auto &r2 : rules) {
      // proper overlaps: a suffix of lhs1 equals a prefix of lhs2
      for (std::size_t k = 1; k < r1.lhs.size() && k < r2.lhs.size(); ++k) {
        if (r1.lhs.compare(r1.lhs.size() - k, k, r2.lhs, 0, k) != 0) continue;
        Word w = r1.lhs + r2.lhs.substr(k);
        if (w.size() > max_len) continue;
        NCPoly left = r1.rhs * NCPoly::word(r2.lhs.substr(k));
        NCPoly right = NCPoly::word(r1.lhs.substr(0, r1.lhs.size() - k)) * r2.rhs;
        check(w, left, right);
      }
      // inclusions: lhs2 is a proper factor of lhs1
      if (r2.lhs.size() < r1.lhs.size() && r1.lhs.size() <= max_len) {
        for (std::size_t at = 0; at + r2.lhs.size() <= r1.lhs.size(); ++at) {
          if (r1.lhs.compare(at, r2.lhs.size(), r2.lhs) != 0) continue;
          NCPoly other = NCPoly::word(r1.lhs.substr(0, at)) * r2.rhs *
                         NCPoly::word(r1.lhs.substr(at + r2.lhs.size()));
          check(r1.lhs, r1.rhs, other);
        }
      }
    }
  }
  return out;
}

namespace {

class Completion {
public:
  void push(const NCPoly &p) { queue_.push_back(p); }

  // Normal form by the current rules, largest reducible word first.
  NCPoly reduce(NCPoly p) const {
    for (;;) {
      bool changed = false;
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Word &w = it->first;
        for (std::size_t start = 0; start < w.size() && !changed; ++start)
          for (std::size_t len = 1; len <= max_lhs_ && start + len <= w.size(); ++len) {
            auto r = rules_.find(w.substr(start, len));
            if (r == rules_.end()) continue;
            Coeff c = it->second;
            NCPoly repl = NCPoly::word(w.substr(0, start)) * r->second * NCPoly::word(w.substr(start + len));
            Word old = w;
            p.add_term(old, -c);
            p += c * repl;
            changed = true;
            break;
          }
        if (changed) break;
      }
      if (!changed) return p;
    }
  }

  void drain() {
    while (!queue_.empty()) {
      NCPoly p = reduce(queue_.back());
      queue_.pop_back();
      if (p.is_zero()) continue;
      Word lead = p.leading_word();
      Coeff c = p.coeff(lead);
      if (lead.empty())
        throw PresentationError("inconsistent presentation: relations imply " + p.str() + " = 0");
      if (!c.is_unit())
        throw PresentationError("pivot coefficient " + c.str() + " of " + word_str(lead) + " is not invertible");
      p = c.inverse() * p;
      p.add_term(lead, Coeff(-1));
      NCPoly rhs = -p;
      for (auto it = rules_.begin(); it != rules_.end();) {
        if (it->first.find(lead) != Word::npos) {
          queue_.push_back(NCPoly::word(it->first) - it->second);
          it = rules_.erase(it);
        } else {
          ++it;
        }
      }
      rules_.emplace(lead, rhs);
      max_lhs_ = 0;
      for (const auto &[l, r] : rules_) max_lhs_ = std::max(max_lhs_, l.size());
      for (auto &[l, r] : rules_) r = reduce(r);
    }
  }

  RewriteSystem system() const {
    std::vector<RewriteRule> rules;
    for (const auto &[l, r] : rules_) rules.push_back({l, r});
    return RewriteSystem(std::move(rules));
  }

private:
  std::map<Word, NCPoly, DegLex> rules_;
  std::size_t max_lhs_ = 0;
  std::vector<NCPoly> queue_;
};

} // namespace

RewriteSystem complete_system(const std::vector<NCPoly> &relations, std::size_t max_len, int max_rounds) {
  Completion c;
  for (auto it = relations.rbegin(); it != relations.rend(); ++it) c.push(*it);
  c.drain();
  for (int round = 0; round < max_rounds; ++round) {
    RewriteSystem sys = c.system();
    auto witnesses = confluence_residuals(sys, max_len);
    if (witnesses.empty()) return sys;
    for (const auto &w : witnesses) c.push(w.difference);
    c.drain();
  }
  throw PresentationError("completion did not stabilize within " + std::to_string(max_rounds) + " rounds");
}

} // namespace recalc
