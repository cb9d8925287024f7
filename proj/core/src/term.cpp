#include "decpi/term.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "decpi/error.hpp"

namespace decpi {

bool is_valid_var_name(std::string_view name) noexcept {
  if (name.empty() || name.front() == '-') return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '=' ||
           c == '#' || static_cast<unsigned char>(c) < 0x20;
  });
}

Var::Var(std::string name) : name_(std::move(name)) {
  if (!is_valid_var_name(name_)) {
    throw std::invalid_argument("invalid variable name '" + name_ + "'");
  }
}

namespace {

// Sorts and merges duplicates; returns false on a contradictory pair.
bool normalize(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].var == lits[i - 1].var) return false;
  }
  return true;
}

struct VarLess {
  bool operator()(const Literal& l, const Var& v) const { return l.var < v; }
  bool operator()(const Var& v, const Literal& l) const { return v < l.var; }
};

// Walks the characters of a term's printed form.
class PrintedCursor {
 public:
  explicit PrintedCursor(const Term& t) : lits_(t.literals()) {}

  // -1 once exhausted.
  int next() noexcept {
    while (lit_ < lits_.size()) {
      const Literal& l = lits_[lit_];
      const std::string& name = l.var.name();
      const std::size_t prefix = l.positive ? 0 : 1;
      const std::size_t len = prefix + name.size();
      if (pos_ < len) {
        const std::size_t p = pos_++;
        if (p < prefix) return '-';
        return static_cast<unsigned char>(name[p - prefix]);
      }
      pos_ = 0;
      ++lit_;
      if (lit_ < lits_.size()) return ' ';
    }
    return -1;
  }

 private:
  std::span<const Literal> lits_;
  std::size_t lit_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

Term::Term(std::initializer_list<Literal> literals) : Term(std::vector<Literal>(literals)) {}

Term::Term(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (!normalize(literals_)) {
    throw std::invalid_argument("contradictory literals in term");
  }
}

std::optional<Term> Term::make(std::vector<Literal> literals) {
  if (!normalize(literals)) return std::nullopt;
  Term t;
  t.literals_ = std::move(literals);
  return t;
}

std::optional<bool> Term::value_of(const Var& v) const {
  auto it = std::lower_bound(literals_.begin(), literals_.end(), v, VarLess{});
  if (it == literals_.end() || it->var != v) return std::nullopt;
  return it->positive;
}

bool Term::contains(const Literal& l) const {
  auto value = value_of(l.var);
  return value && *value == l.positive;
}

bool Term::entails(const Term& other) const {
  return std::includes(literals_.begin(), literals_.end(), other.literals_.begin(),
                       other.literals_.end());
}

std::optional<Term> Term::conjoin(const Term& other) const {
  Term out;
  out.literals_.reserve(literals_.size() + other.literals_.size());
  auto a = literals_.begin();
  auto b = other.literals_.begin();
  while (a != literals_.end() && b != other.literals_.end()) {
    if (a->var < b->var) {
      out.literals_.push_back(*a++);
    } else if (b->var < a->var) {
      out.literals_.push_back(*b++);
    } else {
      if (a->positive != b->positive) return std::nullopt;
      out.literals_.push_back(*a++);
      ++b;
    }
  }
  out.literals_.insert(out.literals_.end(), a, literals_.end());
  out.literals_.insert(out.literals_.end(), b, other.literals_.end());
  return out;
}

Term Term::with(const Literal& l) const {
  Term out = *this;
  auto it = std::lower_bound(out.literals_.begin(), out.literals_.end(), l.var, VarLess{});
  if (it != out.literals_.end() && it->var == l.var) {
    if (it->positive != l.positive) throw std::invalid_argument("contradictory literal");
    return out;
  }
  out.literals_.insert(it, l);
  return out;
}

Term Term::without(const Var& v) const {
  Term out;
  out.literals_.reserve(literals_.size());
  for (const Literal& l : literals_) {
    if (l.var != v) out.literals_.push_back(l);
  }
  return out;
}

Term Term::restricted_to(std::span<const Var> sorted_vars) const {
  Term out;
  auto v = sorted_vars.begin();
  for (const Literal& l : literals_) {
    while (v != sorted_vars.end() && *v < l.var) ++v;
    if (v == sorted_vars.end()) break;
    if (*v == l.var) out.literals_.push_back(l);
  }
  return out;
}

std::optional<Term> Term::conditioned(const Literal& l) const {
  auto value = value_of(l.var);
  if (!value) return *this;
  if (*value != l.positive) return std::nullopt;
  return without(l.var);
}

std::string Term::to_string() const {
  std::string out;
  for (const Literal& l : literals_) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

int compare_printed(const Term& a, const Term& b) noexcept {
  PrintedCursor ca(a);
  PrintedCursor cb(b);
  for (;;) {
    const int x = ca.next();
    const int y = cb.next();
    if (x != y) return x < y ? -1 : 1;
    if (x < 0) return 0;
  }
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Literal& l : t) {
    h ^= std::hash<std::string>{}(l.var.name()) + (l.positive ? 0x9e3779b97f4a7c15ULL : 0x2545f4914f6cdd1dULL);
    h *= 0x100000001b3ULL;
  }
  return h;
}

TermSet::TermSet(std::initializer_list<Term> terms) : TermSet(std::vector<Term>(terms)) {}

TermSet::TermSet(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), PrintedLess{});
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

bool TermSet::insert(Term t) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, PrintedLess{});
  if (it != terms_.end() && *it == t) return false;
  terms_.insert(it, std::move(t));
  return true;
}

bool TermSet::erase(const Term& t) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, PrintedLess{});
  if (it == terms_.end() || *it != t) return false;
  terms_.erase(it);
  return true;
}

bool TermSet::contains(const Term& t) const {
  return std::binary_search(terms_.begin(), terms_.end(), t, PrintedLess{});
}

TermSet TermSet::maximal() const {
  // Bucket by size: a term can only strictly entail a shorter one.
  std::vector<const Term*> by_size;
  by_size.reserve(terms_.size());
  for (const Term& t : terms_) by_size.push_back(&t);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Term* a, const Term* b) { return a->size() < b->size(); });

  std::vector<const Term*> kept;
  kept.reserve(by_size.size());
  for (const Term* t : by_size) {
    bool dominated = false;
    for (const Term* k : kept) {
      if (k->size() >= t->size()) break;
      if (t->entails(*k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(t);
  }
  std::vector<Term> out;
  out.reserve(kept.size());
  for (const Term* t : kept) out.push_back(*t);
  return TermSet(std::move(out));
}

bool TermSet::subsumes(const Term& t) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& s) { return t.entails(s); });
}

TermSet TermSet::minus(const TermSet& other) const {
  TermSet out;
  std::set_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                      std::back_inserter(out.terms_), PrintedLess{});
  return out;
}

bool TermSet::is_subset_of(const TermSet& other) const {
  return std::includes(other.terms_.begin(), other.terms_.end(), terms_.begin(), terms_.end(),
                       PrintedLess{});
}

std::string TermSet::to_string() const {
  std::string out;
  for (const Term& t : terms_) {
    out += t.to_string();
    out += '\n';
  }
  return out;
}

std::optional<bool> Assignment::get(const Var& v) const {
  auto it = values_.find(v);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

bool Assignment::at(const Var& v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw MissingVariable("assignment has no value for '" + v.name() + "'");
  return it->second;
}

bool Assignment::covers(std::span<const Var> vars) const {
  return std::all_of(vars.begin(), vars.end(), [&](const Var& v) { return values_.contains(v); });
}

bool Assignment::satisfies(const Term& t) const {
  return std::all_of(t.begin(), t.end(), [&](const Literal& l) {
    auto value = get(l.var);
    return value && *value == l.positive;
  });
}

std::vector<Var> Assignment::vars() const {
  std::vector<Var> out;
  out.reserve(values_.size());
  for (const auto& [v, _] : values_) out.push_back(v);
  return out;
}

Term Assignment::canonical_term(std::span<const Var> vars) const {
  std::vector<Literal> lits;
  lits.reserve(vars.size());
  for (const Var& v : vars) lits.push_back({v, at(v)});
  return Term(std::move(lits));
}

std::string Assignment::to_string() const {
  std::string out;
  for (const auto& [v, value] : values_) {
    if (!out.empty()) out += ',';
    out += v.name();
    out += value ? "=1" : "=0";
  }
  return out;
}

std::vector<Var> sorted_vars(std::vector<Var> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool is_sorted_subset(std::span<const Var> sub, std::span<const Var> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool sorted_disjoint(std::span<const Var> a, std::span<const Var> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

bool sorted_contains(std::span<const Var> vars, const Var& v) {
  return std::binary_search(vars.begin(), vars.end(), v);
}

}  // namespace decpi
