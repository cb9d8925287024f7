#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace decpi {

/// True for a nonempty token without whitespace that does not start with '-'.
bool is_valid_var_name(std::string_view name) noexcept;

/// A named Boolean variable. Ordered lexicographically by name.
class Var {
 public:
  Var() = default;
  /// Throws std::invalid_argument when `name` is not a valid variable name.
  explicit Var(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Var&, const Var&) = default;
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  std::string name_;
};

struct Literal {
  Var var;
  bool positive = true;

  Literal negated() const { return {var, !positive}; }
  std::string to_string() const { return positive ? var.name() : "-" + var.name(); }

  friend bool operator==(const Literal&, const Literal&) = default;
  // Same variable: the negative literal sorts first.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.var <=> b.var; c != 0) return c;
    return a.positive <=> b.positive;
  }
};

inline Literal pos(std::string name) { return {Var(std::move(name)), true}; }
inline Literal neg(std::string name) { return {Var(std::move(name)), false}; }

/// Conjunction of literals on distinct variables, stored sorted by variable.
/// The default-constructed term is the empty term.
class Term {
 public:
  Term() = default;
  /// Throws std::invalid_argument on a contradictory pair; duplicates merge.
  Term(std::initializer_list<Literal> literals);
  explicit Term(std::vector<Literal> literals);

  /// nullopt when `literals` contains both polarities of some variable.
  static std::optional<Term> make(std::vector<Literal> literals);

  std::span<const Literal> literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }
  bool empty() const noexcept { return literals_.empty(); }
  auto begin() const noexcept { return literals_.begin(); }
  auto end() const noexcept { return literals_.end(); }

  /// Polarity of `v` in this term, nullopt if `v` does not occur.
  std::optional<bool> value_of(const Var& v) const;
  bool mentions(const Var& v) const { return value_of(v).has_value(); }
  bool contains(const Literal& l) const;

  /// `*this ⊨ other`, i.e. other's literals are a subset of ours.
  bool entails(const Term& other) const;

  /// nullopt when the conjunction is contradictory.
  std::optional<Term> conjoin(const Term& other) const;
  /// Conjoin with a literal whose variable does not already occur.
  Term with(const Literal& l) const;
  Term without(const Var& v) const;

  /// Keep only the literals whose variable is in `sorted_vars`.
  Term restricted_to(std::span<const Var> sorted_vars) const;
  /// t|l: nullopt when the term contains the negation of `l` (t|l = 0).
  std::optional<Term> conditioned(const Literal& l) const;

  /// Space-separated literals in variable order; "" for the empty term.
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::vector<Literal> literals_;
};

/// Three-way comparison of the printed forms of two terms, without printing.
int compare_printed(const Term& a, const Term& b) noexcept;

struct PrintedLess {
  bool operator()(const Term& a, const Term& b) const noexcept {
    return compare_printed(a, b) < 0;
  }
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

/// Deduplicated set of terms iterated in printed lexicographic order.
class TermSet {
 public:
  TermSet() = default;
  TermSet(std::initializer_list<Term> terms);
  explicit TermSet(std::vector<Term> terms);

  bool insert(Term t);
  bool erase(const Term& t);
  bool contains(const Term& t) const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// max(S, ⊨): drop every term that strictly entails another member.
  TermSet maximal() const;
  /// True when some member is entailed by `t` (i.e. is a subset of `t`).
  bool subsumes(const Term& t) const;

  /// Members of *this that are not in `other`, in order.
  TermSet minus(const TermSet& other) const;
  bool is_subset_of(const TermSet& other) const;

  /// One term per line, each line newline-terminated.
  std::string to_string() const;

  friend bool operator==(const TermSet&, const TermSet&) = default;

 private:
  std::vector<Term> terms_;
};

/// Total map from a declared variable set to {0,1}.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const Var, bool>> values) : values_(values) {}

  void set(const Var& v, bool value) { values_[v] = value; }
  std::optional<bool> get(const Var& v) const;
  /// Throws MissingVariable when `v` is not assigned.
  bool at(const Var& v) const;
  bool covers(std::span<const Var> vars) const;
  bool satisfies(const Term& t) const;
  std::size_t size() const noexcept { return values_.size(); }
  std::vector<Var> vars() const;
  const std::map<Var, bool>& values() const noexcept { return values_; }

  /// The term whose unique model (over `vars`) agrees with this assignment.
  Term canonical_term(std::span<const Var> vars) const;

  /// Comma-separated `name=0|1` pairs in variable order.
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<Var, bool> values_;
};

/// Sorted, deduplicated copy.
std::vector<Var> sorted_vars(std::vector<Var> vars);
bool is_sorted_subset(std::span<const Var> sub, std::span<const Var> super);
bool sorted_disjoint(std::span<const Var> a, std::span<const Var> b);
bool sorted_contains(std::span<const Var> vars, const Var& v);

}  // namespace decpi

template <>
struct std::hash<decpi::Var> {
  std::size_t operator()(const decpi::Var& v) const noexcept {
    return std::hash<std::string>{}(v.name());
  }
};
