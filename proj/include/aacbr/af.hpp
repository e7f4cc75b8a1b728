#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aacbr/core.hpp"

namespace aacbr {

/// Declaration order is the sort order of arguments inside a graph.
enum class ArgKind { Default, PastCase, NewCase };

/// One argument of a mined framework. Labelled arguments (the default and
/// past cases) carry an outcome; the new case does not.
struct Argument {
  ArgKind kind = ArgKind::PastCase;
  std::string id;
  Characterisation characterisation;
  std::optional<Outcome> outcome;

  bool labelled() const { return kind != ArgKind::NewCase; }

  friend bool operator==(const Argument&, const Argument&) = default;
};

using Attack = std::pair<std::size_t, std::size_t>;  // (attacker, target)

/// An argumentation framework over indexed arguments.
///
/// Arguments are sorted by (kind, id) and attacks lexicographically, so two
/// graphs over the same arguments and attacks compare equal and print the
/// same. There is exactly one default argument and at most one new case.
class ArgGraph {
 public:
  /// Canonicalises `args` and remaps `attacks`, which index into the input
  /// order. Throws Error if the argument invariants do not hold.
  ArgGraph(std::vector<Argument> args, std::vector<Attack> attacks);

  std::size_t size() const { return args_.size(); }
  const std::vector<Argument>& arguments() const { return args_; }
  const Argument& argument(std::size_t i) const { return args_[i]; }
  const std::vector<Attack>& attacks() const { return attacks_; }
  const std::vector<std::size_t>& attackers_of(std::size_t i) const { return attackers_[i]; }
  bool attacks(std::size_t from, std::size_t to) const;

  std::size_t default_index() const { return default_index_; }
  std::optional<std::size_t> new_case_index() const { return new_case_index_; }
  std::optional<std::size_t> find(ArgKind kind, const std::string& id) const;

  /// The past cases (not the default) in argument order.
  std::vector<Case> past_cases() const;
  /// The framework restricted to labelled arguments.
  ArgGraph without_new_case() const;

  friend bool operator==(const ArgGraph&, const ArgGraph&) = default;

 private:
  std::vector<Argument> args_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::size_t default_index_ = 0;
  std::optional<std::size_t> new_case_index_;
};

/// Mines the regular framework from a casebase and an optional new case.
///
/// Between labelled arguments a attacks b iff their outcomes differ,
/// a ⪰ b, and no labelled c with a's outcome sits strictly between them
/// (a ≻ c ≻ b). The new case attacks exactly the labelled arguments it is
/// not at least as specific as, and is itself never attacked.
ArgGraph mine_af(const Casebase& cb, const std::optional<NewCase>& newcase = std::nullopt);

/// Adds `newcase` to a framework over labelled arguments, with attacks from
/// the new case onto every argument irrelevant to it. Any new case already
/// present is replaced.
ArgGraph attach_new_case(const ArgGraph& labelled, const NewCase& newcase);

/// Grounded extension with its construction strata G_0 ⊆ G_1 ⊆ ...
struct Extension {
  std::vector<std::size_t> members;              // sorted argument indices
  std::vector<std::vector<std::size_t>> strata;  // strata.back() == members

  bool contains(std::size_t i) const;
};

/// G_0 is the unattacked arguments, G_{i+1} the arguments G_i defends;
/// stops at the first fixed point. Works on cyclic graphs.
Extension grounded_extension(const ArgGraph& g);

/// True when every attacker of `target` is attacked by some member of `by`.
bool defends(const ArgGraph& g, const std::vector<std::size_t>& by, std::size_t target);

bool is_acyclic(const ArgGraph& g);

inline constexpr std::size_t kStableEnumerationLimit = 20;

/// Every conflict-free set attacking all outside arguments, by subset
/// enumeration. Test oracle; throws TooLarge above kStableEnumerationLimit
/// arguments.
std::vector<std::vector<std::size_t>> stable_extensions_bruteforce(const ArgGraph& g);

/// Graphviz rendering. Nodes are labelled "{f1,f2}:o" ("?" for the new
/// case); the new case is a hexagon and members of `grounded` are filled.
std::string to_dot(const ArgGraph& g, const std::optional<Extension>& grounded = std::nullopt);

}  // namespace aacbr
