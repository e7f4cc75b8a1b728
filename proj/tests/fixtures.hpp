#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aacbr/af.hpp"
#include "aacbr/core.hpp"

namespace aacbr::testing {

inline const Outcome kPlus{"+"};
inline const Outcome kMinus{"-"};

inline Case make_case(std::string id, Characterisation c, const Outcome& o) {
  return Case{std::move(id), std::move(c), o};
}

inline Casebase casebase(std::vector<Case> cases) {
  return Casebase::validate(std::move(cases), Case{"default", {}, kMinus}, kPlus);
}

// Legal running example, default outcome "-" (not guilty).
inline Casebase legal_initial() { return casebase({make_case("hm", {"hm"}, kPlus)}); }

inline Casebase legal_revised() {
  return casebase({make_case("hm", {"hm"}, kPlus), make_case("hmsd", {"hm", "sd"}, kMinus)});
}

// The four-case counterexample casebase and its extension by ({a,b,c},+).
inline Casebase counterexample() {
  return casebase({
      make_case("a", {"a"}, kPlus),
      make_case("c", {"c"}, kPlus),
      make_case("ab", {"a", "b"}, kMinus),
      make_case("cz", {"c", "z"}, kMinus),
  });
}

inline Case abc_plus() { return make_case("abc", {"a", "b", "c"}, kPlus); }

inline Casebase counterexample_extended() { return counterexample().with_case(abc_plus()); }

// Attack as characterisation/outcome text pairs, so tests can state edges
// the way figures draw them: "{a,b}:-" -> "{a}:+".
using Edge = std::pair<std::string, std::string>;

inline std::string node_label(const Argument& a) {
  return a.characterisation.to_string() + ":" + (a.outcome ? a.outcome->label() : "?");
}

inline std::set<Edge> edges(const ArgGraph& g) {
  std::set<Edge> out;
  for (auto [from, to] : g.attacks())
    out.emplace(node_label(g.argument(from)), node_label(g.argument(to)));
  return out;
}

inline std::set<std::string> labels_of(const ArgGraph& g, const std::vector<std::size_t>& members) {
  std::set<std::string> out;
  for (auto i : members) out.insert(node_label(g.argument(i)));
  return out;
}

}  // namespace aacbr::testing
