#include "aacbr/af.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace aacbr {

namespace {

bool arg_less(const Argument& a, const Argument& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.id != b.id) return a.id < b.id;
  if (a.characterisation != b.characterisation) return a.characterisation < b.characterisation;
  return a.outcome < b.outcome;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

ArgGraph::ArgGraph(std::vector<Argument> args, std::vector<Attack> attacks) {
  std::vector<std::size_t> order(args.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return arg_less(args[a], args[b]); });
  std::vector<std::size_t> remap(args.size());
  args_.reserve(args.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    args_.push_back(std::move(args[order[i]]));
  }

  std::size_t defaults = 0;
  std::size_t newcases = 0;
  for (std::size_t i = 0; i < args_.size(); ++i) {
    const auto& a = args_[i];
    if (a.labelled() != a.outcome.has_value())
      throw Error("argument '" + a.id + "' has an outcome iff it is labelled");
    if (a.kind == ArgKind::Default) {
      ++defaults;
      default_index_ = i;
    } else if (a.kind == ArgKind::NewCase) {
      ++newcases;
      new_case_index_ = i;
    }
  }
  if (defaults != 1) throw Error("framework must contain exactly one default argument");
  if (newcases > 1) throw Error("framework may contain at most one new case");

  attacks_.reserve(attacks.size());
  for (auto [from, to] : attacks) {
    if (from >= args_.size() || to >= args_.size())
      throw Error("attack endpoint out of range");
    attacks_.emplace_back(remap[from], remap[to]);
  }
  std::sort(attacks_.begin(), attacks_.end());
  attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());

  attackers_.assign(args_.size(), {});
  for (auto [from, to] : attacks_) attackers_[to].push_back(from);
}

bool ArgGraph::attacks(std::size_t from, std::size_t to) const {
  return std::binary_search(attacks_.begin(), attacks_.end(), Attack{from, to});
}

std::optional<std::size_t> ArgGraph::find(ArgKind kind, const std::string& id) const {
  for (std::size_t i = 0; i < args_.size(); ++i)
    if (args_[i].kind == kind && args_[i].id == id) return i;
  return std::nullopt;
}

std::vector<Case> ArgGraph::past_cases() const {
  std::vector<Case> out;
  for (const auto& a : args_)
    if (a.kind == ArgKind::PastCase) out.push_back(Case{a.id, a.characterisation, *a.outcome});
  return out;
}

ArgGraph ArgGraph::without_new_case() const {
  if (!new_case_index_) return *this;
  const std::size_t skip = *new_case_index_;
  std::vector<Argument> args;
  for (std::size_t i = 0; i < args_.size(); ++i)
    if (i != skip) args.push_back(args_[i]);
  auto shift = [skip](std::size_t i) { return i > skip ? i - 1 : i; };
  std::vector<Attack> attacks;
  for (auto [from, to] : attacks_)
    if (from != skip && to != skip) attacks.emplace_back(shift(from), shift(to));
  return ArgGraph(std::move(args), std::move(attacks));
}

ArgGraph mine_af(const Casebase& cb, const std::optional<NewCase>& newcase) {
  std::vector<Argument> args;
  args.reserve(cb.size() + 2);
  const auto& d = cb.default_case();
  args.push_back({ArgKind::Default, d.id, d.characterisation, d.outcome});
  for (const auto& c : cb.cases())
    args.push_back({ArgKind::PastCase, c.id, c.characterisation, c.outcome});

  const std::size_t n = args.size();
  std::vector<char> ge(n * n);
  std::vector<char> strict(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ge[i * n + j] = geq(args[i].characterisation, args[j].characterisation);
      strict[i * n + j] = ge[i * n + j] && args[i].characterisation != args[j].characterisation;
    }

  // O(n^3): pairwise candidates, each checked for a same-outcome blocker.
  std::vector<Attack> attacks;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || args[a].outcome == args[b].outcome || !ge[a * n + b]) continue;
      bool blocked = false;
      for (std::size_t c = 0; c < n && !blocked; ++c)
        blocked = args[c].outcome == args[a].outcome && strict[a * n + c] && strict[c * n + b];
      if (!blocked) attacks.emplace_back(a, b);
    }
  }

  ArgGraph labelled(std::move(args), std::move(attacks));
  if (!newcase) return labelled;
  return attach_new_case(labelled, *newcase);
}

ArgGraph attach_new_case(const ArgGraph& labelled, const NewCase& newcase) {
  const ArgGraph base = labelled.without_new_case();
  std::vector<Argument> args = base.arguments();
  std::vector<Attack> attacks = base.attacks();
  const std::size_t probe = args.size();
  args.push_back({ArgKind::NewCase, newcase.id.empty() ? "new" : newcase.id,
                  newcase.characterisation, std::nullopt});
  for (std::size_t i = 0; i < probe; ++i)
    if (irrelevant_to(newcase.characterisation, args[i].characterisation))
      attacks.emplace_back(probe, i);
  return ArgGraph(std::move(args), std::move(attacks));
}

bool Extension::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool defends(const ArgGraph& g, const std::vector<std::size_t>& by, std::size_t target) {
  std::vector<char> in(g.size());
  for (auto i : by) in[i] = 1;
  for (auto attacker : g.attackers_of(target)) {
    const auto& counter = g.attackers_of(attacker);
    if (std::none_of(counter.begin(), counter.end(), [&](std::size_t c) { return in[c]; }))
      return false;
  }
  return true;
}

Extension grounded_extension(const ArgGraph& g) {
  const std::size_t n = g.size();
  Extension ext;

  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i)
    if (g.attackers_of(i).empty()) current.push_back(i);
  ext.strata.push_back(current);

  for (;;) {
    std::vector<char> in(n);
    for (auto i : current) in[i] = 1;
    std::vector<char> countered(n);  // attacked by the current stratum
    for (auto [from, to] : g.attacks())
      if (in[from]) countered[to] = 1;

    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& att = g.attackers_of(i);
      if (std::all_of(att.begin(), att.end(), [&](std::size_t a) { return countered[a]; }))
        next.push_back(i);
    }
    if (next == current) break;
    current = std::move(next);
    ext.strata.push_back(current);
  }
  ext.members = current;
  return ext;
}

bool is_acyclic(const ArgGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [from, to] : g.attacks()) out[from].push_back(to);

  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(n, kWhite);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, next edge)
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != kWhite) continue;
    colour[root] = kGrey;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [node, edge] = stack.back();
      if (edge == out[node].size()) {
        colour[node] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t next = out[node][edge++];
      if (colour[next] == kGrey) return false;
      if (colour[next] == kWhite) {
        colour[next] = kGrey;
        stack.emplace_back(next, 0);
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> stable_extensions_bruteforce(const ArgGraph& g) {
  const std::size_t n = g.size();
  if (n > kStableEnumerationLimit)
    throw TooLarge("stable enumeration limited to " + std::to_string(kStableEnumerationLimit) +
                   " arguments, got " + std::to_string(n));

  std::vector<std::uint32_t> attacked_by(n);  // bitmask of attackers
  std::vector<std::uint32_t> attacks_of(n);   // bitmask of targets
  for (auto [from, to] : g.attacks()) {
    attacked_by[to] |= std::uint32_t{1} << from;
    attacks_of[from] |= std::uint32_t{1} << to;
  }

  std::vector<std::vector<std::size_t>> out;
  const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t set = 0;; ++set) {
    std::uint32_t hit = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (set >> i & 1) hit |= attacks_of[i];
    // Conflict-free and every outsider attacked.
    if ((hit & set) == 0 && (hit | set) == full) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n; ++i)
        if (set >> i & 1) members.push_back(i);
      out.push_back(std::move(members));
    }
    if (set == full) break;
  }
  return out;
}

std::string to_dot(const ArgGraph& g, const std::optional<Extension>& grounded) {
  std::ostringstream os;
  auto node_name = [&](std::size_t i) {
    const auto& a = g.argument(i);
    switch (a.kind) {
      case ArgKind::Default: return quote("default:" + a.id);
      case ArgKind::PastCase: return quote("case:" + a.id);
      case ArgKind::NewCase: break;
    }
    return quote("new:" + a.id);
  };

  os << "digraph aacbr {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& a = g.argument(i);
    const std::string label =
        a.characterisation.to_string() + ":" + (a.outcome ? a.outcome->label() : "?");
    os << "  " << node_name(i) << " [label=" << quote(label)
       << ", shape=" << (a.kind == ArgKind::NewCase ? "hexagon" : "ellipse");
    if (grounded && grounded->contains(i)) os << ", style=filled, fillcolor=gray";
    os << "];\n";
  }
  for (auto [from, to] : g.attacks())
    os << "  " << node_name(from) << " -> " << node_name(to) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace aacbr
