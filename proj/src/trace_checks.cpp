#include "alphadom/trace_checks.hpp"

#include <cstddef>

#include "alphadom/alpha_mds.hpp"

namespace alphadom {

namespace {

void set_detail(std::string* detail, const std::string& msg) {
  if (detail) *detail = msg;
}

}  // namespace

bool replay_matches(const Trace& t, std::string* detail) {
  Configuration c = t.initial;
  for (const MoveRecord& mv : t.moves) {
    if (mv.node < 0 || mv.node >= c.n()) {
      set_detail(detail, "move names node " + std::to_string(mv.node) + " outside [0, " +
                             std::to_string(c.n()) + ")");
      return false;
    }
    if (c.state(mv.node) != mv.pre) {
      set_detail(detail, "step " + std::to_string(mv.step) + ": node " +
                             std::to_string(mv.node) + " pre-state mismatch");
      return false;
    }
    c.set_state(mv.node, mv.post);
  }
  if (c != t.final_config) {
    set_detail(detail, "replayed configuration differs from recorded final");
    return false;
  }
  return true;
}

bool out_ratio_monotone(const Graph& g, const Trace& t, const Alpha& alpha,
                        std::string* detail) {
  Configuration c = t.initial;
  std::vector<char> reached(static_cast<std::size_t>(g.n()), 0);
  const auto scan = [&](long long step) {
    for (int v = 0; v < g.n(); ++v) {
      if (c.state(v) != NodeState::Out) continue;
      const bool at_least = !(exp1(g, c, v) < alpha.value());
      auto& flag = reached[static_cast<std::size_t>(v)];
      if (at_least) {
        flag = 1;
      } else if (flag) {
        set_detail(detail, "node " + std::to_string(v) + " fell below alpha after step " +
                               std::to_string(step));
        return false;
      }
    }
    return true;
  };
  if (!scan(-1)) return false;
  std::size_t i = 0;
  while (i < t.moves.size()) {
    const long long s = t.moves[i].step;
    while (i < t.moves.size() && t.moves[i].step == s) {
      c.set_state(t.moves[i].node, t.moves[i].post);
      ++i;
    }
    if (!scan(s)) return false;
  }
  return true;
}

bool no_rejoin_after_leave(const Trace& t, std::string* detail) {
  std::vector<char> left;
  for (const MoveRecord& mv : t.moves) {
    if (mv.node >= static_cast<int>(left.size()))
      left.resize(static_cast<std::size_t>(mv.node) + 1, 0);
    auto& flag = left[static_cast<std::size_t>(mv.node)];
    if (mv.rule == "R2") flag = 1;
    if (mv.rule == "R1" && flag) {
      set_detail(detail, "node " + std::to_string(mv.node) + " rejoined at step " +
                             std::to_string(mv.step));
      return false;
    }
  }
  return true;
}

bool move_sequences_canonical(const Trace& t, int n, std::string* detail) {
  // Per node, track the longest valid prefix seen: 0 = empty, 1 = R1,
  // 2 = R2 or R1 R2 (both terminal).
  std::vector<char> phase(static_cast<std::size_t>(n), 0);
  long long core_moves = 0;
  for (const MoveRecord& mv : t.moves) {
    if (mv.rule != "R1" && mv.rule != "R2") continue;
    ++core_moves;
    auto& ph = phase[static_cast<std::size_t>(mv.node)];
    if (mv.rule == "R1") {
      if (ph != 0) {
        set_detail(detail, "node " + std::to_string(mv.node) +
                               " executed R1 after an earlier move (step " +
                               std::to_string(mv.step) + ")");
        return false;
      }
      ph = 1;
    } else {
      if (ph == 2) {
        set_detail(detail, "node " + std::to_string(mv.node) +
                               " executed R2 twice (step " + std::to_string(mv.step) + ")");
        return false;
      }
      ph = 2;
    }
  }
  if (core_moves > 2LL * n) {
    set_detail(detail, "trace has " + std::to_string(core_moves) + " moves, above 2n = " +
                           std::to_string(2LL * n));
    return false;
  }
  return true;
}

bool movers_pairwise_independent(const Graph& g, const Trace& t, std::string* detail) {
  std::size_t i = 0;
  while (i < t.moves.size()) {
    const long long s = t.moves[i].step;
    std::vector<int> movers;
    while (i < t.moves.size() && t.moves[i].step == s) {
      movers.push_back(t.moves[i].node);
      ++i;
    }
    for (std::size_t a = 0; a < movers.size(); ++a)
      for (std::size_t b = a + 1; b < movers.size(); ++b)
        if (g.has_edge(movers[a], movers[b])) {
          set_detail(detail, "step " + std::to_string(s) + ": adjacent movers " +
                                 std::to_string(movers[a]) + " and " +
                                 std::to_string(movers[b]));
          return false;
        }
  }
  return true;
}

}  // namespace alphadom
