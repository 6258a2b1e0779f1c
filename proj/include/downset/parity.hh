#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <downset/antichain.hh>
#include <downset/backend.hh>

// Max-parity games solved through downsets of visit counters.
namespace downset::parity {
  enum class player : std::uint8_t { even = 0, odd = 1 };

  std::string_view name (player p);

  struct vertex {
      player owner = player::even;
      std::uint32_t priority = 0;
      std::vector<std::uint32_t> succ;
      std::string label;
  };

  class game {
    public:
      game () = default;
      // Throws unless every vertex has a successor and all ids exist.
      explicit game (std::vector<vertex> vertices);

      std::size_t size () const noexcept { return vs.size (); }
      const vertex& operator[] (std::size_t v) const { return vs[v]; }
      const std::vector<vertex>& vertices () const noexcept { return vs; }
      const std::vector<std::uint32_t>& predecessors (std::size_t v) const { return preds[v]; }
      std::uint32_t max_priority () const noexcept { return max_prio; }

    private:
      std::vector<vertex> vs;
      std::vector<std::vector<std::uint32_t>> preds;
      std::uint32_t max_prio = 0;
  };

  // pgsolver text: optional `parity N;` header, then records
  // `id priority owner succ,succ,...[ "name"];`.  Ids must be 0..n-1.
  game parse_pgsolver (std::string_view text);
  game load_pgsolver (const std::string& path);
  std::string format_pgsolver (const game& g);

  // Counter space of a game: d = ceil(max priority / 2) dimensions (at least
  // one), dimension i counting visits to priority 2i-1, capped by the number
  // n_i of such vertices.  Counters c_i in [-1, n_i] are stored as c_i + 1.
  struct counter_space {
      std::size_t d;
      std::vector<value_type> caps;  // n_1..n_d (logical)

      explicit counter_space (const game& g);
  };

  // Counters before entering a vertex of priority p, given counters c after.
  vector bwd (const vector& stored, std::uint32_t priority, const counter_space& cs);

  using counter_map = std::vector<antichain>;

  counter_map initial_map (const game& g);

  struct step_result {
      counter_map nu;
      std::vector<std::uint32_t> changed;
  };
  // One simultaneous refinement of every vertex.
  step_result cpre_step (const counter_map& mu, const game& g, backend b = backend::list);

  enum class order { forward, reverse };

  struct solution {
      std::vector<player> winner;
      std::size_t iterations = 0;  // vertex updates evaluated
      counter_map fixpoint;
  };
  solution solve (const game& g, backend b = backend::list, order o = order::forward);

  // Even-winning test on a fixpoint entry: some counter vector is nonnegative.
  bool has_nonnegative (const antichain& a);

  // Successor chosen at an even-owned, even-winning vertex; throws otherwise.
  std::uint32_t strategy_at (const game& g, const solution& s, std::uint32_t u);
  // The choice at every even-owned, even-winning vertex, nullopt elsewhere.
  std::vector<std::optional<std::uint32_t>> synthesize_even_strategy (const game& g, const solution& s);

  // Classic recursive attractor algorithm.
  std::vector<player> zielonka (const game& g);

  // Fixing `strategy` for Even, checks that the winning region is closed and
  // that every cycle inside it has an even maximal priority.
  bool check_even_strategy (const game& g, const std::vector<player>& winner,
                            const std::vector<std::optional<std::uint32_t>>& strategy);
}
