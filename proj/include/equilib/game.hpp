#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace equilib {

// One action index per player, in player order.
using PureProfile = std::vector<int>;

// Strictly increasing player indices. Rational coalitions and Byzantine
// sets share this representation.
using Coalition = std::vector<int>;

class GameSpec {
 public:
  GameSpec(std::vector<std::string> players, std::vector<std::vector<std::string>> actions)
      : players_(std::move(players)), actions_(std::move(actions)) {
    if (players_.empty()) throw std::invalid_argument("a game needs at least one player");
    if (actions_.size() != players_.size())
      throw std::invalid_argument("expected one action list per player");
    require_unique(players_, "player names");
    for (const auto& list : actions_) {
      if (list.empty()) throw std::invalid_argument("every player needs at least one action");
      require_unique(list, "action names of one player");
    }
  }

  int num_players() const { return static_cast<int>(players_.size()); }
  int num_actions(int player) const { return static_cast<int>(actions_[player].size()); }
  const std::string& player_name(int player) const { return players_[player]; }
  const std::vector<std::string>& player_names() const { return players_; }
  const std::vector<std::string>& action_names(int player) const { return actions_[player]; }

  // S = prod m_i.
  std::uint64_t profile_count() const {
    std::uint64_t s = 1;
    for (const auto& list : actions_) {
      const auto m = static_cast<std::uint64_t>(list.size());
      if (s > UINT64_MAX / m) throw std::overflow_error("profile count overflows");
      s *= m;
    }
    return s;
  }

  bool valid_profile(const PureProfile& profile) const {
    if (static_cast<int>(profile.size()) != num_players()) return false;
    for (int i = 0; i < num_players(); ++i)
      if (profile[i] < 0 || profile[i] >= num_actions(i)) return false;
    return true;
  }

  bool valid_coalition(const Coalition& coalition) const {
    if (coalition.empty()) return false;
    for (std::size_t j = 0; j < coalition.size(); ++j) {
      if (coalition[j] < 0 || coalition[j] >= num_players()) return false;
      if (j > 0 && coalition[j] <= coalition[j - 1]) return false;
    }
    return true;
  }

  // Position of a profile in enumeration order: the first player's index
  // varies fastest, matching the NFG payoff listing.
  std::uint64_t profile_rank(const PureProfile& profile) const {
    std::uint64_t rank = 0;
    std::uint64_t stride = 1;
    for (int i = 0; i < num_players(); ++i) {
      rank += stride * static_cast<std::uint64_t>(profile[i]);
      stride *= static_cast<std::uint64_t>(num_actions(i));
    }
    return rank;
  }

 private:
  static void require_unique(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& name : names)
      if (!seen.insert(name).second)
        throw std::invalid_argument(std::string(what) + " must be unique: '" + name + "'");
  }

  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
};

// Total, deterministic payoff query. Implementations must be safe for
// concurrent read-only use.
class UtilityOracle {
 public:
  virtual ~UtilityOracle() = default;
  virtual const GameSpec& spec() const = 0;
  virtual Payoff utility(const PureProfile& profile, int player) const = 0;
};

// Dense payoff table, profile-major in enumeration order with the per-player
// values of one profile adjacent (payoffs[rank * n + player]).
class GameTable final : public UtilityOracle {
 public:
  GameTable(GameSpec spec, std::vector<Payoff> payoffs)
      : spec_(std::move(spec)), payoffs_(std::move(payoffs)) {
    const std::uint64_t expected =
        spec_.profile_count() * static_cast<std::uint64_t>(spec_.num_players());
    if (payoffs_.size() != expected)
      throw std::invalid_argument("payoff table size must be n * S");
  }

  const GameSpec& spec() const override { return spec_; }

  Payoff utility(const PureProfile& profile, int player) const override {
    return payoffs_[spec_.profile_rank(profile) * spec_.num_players() + player];
  }

  const std::vector<Payoff>& payoffs() const { return payoffs_; }

 private:
  GameSpec spec_;
  std::vector<Payoff> payoffs_;
};

// Pass-through wrapper counting utility evaluations. The counter measures
// oracle queries, the machine-independent work metric reported by the bench
// harness and analysis reports.
class CountingOracle final : public UtilityOracle {
 public:
  explicit CountingOracle(const UtilityOracle& inner) : inner_(inner) {}

  const GameSpec& spec() const override { return inner_.spec(); }

  Payoff utility(const PureProfile& profile, int player) const override {
    count_.fetch_add(1, std::memory_order_relaxed);
    return inner_.utility(profile, player);
  }

  std::uint64_t evaluations() const { return count_.load(std::memory_order_relaxed); }

 private:
  const UtilityOracle& inner_;
  mutable std::atomic<std::uint64_t> count_{0};
};

// Profiles that agree with `base` outside `free`, in mixed-radix order with
// the first listed free position varying fastest, starting from all-zero
// indices at the free positions. An empty free set yields just `base`.
class DeviationRange {
 public:
  DeviationRange(const GameSpec& spec, PureProfile base, std::vector<int> free)
      : spec_(&spec), base_(std::move(base)), free_(std::move(free)) {
    if (static_cast<int>(base_.size()) != spec.num_players())
      throw std::invalid_argument("base profile length must equal player count");
    for (std::size_t j = 0; j < free_.size(); ++j) {
      if (free_[j] < 0 || free_[j] >= spec.num_players())
        throw std::invalid_argument("free position out of range");
      if (j > 0 && free_[j] <= free_[j - 1])
        throw std::invalid_argument("free positions must be strictly increasing");
    }
  }

  class iterator {
   public:
    using value_type = PureProfile;
    using reference = const PureProfile&;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    const PureProfile& operator*() const { return current_; }

    iterator& operator++() {
      for (std::size_t j = 0; j < free_->size(); ++j) {
        const int pos = (*free_)[j];
        if (++current_[pos] < spec_->num_actions(pos)) return *this;
        current_[pos] = 0;
      }
      done_ = true;
      return *this;
    }

    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class DeviationRange;
    iterator(const GameSpec* spec, const std::vector<int>* free, PureProfile start)
        : spec_(spec), free_(free), current_(std::move(start)) {}

    const GameSpec* spec_;
    const std::vector<int>* free_;
    PureProfile current_;
    bool done_ = false;
  };

  iterator begin() const {
    PureProfile start = base_;
    for (int pos : free_) start[pos] = 0;
    return iterator(spec_, &free_, std::move(start));
  }

  std::default_sentinel_t end() const { return {}; }

 private:
  const GameSpec* spec_;
  PureProfile base_;
  std::vector<int> free_;
};

inline DeviationRange deviations(const GameSpec& spec, PureProfile base, std::vector<int> free) {
  return DeviationRange(spec, std::move(base), std::move(free));
}

// All S profiles in enumeration order.
inline DeviationRange enumerate_profiles(const GameSpec& spec) {
  std::vector<int> all(spec.num_players());
  std::iota(all.begin(), all.end(), 0);
  return DeviationRange(spec, PureProfile(spec.num_players(), 0), std::move(all));
}

// Size-k subsets of a sorted index list, in lexicographic order of member
// lists. Out-of-range sizes give an empty stream.
class CombinationRange {
 public:
  CombinationRange(std::vector<int> pool, int size) : pool_(std::move(pool)), size_(size) {}

  class iterator {
   public:
    using value_type = Coalition;
    using reference = const Coalition&;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    const Coalition& operator*() const { return current_; }

    iterator& operator++() {
      const int k = static_cast<int>(cursor_.size());
      const int n = static_cast<int>(pool_->size());
      int j = k - 1;
      while (j >= 0 && cursor_[j] == n - k + j) --j;
      if (j < 0) {
        done_ = true;
        return *this;
      }
      ++cursor_[j];
      for (int i = j + 1; i < k; ++i) cursor_[i] = cursor_[i - 1] + 1;
      refresh();
      return *this;
    }

    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class CombinationRange;
    iterator(const std::vector<int>* pool, int size, bool done) : pool_(pool), done_(done) {
      if (!done_) {
        cursor_.resize(size);
        std::iota(cursor_.begin(), cursor_.end(), 0);
        refresh();
      }
    }

    void refresh() {
      current_.resize(cursor_.size());
      for (std::size_t i = 0; i < cursor_.size(); ++i) current_[i] = (*pool_)[cursor_[i]];
    }

    const std::vector<int>* pool_;
    std::vector<int> cursor_;  // indices into the pool
    Coalition current_;
    bool done_ = false;
  };

  iterator begin() const {
    const bool empty = size_ < 1 || size_ > static_cast<int>(pool_.size());
    return iterator(&pool_, size_, empty);
  }

  std::default_sentinel_t end() const { return {}; }

 private:
  std::vector<int> pool_;
  int size_;
};

inline CombinationRange coalitions_of_size(std::vector<int> players, int size) {
  return CombinationRange(std::move(players), size);
}

inline std::vector<int> all_players(const GameSpec& spec) {
  std::vector<int> all(spec.num_players());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

// Ascending player indices not in `coalition`. May be empty.
inline std::vector<int> complement(const Coalition& coalition, int num_players) {
  std::vector<int> rest;
  rest.reserve(num_players - coalition.size());
  std::size_t j = 0;
  for (int i = 0; i < num_players; ++i) {
    if (j < coalition.size() && coalition[j] == i) {
      ++j;
    } else {
      rest.push_back(i);
    }
  }
  return rest;
}

// U_C(s) = sum of members' utilities; exact.
inline Payoff coalition_utility(const UtilityOracle& game, const PureProfile& profile,
                                const Coalition& coalition) {
  Payoff sum = 0;
  for (int member : coalition) sum += game.utility(profile, member);
  return sum;
}

// Dense table agreeing with an oracle at every profile.
inline GameTable make_table(const UtilityOracle& game) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();
  std::vector<Payoff> payoffs;
  payoffs.reserve(spec.profile_count() * n);
  for (const PureProfile& profile : enumerate_profiles(spec))
    for (int player = 0; player < n; ++player) payoffs.push_back(game.utility(profile, player));
  return GameTable(spec, std::move(payoffs));
}

}  // namespace equilib
