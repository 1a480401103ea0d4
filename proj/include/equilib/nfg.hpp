#pragma once

// Reader and writer for the Gambit NFG normal-form text format, covering
// both the payoff-list body ("{ 2 2 }" strategy counts followed by n*S
// numbers) and the outcome-list body (named strategies, an outcome table,
// and S 1-based outcome indices where 0 means the all-zero null outcome).
// Payoffs at body position j belong to the j-th profile in enumeration
// order: the first player's strategy varies fastest.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "game.hpp"
#include "rational.hpp"

namespace equilib {

enum class NfgErrorKind {
  bad_header,
  unterminated_string,
  action_list_mismatch,
  payoff_count,
  outcome_index,
  non_numeric_payoff,
  unexpected_token,
  invalid_game,
  game_too_large,
};

inline constexpr std::string_view nfg_error_kind_name(NfgErrorKind kind) {
  switch (kind) {
    case NfgErrorKind::bad_header: return "bad-header";
    case NfgErrorKind::unterminated_string: return "unterminated-string";
    case NfgErrorKind::action_list_mismatch: return "action-list-mismatch";
    case NfgErrorKind::payoff_count: return "payoff-count";
    case NfgErrorKind::outcome_index: return "outcome-index";
    case NfgErrorKind::non_numeric_payoff: return "non-numeric-payoff";
    case NfgErrorKind::unexpected_token: return "unexpected-token";
    case NfgErrorKind::invalid_game: return "invalid-game";
    case NfgErrorKind::game_too_large: return "game-too-large";
  }
  return "?";
}

class NfgError : public std::runtime_error {
 public:
  NfgError(NfgErrorKind kind, int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                           std::string(nfg_error_kind_name(kind)) + ": " + message),
        kind_(kind),
        line_(line),
        column_(column) {}

  NfgErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  NfgErrorKind kind_;
  int line_;
  int column_;
};

struct NfgDocument {
  std::string title;
  std::optional<std::string> comment;
  bool outcome_variant = false;
  GameTable table;
};

namespace nfg_detail {

struct Token {
  enum class Type { lbrace, rbrace, string, atom, end };
  Type type = Type::end;
  std::string text;
  int line = 1;
  int column = 1;
};

// Whitespace and commas both separate tokens; commas carry no meaning.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  const Token& peek() {
    if (!lookahead_) lookahead_ = scan();
    return *lookahead_;
  }

  Token next() {
    if (lookahead_) {
      Token token = std::move(*lookahead_);
      lookahead_.reset();
      return token;
    }
    return scan();
  }

 private:
  Token scan() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n' || text_[pos_] == ','))
      advance();

    Token token;
    token.line = line_;
    token.column = column_;
    if (pos_ >= text_.size()) {
      token.type = Token::Type::end;
      return token;
    }

    const char c = text_[pos_];
    if (c == '{') {
      advance();
      token.type = Token::Type::lbrace;
      token.text = "{";
      return token;
    }
    if (c == '}') {
      advance();
      token.type = Token::Type::rbrace;
      token.text = "}";
      return token;
    }
    if (c == '"') {
      advance();
      std::string value;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        value += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size())
        throw NfgError(NfgErrorKind::unterminated_string, token.line, token.column,
                       "string literal never closes");
      advance();  // closing quote
      token.type = Token::Type::string;
      token.text = std::move(value);
      return token;
    }

    std::string value;
    while (pos_ < text_.size()) {
      const char a = text_[pos_];
      if (a == ' ' || a == '\t' || a == '\r' || a == '\n' || a == ',' || a == '{' || a == '}' ||
          a == '"')
        break;
      value += a;
      advance();
    }
    token.type = Token::Type::atom;
    token.text = std::move(value);
    return token;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::optional<Token> lookahead_;
};

[[noreturn]] inline void fail(NfgErrorKind kind, const Token& at, const std::string& message) {
  throw NfgError(kind, at.line, at.column, message);
}

inline Token expect(Lexer& lexer, Token::Type type, NfgErrorKind kind, const char* what) {
  Token token = lexer.next();
  if (token.type != type) fail(kind, token, std::string("expected ") + what);
  return token;
}

inline Payoff parse_number(const Token& token) {
  if (token.type != Token::Type::atom)
    fail(NfgErrorKind::non_numeric_payoff, token, "expected a number");
  try {
    return parse_payoff(token.text);
  } catch (const std::invalid_argument&) {
    fail(NfgErrorKind::non_numeric_payoff, token, "'" + token.text + "' is not a number");
  }
}

inline long parse_integer(const Token& token, NfgErrorKind kind, const char* what) {
  if (token.type != Token::Type::atom || token.text.empty()) fail(kind, token, what);
  long value = 0;
  for (char c : token.text) {
    if (c < '0' || c > '9') fail(kind, token, std::string(what) + ": '" + token.text + "'");
    if (value > 100000000) fail(kind, token, std::string(what) + ": '" + token.text + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

// Empty names become positional defaults; later duplicates get a numeric
// suffix. Payoff values are untouched, so round-trips stay exact.
inline std::vector<std::string> canonical_names(std::vector<std::string> names,
                                                const std::string& prefix) {
  std::vector<std::string> out;
  std::unordered_set<std::string> used;
  out.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::string name = names[i].empty() ? prefix + std::to_string(i + 1) : names[i];
    std::string candidate = name;
    int suffix = 2;
    while (used.count(candidate)) candidate = name + "#" + std::to_string(suffix++);
    used.insert(candidate);
    out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace nfg_detail

inline NfgDocument parse_nfg_document(std::string_view text) {
  using nfg_detail::Lexer;
  using nfg_detail::Token;
  using nfg_detail::expect;
  using nfg_detail::fail;

  Lexer lexer(text);

  // Header: NFG 1 R|D "title"
  Token word = lexer.next();
  if (word.type != Token::Type::atom || word.text != "NFG")
    fail(NfgErrorKind::bad_header, word, "file must start with 'NFG 1 R'");
  Token version = lexer.next();
  if (version.type != Token::Type::atom || version.text != "1")
    fail(NfgErrorKind::bad_header, version, "unsupported NFG version");
  Token flavor = lexer.next();
  if (flavor.type != Token::Type::atom || (flavor.text != "R" && flavor.text != "D"))
    fail(NfgErrorKind::bad_header, flavor, "payoff type must be R or D");
  Token title = expect(lexer, Token::Type::string, NfgErrorKind::unexpected_token, "a game title");

  // Players.
  Token players_open =
      expect(lexer, Token::Type::lbrace, NfgErrorKind::unexpected_token, "'{' opening player list");
  std::vector<std::string> players;
  while (lexer.peek().type == Token::Type::string) players.push_back(lexer.next().text);
  expect(lexer, Token::Type::rbrace, NfgErrorKind::unexpected_token, "'}' closing player list");
  if (players.empty())
    fail(NfgErrorKind::invalid_game, players_open, "a game needs at least one player");
  const int n = static_cast<int>(players.size());

  // Strategy section: either counts { 2 2 } or per-player name lists.
  Token strategies_open =
      expect(lexer, Token::Type::lbrace, NfgErrorKind::unexpected_token, "'{' opening strategies");
  std::vector<std::vector<std::string>> action_names;  // names variant
  std::vector<long> action_counts;                     // counts variant
  const bool named_strategies = lexer.peek().type == Token::Type::lbrace;
  if (named_strategies) {
    while (lexer.peek().type == Token::Type::lbrace) {
      lexer.next();
      std::vector<std::string> names;
      while (lexer.peek().type == Token::Type::string) names.push_back(lexer.next().text);
      Token close = lexer.next();
      if (close.type != Token::Type::rbrace)
        fail(NfgErrorKind::action_list_mismatch, close, "expected '}' after strategy names");
      if (names.empty())
        fail(NfgErrorKind::action_list_mismatch, close, "player has no strategies");
      action_counts.push_back(static_cast<long>(names.size()));
      action_names.push_back(std::move(names));
    }
  } else {
    while (lexer.peek().type == Token::Type::atom) {
      Token count_token = lexer.next();
      const long count = nfg_detail::parse_integer(count_token, NfgErrorKind::action_list_mismatch,
                                                   "strategy counts must be positive integers");
      if (count < 1)
        fail(NfgErrorKind::action_list_mismatch, count_token, "strategy count must be >= 1");
      action_counts.push_back(count);
    }
  }
  Token strategies_close = lexer.next();
  if (strategies_close.type != Token::Type::rbrace)
    fail(NfgErrorKind::action_list_mismatch, strategies_close, "expected '}' closing strategies");
  if (static_cast<int>(action_counts.size()) != n)
    fail(NfgErrorKind::action_list_mismatch, strategies_open,
         "strategy list covers " + std::to_string(action_counts.size()) + " players, expected " +
             std::to_string(n));

  // Size guard before any table-sized allocation.
  constexpr std::uint64_t kMaxCells = 20ull << 20;  // matches the builtin export guard
  std::uint64_t profile_total = 1;
  for (long count : action_counts) {
    if (profile_total > kMaxCells / static_cast<std::uint64_t>(count))
      fail(NfgErrorKind::game_too_large, strategies_open, "payoff table would be too large");
    profile_total *= static_cast<std::uint64_t>(count);
  }
  if (profile_total > kMaxCells / n)
    fail(NfgErrorKind::game_too_large, strategies_open, "payoff table would be too large");
  const std::uint64_t cell_total = profile_total * static_cast<std::uint64_t>(n);

  if (!named_strategies) {
    action_names.reserve(action_counts.size());
    for (long count : action_counts) {
      std::vector<std::string> names(static_cast<std::size_t>(count));
      for (long a = 0; a < count; ++a) names[a] = std::to_string(a + 1);
      action_names.push_back(std::move(names));
    }
  }

  // GameSpec invariants; duplicate names are canonicalized, not fatal
  GameSpec spec = [&] {
    try {
      std::vector<std::vector<std::string>> canonical;
      canonical.reserve(action_names.size());
      for (auto& names : action_names)
        canonical.push_back(nfg_detail::canonical_names(std::move(names), ""));
      return GameSpec(nfg_detail::canonical_names(std::move(players), "P"), std::move(canonical));
    } catch (const std::invalid_argument& e) {
      fail(NfgErrorKind::invalid_game, strategies_open, e.what());
    }
  }();

  std::optional<std::string> comment;
  if (lexer.peek().type == Token::Type::string) comment = lexer.next().text;

  std::vector<Payoff> payoffs;
  payoffs.reserve(std::min<std::uint64_t>(cell_total, 4096));  // grow with the body actually read
  bool outcome_variant = false;

  if (lexer.peek().type == Token::Type::lbrace) {
    // Outcome list, then S outcome indices.
    outcome_variant = true;
    lexer.next();
    std::vector<std::vector<Payoff>> outcomes;
    while (lexer.peek().type == Token::Type::lbrace) {
      lexer.next();
      expect(lexer, Token::Type::string, NfgErrorKind::unexpected_token, "an outcome name");
      std::vector<Payoff> values;
      while (lexer.peek().type == Token::Type::atom)
        values.push_back(nfg_detail::parse_number(lexer.next()));
      Token close = lexer.next();
      if (close.type != Token::Type::rbrace)
        fail(NfgErrorKind::unexpected_token, close, "expected '}' after outcome payoffs");
      if (static_cast<int>(values.size()) != n)
        fail(NfgErrorKind::payoff_count, close,
             "outcome lists " + std::to_string(values.size()) + " payoffs, expected " +
                 std::to_string(n));
      outcomes.push_back(std::move(values));
    }
    expect(lexer, Token::Type::rbrace, NfgErrorKind::unexpected_token, "'}' closing outcome list");

    std::uint64_t seen = 0;
    while (lexer.peek().type == Token::Type::atom) {
      Token index_token = lexer.next();
      const long index = nfg_detail::parse_integer(index_token, NfgErrorKind::outcome_index,
                                                   "outcome indices must be integers");
      if (seen == profile_total)
        fail(NfgErrorKind::payoff_count, index_token,
             "more than " + std::to_string(profile_total) + " outcome indices");
      if (index < 0 || static_cast<std::size_t>(index) > outcomes.size())
        fail(NfgErrorKind::outcome_index, index_token,
             "outcome index " + std::to_string(index) + " out of range");
      if (index == 0) {
        for (int p = 0; p < n; ++p) payoffs.emplace_back(0);  // null outcome
      } else {
        for (int p = 0; p < n; ++p) payoffs.push_back(outcomes[index - 1][p]);
      }
      ++seen;
    }
    Token tail = lexer.next();
    if (tail.type != Token::Type::end)
      fail(NfgErrorKind::unexpected_token, tail, "unexpected content after outcome indices");
    if (seen != profile_total)
      fail(NfgErrorKind::payoff_count, tail,
           "file lists " + std::to_string(seen) + " outcome indices, expected " +
               std::to_string(profile_total));
  } else {
    // Flat payoff body: n*S numbers.
    while (lexer.peek().type == Token::Type::atom) {
      Token number = lexer.next();
      if (payoffs.size() == cell_total)
        fail(NfgErrorKind::payoff_count, number,
             "more than " + std::to_string(cell_total) + " payoffs");
      payoffs.push_back(nfg_detail::parse_number(number));
    }
    Token tail = lexer.next();
    if (tail.type != Token::Type::end)
      fail(NfgErrorKind::unexpected_token, tail, "unexpected content in payoff body");
    if (payoffs.size() != cell_total)
      fail(NfgErrorKind::payoff_count, tail,
           "file lists " + std::to_string(payoffs.size()) + " payoffs, expected " +
               std::to_string(cell_total));
  }

  return NfgDocument{title.text, std::move(comment), outcome_variant,
                     GameTable(std::move(spec), std::move(payoffs))};
}

inline GameTable parse_nfg(std::string_view text) {
  return std::move(parse_nfg_document(text).table);
}

// Emits the payoff-list variant; integers print bare, other rationals as
// a/b, so parse_nfg(write_nfg(g)) reproduces g exactly.
inline std::string write_nfg(const GameTable& game, const std::string& title) {
  const GameSpec& spec = game.spec();
  const int n = spec.num_players();

  const auto quote = [](const std::string& name) {
    std::string safe = name;
    for (char& c : safe)
      if (c == '"') c = '\'';
    return "\"" + safe + "\"";
  };

  std::string out = "NFG 1 R " + quote(title) + " {";
  for (int i = 0; i < n; ++i) out += " " + quote(spec.player_name(i));
  out += " } {";
  for (int i = 0; i < n; ++i) out += " " + std::to_string(spec.num_actions(i));
  out += " }\n\n";

  const auto& payoffs = game.payoffs();
  for (std::size_t j = 0; j < payoffs.size(); ++j) {
    out += payoff_to_string(payoffs[j]);
    out += (j % n == static_cast<std::size_t>(n) - 1) ? '\n' : ' ';
  }
  return out;
}

}  // namespace equilib
