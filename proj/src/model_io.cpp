#include "tazone/model_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace tazone {

namespace {

enum class TokenKind { kWord, kNumber, kArrow, kAnd, kOperator };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;
};

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t column = i + 1;
    if (c == '#')
      break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (word_start(c)) {
      std::size_t j = i;
      while (j < line.size() && word_char(line[j]))
        ++j;
      tokens.push_back({TokenKind::kWord, std::string(line.substr(i, j - i)), column});
      i = j;
    } else if (digit(c) || (c == '-' && i + 1 < line.size() && digit(line[i + 1]))) {
      std::size_t j = i + 1;
      while (j < line.size() && (digit(line[j]) || line[j] == '.'))
        ++j;
      tokens.push_back({TokenKind::kNumber, std::string(line.substr(i, j - i)), column});
      i = j;
    } else if (line.substr(i, 2) == "->") {
      tokens.push_back({TokenKind::kArrow, "->", column});
      i += 2;
    } else if (line.substr(i, 2) == "&&") {
      tokens.push_back({TokenKind::kAnd, "&&", column});
      i += 2;
    } else if (line.substr(i, 2) == "<=" || line.substr(i, 2) == ">=" || line.substr(i, 2) == "==") {
      tokens.push_back({TokenKind::kOperator, std::string(line.substr(i, 2)), column});
      i += 2;
    } else if (c == '<' || c == '>') {
      tokens.push_back({TokenKind::kOperator, std::string(1, c), column});
      ++i;
    } else {
      throw ParseError(line_no, column, std::string("unexpected character '") + c + "'");
    }
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Automaton run() {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos)
        end = text_.size();
      std::string_view line = text_.substr(start, end - start);
      if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
      ++line_no;
      line_ = line_no;
      tokens_ = tokenize(line, line_no);
      pos_ = 0;
      end_column_ = line.size() + 1;
      if (!tokens_.empty())
        directive();
      start = end + 1;
    }
    const std::size_t last = std::max<std::size_t>(line_no, 1);
    if (!clocks_declared_)
      throw ParseError(last, 1, "no clocks declaration");
    if (!initial_)
      throw ParseError(last, 1, "no initial state");
    try {
      return Automaton(states_, *initial_, accepting_, clocks_, transitions_);
    } catch (const InvalidAutomaton& e) {
      throw ParseError(last, 1, e.what());
    }
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& message) const { throw ParseError(line_, column, message); }

  bool at_end() const { return pos_ >= tokens_.size(); }
  std::size_t column() const { return at_end() ? end_column_ : tokens_[pos_].column; }

  const Token& expect(TokenKind kind, const char* what) {
    if (at_end() || tokens_[pos_].kind != kind)
      fail(column(), std::string("expected ") + what);
    return tokens_[pos_++];
  }

  bool accept_word(std::string_view word) {
    if (!at_end() && tokens_[pos_].kind == TokenKind::kWord && tokens_[pos_].text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  void directive() {
    const Token& head = expect(TokenKind::kWord, "a directive");
    if (head.text == "clocks")
      clocks_directive(head);
    else if (head.text == "state")
      state_directive();
    else if (head.text == "trans")
      trans_directive();
    else
      fail(head.column, "unknown directive '" + head.text + "'");
    if (!at_end())
      fail(column(), "unexpected '" + tokens_[pos_].text + "'");
  }

  void clocks_directive(const Token& head) {
    if (clocks_declared_)
      fail(head.column, "duplicate clocks declaration");
    if (!transitions_.empty())
      fail(head.column, "clocks must be declared before transitions");
    clocks_declared_ = true;
    if (at_end())
      fail(column(), "expected a clock name");
    while (!at_end()) {
      const Token& name = expect(TokenKind::kWord, "a clock name");
      if (clock_ids_.count(name.text))
        fail(name.column, "duplicate clock '" + name.text + "'");
      clocks_.push_back(name.text);
      clock_ids_[name.text] = clocks_.size();
    }
  }

  void state_directive() {
    const Token& name = expect(TokenKind::kWord, "a state name");
    if (state_ids_.count(name.text))
      fail(name.column, "duplicate state '" + name.text + "'");
    const StateId id = states_.size();
    states_.push_back(name.text);
    state_ids_[name.text] = id;
    bool initial = false, accepting = false;
    while (!at_end()) {
      const Token& flag = expect(TokenKind::kWord, "'initial' or 'accepting'");
      if (flag.text == "initial" && !initial) {
        if (initial_)
          fail(flag.column, "duplicate initial state");
        initial = true;
        initial_ = id;
      } else if (flag.text == "accepting" && !accepting) {
        accepting = true;
        accepting_.push_back(id);
      } else {
        fail(flag.column, "unexpected '" + flag.text + "'");
      }
    }
  }

  StateId state_ref() {
    const Token& name = expect(TokenKind::kWord, "a state name");
    auto it = state_ids_.find(name.text);
    if (it == state_ids_.end())
      fail(name.column, "unknown state '" + name.text + "'");
    return it->second;
  }

  ClockIndex clock_ref() {
    const Token& name = expect(TokenKind::kWord, "a clock name");
    auto it = clock_ids_.find(name.text);
    if (it == clock_ids_.end())
      fail(name.column, "unknown clock '" + name.text + "'");
    return it->second;
  }

  std::int64_t constant() {
    if (!at_end() && tokens_[pos_].kind == TokenKind::kWord)
      fail(column(), "expected an integer constant");
    const Token& tok = expect(TokenKind::kNumber, "an integer constant");
    if (tok.text.front() == '-')
      fail(tok.column, "negative constant");
    if (tok.text.find('.') != std::string::npos)
      fail(tok.column, "non-integer constant");
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || value > Weight::kMaxValue / 2)
      fail(tok.column, "constant out of range");
    return value;
  }

  void atom(Guard& guard) {
    const ClockIndex x = clock_ref();
    const Token& op = expect(TokenKind::kOperator, "a comparison operator");
    const std::int64_t c = constant();
    if (op.text == "<")
      guard.atoms.push_back({x, Comparison::kLess, c});
    else if (op.text == "<=")
      guard.atoms.push_back({x, Comparison::kLessEqual, c});
    else if (op.text == "==") {
      guard.atoms.push_back({x, Comparison::kLessEqual, c});
      guard.atoms.push_back({x, Comparison::kGreaterEqual, c});
    } else if (op.text == ">=")
      guard.atoms.push_back({x, Comparison::kGreaterEqual, c});
    else
      guard.atoms.push_back({x, Comparison::kGreater, c});
  }

  void trans_directive() {
    if (!clocks_declared_)
      fail(column(), "clocks must be declared before transitions");
    Transition t;
    t.source = state_ref();
    expect(TokenKind::kArrow, "'->'");
    t.target = state_ref();
    if (accept_word("guard")) {
      atom(t.guard);
      while (!at_end() && tokens_[pos_].kind == TokenKind::kAnd) {
        ++pos_;
        atom(t.guard);
      }
    }
    if (accept_word("reset")) {
      if (at_end())
        fail(column(), "expected a clock name");
      while (!at_end()) {
        const std::size_t col = column();
        const ClockIndex x = clock_ref();
        for (ClockIndex y : t.resets)
          if (y == x)
            fail(col, "clock reset twice");
        t.resets.push_back(x);
      }
    }
    transitions_.push_back(std::move(t));
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::size_t end_column_ = 1;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  bool clocks_declared_ = false;
  std::vector<std::string> clocks_;
  std::map<std::string, ClockIndex, std::less<>> clock_ids_;
  std::vector<std::string> states_;
  std::map<std::string, StateId, std::less<>> state_ids_;
  std::optional<StateId> initial_;
  std::vector<StateId> accepting_;
  std::vector<Transition> transitions_;
};

}  // namespace

Automaton parse_model(std::string_view text) { return Parser(text).run(); }

Automaton load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(1, 1, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::string print_model(const Automaton& a) {
  std::ostringstream os;
  os << "clocks";
  for (const auto& c : a.clocks())
    os << ' ' << c;
  os << '\n';
  for (StateId q = 0; q < a.states().size(); ++q) {
    os << "state " << a.states()[q];
    if (q == a.initial())
      os << " initial";
    if (a.is_accepting(q))
      os << " accepting";
    os << '\n';
  }
  for (const auto& t : a.transitions()) {
    os << "trans " << a.states()[t.source] << " -> " << a.states()[t.target];
    if (!t.guard.is_true())
      os << " guard " << to_string(t.guard, a.clocks());
    if (!t.resets.empty()) {
      os << " reset";
      for (ClockIndex x : t.resets)
        os << ' ' << a.clocks()[x - 1];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tazone
