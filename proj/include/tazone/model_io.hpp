// The .ta text format:
//
//   clocks <name>+
//   state <id> [initial] [accepting]
//   trans <src> -> <dst> [guard <atom> (&& <atom>)*] [reset <clock>+]
//
// One directive per line, `#` comments.  Atoms are `<clock> <op> <nat>` with
// op one of < <= == >= >; `==` becomes a <= and a >= atom.  Clocks and states
// are declared before use.

#ifndef TAZONE_MODEL_IO_HPP
#define TAZONE_MODEL_IO_HPP

#include "tazone/automaton.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tazone {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Automaton parse_model(std::string_view text);

/// Reads and parses a file; I/O failures are reported as ParseError at line 1.
Automaton load_model(const std::string& path);

/// Canonical text form; parse_model(print_model(a)) == a.
std::string print_model(const Automaton& a);

}  // namespace tazone

#endif  // TAZONE_MODEL_IO_HPP
