#pragma once

// Seifert invariants M(g; (a1,b1), ..., (an,bn)) of an oriented Seifert
// fibration over a closed oriented surface, together with the equivalence
// moves that relate isomorphic presentations.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seifsec/number_theory.hpp"
#include "seifsec/rational.hpp"

namespace seifsec {

/// Raised when invariants violate alpha >= 1, gcd(alpha, beta) = 1 or g >= 0.
class InvalidInvariants : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a move cannot be applied to a presentation.
class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExceptionalPair {
  Int alpha = 1;  // multiplicity
  Int beta = 0;

  bool is_trivial() const { return alpha == 1 && beta == 0; }
  friend bool operator==(const ExceptionalPair&, const ExceptionalPair&) = default;
  friend auto operator<=>(const ExceptionalPair&, const ExceptionalPair&) = default;
};

/// Throws InvalidInvariants naming the offending pair.
void validate_pair(const ExceptionalPair& p, std::size_t index);

/**
 * A presentation M(g; (a1,b1), ..., (an,bn)).
 *
 * The pair order is presentation order only. Construction validates every
 * pair, so a SeifertData value is always well formed.
 */
class SeifertData {
 public:
  SeifertData() = default;
  SeifertData(Int base_genus, std::vector<ExceptionalPair> pairs);

  Int base_genus() const { return base_genus_; }
  const std::vector<ExceptionalPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;

 private:
  Int base_genus_ = 0;
  std::vector<ExceptionalPair> pairs_;
};

/// Normalised invariants M(g; (1,b), (a1,b1), ...) with 0 < bi < ai, ai > 1, sorted.
struct NormalForm {
  Int base_genus = 0;
  Int b = 0;
  std::vector<ExceptionalPair> singular_pairs;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// e = -sum(beta_i / alpha_i).
Rational euler_number(const SeifertData& m);
Rational euler_number(const NormalForm& nf);

NormalForm normalize(const SeifertData& m);

/// Expands a normal form back into a presentation; (1,b) comes first and is omitted when b = 0.
SeifertData to_seifert(const NormalForm& nf);

bool is_isomorphic(const SeifertData& m1, const SeifertData& m2);

namespace moves {

/// result.pairs[i] = m.pairs[order[i]].
struct Permute {
  std::vector<std::size_t> order;
};
/// Appends a (1,0) pair.
struct InsertTrivial {};
struct DeleteTrivial {
  std::size_t index = 0;
};
/// beta_i -> beta_i + k_i * alpha_i with sum(k_i) = 0.
struct Twist {
  std::vector<Int> k;
};

}  // namespace moves

using MoveSpec = std::variant<moves::Permute, moves::InsertTrivial, moves::DeleteTrivial, moves::Twist>;

SeifertData apply_move(const SeifertData& m, const MoveSpec& move);

std::string describe(const MoveSpec& move);

// Text syntax: "M(g; (a1,b1), (a2,b2), ...)", whitespace-insensitive.

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the text syntax. Syntax errors throw ParseError (0-based column);
/// well-formed text with invalid invariants throws InvalidInvariants.
SeifertData parse_seifert(std::string_view text);

/// Canonical rendering, e.g. "M(0; (2,1), (3,-1))" or "M(1;)".
std::string to_string(const SeifertData& m);
/// Renders a normal form in the same syntax as to_string(to_seifert(nf)).
std::string to_string(const NormalForm& nf);

std::ostream& operator<<(std::ostream& os, const SeifertData& m);
std::ostream& operator<<(std::ostream& os, const ExceptionalPair& p);

}  // namespace seifsec
