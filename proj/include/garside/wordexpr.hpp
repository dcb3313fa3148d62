#ifndef GARSIDE_WORDEXPR_HPP
#define GARSIDE_WORDEXPR_HPP

#include <string>
#include <variant>
#include <vector>

#include "garside/bkl.hpp"
#include "garside/engine.hpp"
#include "garside/ncpartition.hpp"

namespace garside {

/// One parsed term: an atom a(i,j) or a partition literal, with an integer
/// exponent.
struct WordTerm {
  std::variant<std::pair<int, int>, NcPartition> value;
  int exp = 1;

  bool is_atom() const { return value.index() == 0; }
};

/// A parsed word over band generators and canonical-factor literals.
///
/// Grammar (whitespace-insensitive, 0-based indices):
///   word      := term (('*' | '.') term)*
///   term      := atom | partition
///   atom      := 'a(' int ',' int ')' ['^' signed-int]
///   partition := ('{' int+ '}')+ ['^' signed-int]
struct WordExpr {
  int n = 0;
  std::vector<WordTerm> terms;

  bool is_positive() const;

  /// Flattened positive word over simples.  Throws std::invalid_argument
  /// if any exponent is negative.
  std::vector<SimpleId> to_simples(const BklInstance& inst) const;

  /// Signed word over simples (simple id, exponent).
  std::vector<std::pair<SimpleId, int>> to_signed(const BklInstance& inst) const;

  /// Signed band-atom word; partition terms are rejected.  Used by the
  /// Artin translation.
  std::vector<SignedBandAtom> to_band_atoms() const;

  std::string str() const;
};

/// Parses the grammar above.  Throws ParseError with the byte offset on
/// syntax errors, out-of-range indices, and crossing partition literals.
WordExpr parse_word(const std::string& text, int n);

/// Renders a normal form as a word of partition literals joined by " * ";
/// the identity renders as the singleton partition literal.
std::string format_normal_form(const BklInstance& inst, const NormalForm& nf);

}  // namespace garside

#endif
