#pragma once

#include <string>

#include "leibniz/derivations.hpp"

namespace leibniz {

/// Command-line field token: "rational" or "prime:<p>".
FieldSpec parse_field_token(const std::string& token);
std::string render_field_token(const FieldSpec& f);

/// Algebra file grammar (line oriented, '#' starts a comment, tokens
/// whitespace separated, 1-based indices):
///   field rational            | field prime <p>
///   dim <n>
///   bracket <i> <j> : <scalar>*e<k> [+ <scalar>*e<k>]...
/// Unlisted brackets are zero; each (i,j) pair may appear at most once.
/// The parsed table must satisfy the left Leibniz identity
/// (ValidationError otherwise); syntax problems raise ParseError with the
/// line number.
LeibnizAlgebra parse_algebra_file(const std::string& text);

/// Canonical text form; parse_algebra_file(render_algebra_file(a)) has
/// identical structure constants.
std::string render_algebra_file(const LeibnizAlgebra& a);

/// Derivation file grammar (same lexical rules):
///   derivations <count>
/// then per matrix a line `matrix` followed by n rows of n scalars; entry
/// at row r, column c is the e_r-coefficient of the image of e_c.
/// The result is the commutator closure of the parsed matrices together
/// with the left multiplications; a matrix failing the derivation
/// condition raises ValidationError naming the basis pair.
DerivationSet parse_derivation_file(const std::string& text, const LeibnizAlgebra& a);

}  // namespace leibniz
