#ifndef MATFP_MATROID_IO_HPP
#define MATFP_MATROID_IO_HPP

#include <string>

#include "matfp/matroid.hpp"

namespace matfp {

enum class TextFormat { Full, Compact };

// Full text format, two lines:
//   MATROID n=<int> r=<int>
//   bases=<b1>;<b2>;...
// where each basis lists ascending elements comma-separated and the empty
// set renders as "-".
std::string render_matroid_full(const Matroid& m);

// Compact format, one line: "<n> <r> <s>" where s is the revlex basis
// indicator string over all r-subsets of the ground set.  Subset A precedes
// B in revlex iff max(A xor B) lies in B, i.e. masks in ascending numeric
// order.
std::string render_matroid_compact(const Matroid& m);

std::string render_matroid(const Matroid& m, TextFormat f);

// The indicator string alone (the <s> component of the compact form).
std::string revlex_basis_string(const Matroid& m);

// Rebuilds a matroid from an indicator string; validates length and that the
// selected family satisfies the basis axioms.
Matroid matroid_from_revlex(int n, int r, const std::string& s);

// Parses either format, autodetected by the leading token.  Throws
// Error(ParseError) on malformed input; basis validation errors propagate
// from from_bases.
Matroid parse_matroid(const std::string& text);

// Parses "0,2,3" / "-" into a mask; throws Error(ParseError) on bad syntax
// or elements outside [0,16).
SubsetMask parse_set(const std::string& text);

}  // namespace matfp

#endif  // MATFP_MATROID_IO_HPP
