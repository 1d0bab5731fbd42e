#pragma once

#include <string>

#include "fibonadic/configtree.hpp"
#include "fibonadic/farey.hpp"
#include "fibonadic/qphi.hpp"
#include "fibonadic/series.hpp"
#include "fibonadic/word.hpp"

namespace fibonadic {

// Word text: digits written top-down, a '.' between index 0 and index -1,
// and an optional final '~' standing on the index where the alternating
// tail begins.  Every character left of '.' occupies one integer position
// (rightmost is index 0), every character right of it one fractional
// position (-1, -2, ...).
//
//   "1"      <-> digit {0}
//   "10.01"  <-> digits {1, -2}
//   "0.~"    <-> the tail from -1 (the predecessor of 1)
//   "1.0~"   <-> digit 0 with the tail from -2
//
// Printing a word whose tail starts at an index >= 0 first rewrites the
// tail head as explicit digits so the '~' lands in the fractional part;
// parsing re-absorbs them, so the round trip is exact.
std::string word_to_text(const ZeckWord& z);
ZeckWord parse_word(const std::string& text);

// Series text: comma-separated "coeff@index" terms, highest index first,
// with an optional final "~@t" tail marker.  "0" is the empty series.
std::string series_to_text(const NatSeries& s);
NatSeries parse_series(const std::string& text);

// "(a,b)" exact pair.
std::string qphi_to_text(QPhi v);
// Decimal approximation with a guaranteed fractional digit, e.g. "1.0".
std::string approx_to_text(double x);

std::string point_to_text(LatticePoint v);

// JSON shapes used by the command-line tool:
//   word:   {"ones": [...], "tail": t | null}
//   config: {"height": n, "points": [{"x":, "y":, "level":, "marker":}...]}
std::string word_to_json(const ZeckWord& z);
std::string config_to_json(const Config& c);
std::string tree_to_json(std::int64_t radius);
std::string configs_to_json(int depth);

}  // namespace fibonadic
