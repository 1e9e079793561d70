#pragma once

#include <map>
#include <string>

#include "dc/matrices.hpp"
#include "dc/pictures.hpp"

namespace dc {

// Matrix text: one row per line, entries separated by whitespace. Blank
// lines and lines starting with '#' are skipped; rows may be ragged.
template <class Tag>
Matrix<Tag> parse_matrix(const std::string& text);
template <class Tag>
std::string format_matrix(const Matrix<Tag>& m);

// Tableau display text, one display row per line or '|'-separated on one
// line. Entries are separated by spaces or commas; an optional "c:" prefix
// gives the row's starting column (the inner shape), as in "3:1,1,2".
Display parse_display(const std::string& text);
std::string format_display(const Display& d);

// Picture text: one "r,c -> r',c'" line per square.
std::map<Square, Square> parse_picture(const std::string& text);
std::string format_picture(const Picture& p);

}  // namespace dc
