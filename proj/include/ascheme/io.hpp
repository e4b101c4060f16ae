#pragma once

#include <iosfwd>
#include <string>

#include "ascheme/action.hpp"
#include "ascheme/semidirect.hpp"

namespace ascheme {

// Scheme text format (.scm): optional '#' comment lines, one header line
// "n r b" (points, relations, basepoint), then n rows of n relation indices.
// Parsing is strict: exact token counts, declared r must match the matrix,
// trailing non-comment content is an error. Validation is delegated to
// from_color_matrix.
Scheme parse_scheme_text(std::istream& in, const std::string& name);
Scheme load_scheme(const std::string& path);
void write_scheme_text(std::ostream& out, const Scheme& s);
void save_scheme(const std::string& path, const Scheme& s);

// Group table format (.grp): "m" then an m x m Cayley table, identity 0.
Scheme load_group_as_thin(const std::string& path);

// Action text format (.act):
//   Y <m>
//   X <n>
//   u <path>      (U-scheme file, relative to the .act file)
//   tau <path>    (T-scheme file, relative to the .act file)
//   point <y>     n rows of the T_y color matrix, then "alpha" + r indices
//   pair <y1> <y2>
//     primed <T_{y1}-relation indices>
//     doubled <T_{y2}-relation indices>
//     map        n lines "x -> x'"
// The basepoint's point block, diagonal pairs and reverse pairs may be
// omitted (defaulted via the action conditions). '#' comments allowed.
Action load_action(const std::string& path);

// Writes the action plus its factor schemes (<stem>_u.scm / <stem>_t.scm).
void save_action(const std::string& path, const Action& act);

// Sidecar label table: one line per product relation,
// "<relation> <u> <class members...>".
void save_label_table(const std::string& path, const SemidirectScheme& sd);

} // namespace ascheme
