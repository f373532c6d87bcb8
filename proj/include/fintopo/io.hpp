// External formats: the line-based poset text format (`a < b`, bare labels
// for isolated elements, # comments), the structured JSON document, DOT
// export of the Hasse diagram, the removal-trace log, hypergraph and cover
// files, and the compatibility-table dump.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fintopo/homotopy.hpp"
#include "fintopo/hypergraph.hpp"
#include "fintopo/invariants.hpp"
#include "fintopo/poset.hpp"
#include "fintopo/search.hpp"

namespace fintopo {

FinitePoset read_poset_text(std::istream& in);
FinitePoset read_poset_json(std::istream& in);
// Sniffs the format: a first non-space '{' means JSON.
FinitePoset read_poset_any(std::istream& in);
FinitePoset read_poset_file(const std::string& path);

// Cover relations one per line, isolated elements as bare labels.
void write_poset_text(std::ostream& out, const FinitePoset& poset);

// Hasse diagram, edges lower -> upper, one rank per level.
void write_dot(std::ostream& out, const FinitePoset& poset);

// One `<label> up|down witness=<label>` line per removal (a two-sided beat
// point is logged as up, matching how it was removed).
void write_trace(std::ostream& out, const std::vector<BeatPointReport>& trace);

// One hyperedge per line, comma-separated vertex labels.
Hypergraph read_hypergraph_text(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_text(std::ostream& out, const Hypergraph& h);

// Cover files: one member per line, comma-separated maximal labels.
std::vector<Bitset> read_cover_file(std::istream& in, const FinitePoset& poset);

// `{a,b}:0|1` lines, sigma convention (0 = compatible).
void write_compatibility_table(std::ostream& out, const CompatibilityTable& table);

// JSON report mirroring InvariantReport; numeric fields carry exact|bound.
std::string invariant_report_json(const InvariantReport& report);
void write_invariant_report(std::ostream& out, const InvariantReport& report, bool as_json);

}  // namespace fintopo
