#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmreg/arrangements.hpp"
#include "cmreg/cohomology.hpp"
#include "cmreg/harness.hpp"
#include "cmreg/resolution.hpp"

namespace cmreg {

// One parsed input file: a ring header plus named ideals and arrangements,
// kept in file order. Names are unique across both kinds of block.
struct InputDocument {
  RingPtr ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::vector<std::pair<std::string, Arrangement>> arrangements;

  // Resolves a name to the ideal it denotes (an arrangement denotes its
  // defining ideal). Unknown names raise Error listing what the file defines.
  const Ideal& find_ideal(const std::string& name) const;
};

// Grammar, line oriented:
//   ring <num_vars> <p>
//   ideal <name>        ... one polynomial per line ...        end
//   arrangement <name>  ... subspace <form>; <form>; ... ...   end
// '#' starts a comment. The ring line comes first. ParseError carries the
// 1-based line number of the offending line.
InputDocument parse_document(const std::string& text);

// parse_document on a file's contents; errors are prefixed with the path.
InputDocument load_document(const std::string& path);

// Grid with a header row of homological indices i and a left column of
// values j - i; a cell holds beta_{i,j}, or '.' when it is zero.
std::string render_betti_table(const BettiTable& table);

// Grid with rows h^0 .. h^n and one column per twist d; '.' for zero.
std::string render_cohomology_table(const CohomologyTable& table);

// Canonical campaign report: a config line, one line per accepted trial,
// a summary line with the hypothesis-rejected count, and a result line.
// Deliberately free of timing so reruns are byte-identical.
std::string render_campaign_report(const CampaignResult& result);

}  // namespace cmreg
