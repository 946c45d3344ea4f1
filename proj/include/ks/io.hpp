#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ks/affine.hpp"
#include "ks/kostka.hpp"
#include "ks/tpoly.hpp"

namespace ks {

// Canonical machine form: terms in the canonical order, each rendered as
// "c*t1^a1*t2^a2*..." with zero exponents omitted, joined by '+'; a bare
// constant term is just "c" and the zero polynomial is "0".
std::string tpoly_to_canonical(const TPoly& p);

// Human form: unit coefficients and unit exponents dropped, the single
// variable written "t" when the polynomial has one variable.
std::string tpoly_to_pretty(const TPoly& p);

// Sorted array of {"t": [e_1,...,e_r], "c": coefficient}; coefficients
// outside the 64-bit range are emitted as decimal strings.
nlohmann::ordered_json tpoly_to_json(const TPoly& p);

nlohmann::ordered_json table_row_to_json(const TableRow& row);

struct TableRequest {
  int r = 1;
  long long size = 0;
  int n = 0;  // 0 means "use the total size" (minimum 1)
  int threads = 1;
  bool json = false;
  unsigned long long seed = 0;  // recorded in JSON output for reproducibility
};

// Renders the full dominance-ordered Kostka table as bytes. The output
// depends only on (r, size, n, seed, format), never on the thread count.
std::string render_table(const TableRequest& req);

// CSV with columns m, n, color, alpha.
std::string render_pseudoroots_csv(int r, int n);

// Per-block report of the reduced-word construction; text or JSON.
std::string render_word_blocks(const FlagType& ft,
                               const std::vector<WordBlock>& blocks,
                               bool as_json);

}  // namespace ks
