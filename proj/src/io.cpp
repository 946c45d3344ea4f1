#include "ks/io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "ks/pseudoroots.hpp"

namespace ks {

namespace {

std::string int_to_string(const Int& v) { return v.str(); }

bool fits_int64(const Int& v) {
  return v >= std::numeric_limits<int64_t>::min() &&
         v <= std::numeric_limits<int64_t>::max();
}

}  // namespace

std::string tpoly_to_canonical(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << '+';
    first = false;
    os << int_to_string(c);
    for (size_t s = 0; s < e.size(); ++s) {
      if (e[s] != 0) os << "*t" << (s + 1) << '^' << e[s];
    }
  }
  return os.str();
}

std::string tpoly_to_pretty(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Int abs_c = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream vars;
    for (size_t s = 0; s < e.size(); ++s) {
      if (e[s] == 0) continue;
      if (has_var) vars << '*';
      has_var = true;
      if (p.vars() == 1) {
        vars << 't';
      } else {
        vars << 't' << (s + 1);
      }
      if (e[s] != 1) vars << '^' << e[s];
    }
    if (!has_var) {
      os << int_to_string(abs_c);
    } else {
      if (abs_c != 1) os << int_to_string(abs_c) << '*';
      os << vars.str();
    }
  }
  return os.str();
}

nlohmann::ordered_json tpoly_to_json(const TPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["t"] = e;
    if (fits_int64(c)) {
      term["c"] = static_cast<int64_t>(c);
    } else {
      term["c"] = int_to_string(c);
    }
    arr.push_back(std::move(term));
  }
  return arr;
}

nlohmann::ordered_json table_row_to_json(const TableRow& row) {
  nlohmann::ordered_json j;
  j["lambda"] = row.lambda.to_text();
  j["mu"] = row.mu.to_text();
  j["poly"] = tpoly_to_json(row.poly);
  return j;
}

std::string render_table(const TableRequest& req) {
  int n = req.n > 0 ? req.n
                    : static_cast<int>(std::max<long long>(req.size, 1));
  std::vector<TableRow> rows = kostka_table(req.r, n, req.size, req.threads);
  if (req.json) {
    nlohmann::ordered_json j;
    j["meta"] = {{"r", req.r}, {"size", req.size}, {"n", n}, {"seed", req.seed}};
    j["rows"] = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) j["rows"].push_back(table_row_to_json(row));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "lambda,mu,poly\n";
  for (const TableRow& row : rows) {
    os << '"' << row.lambda.to_text() << "\",\"" << row.mu.to_text() << "\","
       << tpoly_to_canonical(row.poly) << '\n';
  }
  return os.str();
}

std::string render_pseudoroots_csv(int r, int n) {
  PseudorootSystem sys(r, n);
  std::ostringstream os;
  os << "m,n,color,alpha\n";
  for (const Pseudoroot& root : sys.roots()) {
    os << root.m << ',' << root.n << ',' << root.color << ',';
    for (size_t l = 0; l < root.alpha.size(); ++l) {
      if (l > 0) os << ' ';
      os << root.alpha[l];
    }
    os << '\n';
  }
  return os.str();
}

std::string render_word_blocks(const FlagType& ft,
                               const std::vector<WordBlock>& blocks,
                               bool as_json) {
  int d = ft.total_dim();
  std::vector<int> concatenation;
  for (const WordBlock& b : blocks) {
    concatenation.insert(concatenation.end(), b.word.begin(), b.word.end());
  }
  // Per-block reducedness is the asserted property; reducedness of the
  // whole concatenation is informational only.
  bool concat_reduced =
      concatenation.empty() || is_reduced(d, concatenation);
  auto arc_residues = [&](const WordBlock& b) {
    std::vector<int> res;
    for (int k = 0; k < b.arc_size; ++k) res.push_back((b.arc_start + k) % d);
    return res;
  };
  if (as_json) {
    nlohmann::ordered_json j;
    j["r"] = ft.r;
    j["dims"] = ft.dims;
    j["d"] = d;
    j["i"] = ft.i_seq;
    j["a"] = ft.a_seq;
    j["blocks"] = nlohmann::ordered_json::array();
    for (const WordBlock& b : blocks) {
      nlohmann::ordered_json jb;
      jb["n"] = b.n;
      jb["interval"] = {b.lo, b.hi};
      jb["residues"] = arc_residues(b);
      jb["word"] = b.word;
      jb["reduced"] = b.word.empty() || is_reduced(d, b.word);
      j["blocks"].push_back(std::move(jb));
    }
    j["total_length"] = concatenation.size();
    j["concatenation_reduced"] = concat_reduced;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "d=" << d << " blocks=" << blocks.size() << "\n";
  for (const WordBlock& b : blocks) {
    os << "block n=" << b.n << " interval=[" << b.lo << "," << b.hi << "]";
    if (b.hi < b.lo) {
      os << " (empty)\n";
      continue;
    }
    os << " residues=";
    std::vector<int> res = arc_residues(b);
    for (size_t i = 0; i < res.size(); ++i) {
      if (i > 0) os << ' ';
      os << res[i];
    }
    os << " word=";
    for (size_t i = 0; i < b.word.size(); ++i) {
      if (i > 0) os << ' ';
      os << b.word[i];
    }
    os << " reduced=" << (is_reduced(d, b.word) ? "yes" : "no") << "\n";
  }
  os << "total_length=" << concatenation.size()
     << " concatenation_reduced=" << (concat_reduced ? "yes" : "no")
     << " (informational)\n";
  return os.str();
}

}  // namespace ks
