#include "cmreg/io.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>

#include "cmreg/errors.hpp"

namespace cmreg {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
  size_t h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

[[noreturn]] void fail_at(size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, 0, line);
}

// first whitespace-separated word and the trimmed remainder
std::pair<std::string, std::string> split_word(const std::string& s) {
  size_t sp = s.find_first_of(" \t");
  if (sp == std::string::npos) return {s, ""};
  return {s.substr(0, sp), trim(s.substr(sp + 1))};
}

Polynomial parse_line_poly(const std::string& text, const RingPtr& ring, size_t line) {
  Polynomial f = Polynomial::zero(ring);
  try {
    f = parse_polynomial(text, ring);
  } catch (const Error& e) {
    fail_at(line, e.what());
  }
  if (!is_homogeneous(f).homogeneous) fail_at(line, "polynomial is not homogeneous");
  return f;
}

}  // namespace

const Ideal& InputDocument::find_ideal(const std::string& name) const {
  for (const auto& [n, ideal] : ideals)
    if (n == name) return ideal;
  for (const auto& [n, arr] : arrangements)
    if (n == name) return arr.ideal;
  std::string known;
  for (const auto& [n, ideal] : ideals) known += (known.empty() ? "" : ", ") + n;
  for (const auto& [n, arr] : arrangements) known += (known.empty() ? "" : ", ") + n;
  throw Error("no ideal or arrangement named '" + name + "' in the input" +
              (known.empty() ? "" : " (defined: " + known + ")"));
}

InputDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  InputDocument doc;
  std::set<std::string> names;

  enum class Mode { top, ideal, arrangement };
  Mode mode = Mode::top;
  std::string block_name;
  std::vector<Polynomial> block_polys;
  std::vector<LinearSubspace> block_subs;
  size_t block_start = 0;

  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto [word, rest] = split_word(line);

    if (!doc.ring) {
      if (word != "ring") fail_at(lineno, "expected 'ring <num_vars> <p>' first");
      std::istringstream hs(rest);
      int nv = 0;
      long long p = 0;
      std::string extra;
      if (!(hs >> nv >> p) || (hs >> extra))
        fail_at(lineno, "expected 'ring <num_vars> <p>'");
      if (nv < 1) fail_at(lineno, "the ring needs at least one variable");
      if (p < 2 || p > UINT32_MAX || !is_prime(static_cast<uint32_t>(p)))
        fail_at(lineno, "characteristic must be a prime");
      doc.ring = make_ring(nv, static_cast<uint32_t>(p));
      continue;
    }

    switch (mode) {
      case Mode::top: {
        if (word != "ideal" && word != "arrangement")
          fail_at(lineno, "expected an 'ideal' or 'arrangement' block");
        if (rest.empty() || rest.find_first_of(" \t") != std::string::npos)
          fail_at(lineno, "a block needs a single-word name");
        if (!names.insert(rest).second) fail_at(lineno, "duplicate name '" + rest + "'");
        block_name = rest;
        block_start = lineno;
        block_polys.clear();
        block_subs.clear();
        mode = word == "ideal" ? Mode::ideal : Mode::arrangement;
        break;
      }
      case Mode::ideal: {
        if (word == "end" && rest.empty()) {
          doc.ideals.emplace_back(block_name, Ideal(doc.ring, std::move(block_polys)));
          block_polys = {};
          mode = Mode::top;
          break;
        }
        block_polys.push_back(parse_line_poly(line, doc.ring, lineno));
        break;
      }
      case Mode::arrangement: {
        if (word == "end" && rest.empty()) {
          if (block_subs.empty()) fail_at(lineno, "an arrangement needs at least one subspace");
          try {
            doc.arrangements.emplace_back(block_name, Arrangement(std::move(block_subs)));
          } catch (const Error& e) {
            fail_at(lineno, e.what());
          }
          block_subs = {};
          mode = Mode::top;
          break;
        }
        if (word != "subspace") fail_at(lineno, "expected 'subspace <form>; ...' or 'end'");
        std::vector<Polynomial> forms;
        std::string piece;
        std::istringstream parts(rest);
        while (std::getline(parts, piece, ';')) {
          piece = trim(piece);
          if (piece.empty()) fail_at(lineno, "empty form in subspace");
          forms.push_back(parse_line_poly(piece, doc.ring, lineno));
        }
        if (forms.empty()) fail_at(lineno, "a subspace needs at least one form");
        try {
          block_subs.emplace_back(doc.ring, std::move(forms));
        } catch (const Error& e) {
          fail_at(lineno, e.what());
        }
        break;
      }
    }
  }
  if (mode != Mode::top)
    fail_at(block_start, "block '" + block_name + "' is never closed with 'end'");
  if (!doc.ring) throw ParseError("input has no ring line", 0, lineno);
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.position, e.line);
  }
}

namespace {

std::string cell(int64_t v) { return v == 0 ? "." : std::to_string(v); }

std::string pad_left(const std::string& s, size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

// rows x cols of preformatted cells; first column is the row label
std::string render_grid(const std::vector<std::string>& col_heads,
                        const std::vector<std::string>& row_heads,
                        const std::vector<std::vector<std::string>>& cells) {
  size_t label_w = 0;
  for (const auto& h : row_heads) label_w = std::max(label_w, h.size());
  std::vector<size_t> w(col_heads.size());
  for (size_t c = 0; c < col_heads.size(); ++c) {
    w[c] = col_heads[c].size();
    for (const auto& row : cells) w[c] = std::max(w[c], row[c].size());
  }
  std::ostringstream out;
  out << std::string(label_w, ' ');
  for (size_t c = 0; c < col_heads.size(); ++c) out << "  " << pad_left(col_heads[c], w[c]);
  out << "\n";
  for (size_t r = 0; r < row_heads.size(); ++r) {
    out << pad_left(row_heads[r], label_w);
    for (size_t c = 0; c < col_heads.size(); ++c) out << "  " << pad_left(cells[r][c], w[c]);
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_betti_table(const BettiTable& table) {
  if (table.ranks.empty()) return "  (empty)\n";
  int max_i = 0, lo = INT_MAX, hi = INT_MIN;
  for (const auto& [ij, v] : table.ranks) {
    max_i = std::max(max_i, ij.first);
    lo = std::min(lo, ij.second - ij.first);
    hi = std::max(hi, ij.second - ij.first);
  }
  std::vector<std::string> col_heads, row_heads;
  for (int i = 0; i <= max_i; ++i) col_heads.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> cells;
  for (int r = lo; r <= hi; ++r) {
    row_heads.push_back(std::to_string(r) + ":");
    auto& row = cells.emplace_back();
    for (int i = 0; i <= max_i; ++i) {
      auto it = table.ranks.find({i, r + i});
      row.push_back(cell(it == table.ranks.end() ? 0 : it->second));
    }
  }
  return render_grid(col_heads, row_heads, cells);
}

std::string render_cohomology_table(const CohomologyTable& table) {
  std::vector<std::string> col_heads, row_heads;
  for (int d = table.d_lo; d <= table.d_hi; ++d) col_heads.push_back(std::to_string(d));
  std::vector<std::vector<std::string>> cells;
  for (int i = 0; i <= table.n; ++i) {
    row_heads.push_back("h^" + std::to_string(i) + ":");
    auto& row = cells.emplace_back();
    for (int d = table.d_lo; d <= table.d_hi; ++d)
      row.push_back(cell(table.h[static_cast<size_t>(i)][static_cast<size_t>(d - table.d_lo)]));
  }
  return render_grid(col_heads, row_heads, cells);
}

std::string render_campaign_report(const CampaignResult& result) {
  const CampaignConfig& cfg = result.config;
  std::ostringstream out;
  out << "campaign=" << cfg.campaign << " trials=" << cfg.trials << " seed=" << cfg.seed
      << " n=" << cfg.ambient_n << " d=" << cfg.d << " p=" << cfg.char_p
      << " window=" << cfg.window << "\n";
  for (const TrialRecord& rec : result.records) {
    if (rec.verdict == Verdict::hypothesis_rejected) continue;
    out << "trial draw=" << rec.draw_index << " verdict=" << verdict_name(rec.verdict)
        << " desc=\"" << rec.description << "\"";
    for (const auto& [k, v] : rec.quantities) out << " " << k << "=" << v;
    out << "\n";
  }
  out << "summary accepted=" << result.accepted << " passed=" << result.passed
      << " failed=" << result.failed << " hypothesis-rejected=" << result.rejected
      << " draws=" << result.draws << "\n";
  out << "result=" << (result.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace cmreg
