#include "ladder/io.hpp"

#include <algorithm>
#include <set>

namespace ladder {

using nlohmann::json;

namespace {

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return v.get<int>();
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Ladder parse_json(std::string_view text, std::vector<std::string>* warnings) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    throw FormatError("ladder JSON needs a \"cells\" array");
  std::vector<Cell> cells;
  std::set<Cell> seen;
  for (const json& entry : doc["cells"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw FormatError("each cell must be a [row, col] pair");
    const Cell c{as_int(entry[0], "row"), as_int(entry[1], "col")};
    if (c.row < 1 || c.col < 1)
      throw FormatError("cell " + to_string(c) + " is not 1-based");
    if (!seen.insert(c).second) {
      if (warnings) warnings->push_back("duplicate cell " + to_string(c) + " ignored");
      continue;
    }
    cells.push_back(c);
  }
  if (cells.empty()) throw DomainError("ladder has no cells");
  return Ladder::from_cells(std::move(cells));
}

Ladder parse_ascii(std::string_view text, std::vector<std::string>* /*warnings*/) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::size_t first = 0;
  while (first < lines.size() && lines[first].empty()) ++first;
  if (first == lines.size()) throw FormatError("empty grid");

  std::vector<Cell> cells;
  for (std::size_t r = first; r < lines.size(); ++r) {
    const std::string& line = lines[r];
    const int row = static_cast<int>(r - first) + 1;
    if (line.empty()) throw FormatError("blank line inside grid at row " + std::to_string(row));
    for (std::size_t k = 0; k < line.size(); ++k) {
      const char ch = line[k];
      if (ch == '#') {
        cells.push_back({row, static_cast<int>(k) + 1});
      } else if (ch != '.') {
        throw FormatError("unexpected character '" + std::string(1, ch) + "' at row " +
                          std::to_string(row) + ", column " + std::to_string(k + 1));
      }
    }
  }
  if (cells.empty()) throw FormatError("grid has no '#' cells");
  return Ladder::from_cells(std::move(cells));
}

Ladder parse_ladder(std::string_view text, std::vector<std::string>* warnings) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_json(text, warnings);
  return parse_ascii(text, warnings);
}

std::string render_ascii(const Ladder& y, bool annotate) {
  CornerProfile prof;
  if (annotate) prof = corners(y);
  auto has = [](const std::vector<Cell>& v, Cell c) {
    return std::binary_search(v.begin(), v.end(), c);
  };
  std::string out;
  for (int i = 1; i <= y.rows(); ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= y.cols(); ++j) {
      const Cell c{i, j};
      char ch = y.contains(c) ? '#' : '.';
      if (annotate && ch == '#') {
        const bool lo = has(prof.lower, c), up = has(prof.upper, c);
        if (lo && up)
          ch = 'C';
        else if (lo)
          ch = 'L';
        else if (up)
          ch = 'U';
      }
      out += ch;
    }
  }
  return out;
}

Monomial parse_monomial(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("exps") || !doc["exps"].is_array())
    throw FormatError("monomial JSON needs an \"exps\" array");
  std::vector<Monomial::Term> terms;
  for (const json& entry : doc["exps"]) {
    if (!entry.is_array() || entry.size() != 3)
      throw FormatError("each exponent entry must be [row, col, e]");
    const int e = as_int(entry[2], "exponent");
    if (e < 0) throw FormatError("exponents must be nonnegative");
    terms.push_back({{as_int(entry[0], "row"), as_int(entry[1], "col")}, e});
  }
  return Monomial::from_terms(std::move(terms));
}

json to_json(Cell c) { return json::array({c.row, c.col}); }

json to_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back(to_json(c));
  return out;
}

json to_json(const Ladder& y) { return json{{"cells", to_json(y.cells())}}; }

json to_json(const CornerProfile& p) {
  return json{{"coincidental", to_json(coincidental_corners(p))},
              {"lower", to_json(p.lower)},
              {"m", p.m},
              {"n", p.n},
              {"upper", to_json(p.upper)}};
}

json to_json(const ValidationReport& r) {
  return json{{"every_cell_in_minor", r.every_cell_in_minor},
              {"is_ladder", r.is_ladder},
              {"messages", r.messages},
              {"normalized", r.normalized},
              {"path_connected", r.path_connected},
              {"sidedness", to_string(r.sidedness)},
              {"two_connected", r.two_connected}};
}

json to_json(const Factorization& f) {
  json factors = json::array();
  for (const Ladder& z : f.factors) factors.push_back(to_json(z));
  json offsets = json::array();
  for (const Offset& o : f.offsets) offsets.push_back(json::array({o.drow, o.dcol}));
  return json{{"coincidental", to_json(f.coincidental)},
              {"factors", factors},
              {"offsets", offsets}};
}

json to_json(const DivisorClass& d) {
  json q = json::object(), p = json::object();
  for (const auto& [label, c] : d.coeffs())
    (label.kind == BasisLabel::Kind::Q ? q : p)[std::to_string(label.index)] = c;
  return json{{"P", p}, {"Q", q}};
}

json to_json(const SdmReport& r) {
  json factors = json::array();
  for (const FactorSummary& s : r.factors)
    factors.push_back(json{{"epsilon", s.epsilon},
                           {"gorenstein", s.gorenstein},
                           {"m", s.m},
                           {"n", s.n},
                           {"omega_image", to_json(s.omega_image)}});
  json classes = json::array();
  for (const DivisorClass& d : r.classes) classes.push_back(to_json(d));
  return json{{"classes", classes},  {"count", r.count},  {"factors", factors},
              {"omega", to_json(r.omega)}, {"rank", r.rank}, {"thetas", r.thetas}};
}

json to_json(const Monomial& m) {
  json exps = json::array();
  for (const auto& [c, e] : m.terms()) exps.push_back(json::array({c.row, c.col, e}));
  return json{{"exps", exps}};
}

json to_json(const WitnessReport& r) {
  json cases = json::array();
  for (const WitnessCase& c : r.cases) {
    json entry{{"applicable", c.applicable}, {"name", c.name}};
    if (c.applicable) {
      entry["antitransposed"] = c.antitransposed;
      entry["lambda"] = c.lambda;
      entry["arguments_in_ideals"] = c.arguments_in_ideals;
      entry["tensors_distinct"] = c.tensors_distinct;
      entry["products_equal"] = c.products_equal;
      entry["holds"] = c.holds();
      entry["first"] = json::array({to_json(c.first.first), to_json(c.first.second)});
      entry["second"] = json::array({to_json(c.second.first), to_json(c.second.second)});
    }
    cases.push_back(entry);
  }
  return json{{"all_hold", r.all_hold()},     {"cases", cases},
              {"corner", to_json(r.corner)},  {"lambda01", r.lambda01},
              {"lambda11", r.lambda11},       {"vacuous", r.vacuous()}};
}

}  // namespace ladder
