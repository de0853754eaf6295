#include "ladder/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ladder/io.hpp"

namespace ladder::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> inputs;
  std::vector<std::string> monomials;
  std::string sizes;
  bool json = false;
  bool pretty = false;
  bool annotate = false;
  int degree_bound = 4;
};

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read input file '" + path + "'");
  return read_all(f);
}

Ladder load_one(const Options& o, std::istream& in, std::ostream& err) {
  if (o.inputs.size() > 1) throw UsageError("this command takes a single --in");
  const std::string text = o.inputs.empty() ? read_all(in) : read_file(o.inputs.front());
  std::vector<std::string> warnings;
  Ladder y = parse_ladder(text, &warnings);
  for (const std::string& w : warnings) err << "warning: " << w << '\n';
  return y;
}

Monomial load_monomial(const std::string& arg, int bound) {
  const auto pos = arg.find_first_not_of(" \t\r\n");
  const std::string text =
      pos != std::string::npos && arg[pos] == '{' ? arg : read_file(arg);
  Monomial m = parse_monomial(text);
  if (m.degree() > bound)
    throw UsageError("monomial degree " + std::to_string(m.degree()) +
                     " exceeds --degree-bound " + std::to_string(bound));
  return m;
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos) throw UsageError("size '" + item + "' is not of the form MxN");
    try {
      std::size_t used_m = 0, used_n = 0;
      const int m = std::stoi(item.substr(0, x), &used_m);
      const int n = std::stoi(item.substr(x + 1), &used_n);
      if (used_m != x || used_n != item.size() - x - 1) throw std::invalid_argument(item);
      out.emplace_back(m, n);
    } catch (const std::logic_error&) {
      throw UsageError("size '" + item + "' is not of the form MxN");
    }
  }
  if (out.empty()) throw UsageError("--sizes is empty");
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string cells_text(const std::vector<Cell>& cs) {
  std::string s;
  for (const Cell& c : cs) s += (s.empty() ? "" : " ") + to_string(c);
  return s.empty() ? "(none)" : s;
}

std::string class_text(const DivisorClass& d) { return d.is_zero() ? "0" : to_string(d); }

int cmd_validate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Ladder y = load_one(o, in, err);
  const ValidationReport r = validate(y);
  if (o.json) {
    emit(out, to_json(r));
  } else {
    out << "ladder:              yes (" << y.rows() << "x" << y.cols() << ", " << y.size()
        << " cells)\n"
        << "normalized:          " << (r.normalized ? "yes" : "no (translated)") << '\n'
        << "every cell in minor: " << (r.every_cell_in_minor ? "yes" : "no") << '\n'
        << "2-connected:         " << (r.two_connected ? "yes" : "no") << '\n'
        << "path-connected:      " << (r.path_connected ? "yes" : "no") << '\n'
        << "sidedness:           " << to_string(r.sidedness) << '\n';
    for (const std::string& msg : r.messages) out << "  note: " << msg << '\n';
  }
  return r.two_connected ? kExitOk : kExitDomain;
}

int cmd_corners(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const CornerProfile p = corners(load_one(o, in, err));
  if (o.json) {
    emit(out, to_json(p));
  } else {
    out << "lower:        " << cells_text(p.lower) << '\n'
        << "upper:        " << cells_text(p.upper) << '\n'
        << "coincidental: " << cells_text(coincidental_corners(p)) << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Factorization f = decompose(load_one(o, in, err));
  if (o.json) {
    emit(out, to_json(f));
    return kExitOk;
  }
  out << "coincidental corners: " << cells_text(f.coincidental) << '\n';
  for (std::size_t u = 0; u < f.factors.size(); ++u) {
    const Ladder& z = f.factors[u];
    out << "Z_" << u << ": " << z.rows() << "x" << z.cols() << " at offset ("
        << f.offsets[u].drow << "," << f.offsets[u].dcol << ")\n"
        << render_ascii(z) << '\n';
  }
  return kExitOk;
}

int cmd_classgroup(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Ladder y = load_one(o, in, err);
  const std::vector<BasisLabel> labels = basis(y);
  const Factorization f = decompose(y);
  const RelabelMap map = relabel(f);
  const CornerProfile p = corners(y);
  if (o.json) {
    json ideals = json::object(), local = json::object(), qprime = json::object();
    json names = json::array();
    for (const BasisLabel& l : labels) {
      names.push_back(to_string(l));
      ideals[to_string(l)] = to_json(ideal_generators(y, l));
      local[to_string(l)] = to_string(map.to_local.at(l));
    }
    for (int i = 1; i <= p.h() + 1; ++i)
      qprime[std::to_string(i)] = json{{"class", to_json(qprime_class(y, i))},
                                       {"generators", to_json(ideal_generators(y, QPrime{i}))}};
    emit(out, json{{"basis", names},
                   {"double_index", local},
                   {"ideals", ideals},
                   {"qprime", qprime},
                   {"rank", labels.size()}});
    return kExitOk;
  }
  out << "rank " << labels.size() << '\n';
  for (const BasisLabel& l : labels)
    out << "  " << to_string(l) << " = " << to_string(map.to_local.at(l)) << ": "
        << cells_text(ideal_generators(y, l)) << '\n';
  for (int i = 1; i <= p.h() + 1; ++i)
    out << "  [q'_" << i << "] = " << class_text(qprime_class(y, i)) << '\n';
  return kExitOk;
}

int cmd_canonical(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const DivisorClass omega = canonical_class(load_one(o, in, err));
  if (o.json)
    emit(out, to_json(omega));
  else
    out << class_text(omega) << '\n';
  return kExitOk;
}

int cmd_gorenstein(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const bool g = is_gorenstein(load_one(o, in, err));
  if (o.json)
    emit(out, json{{"gorenstein", g}});
  else
    out << (g ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_sdm(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const SdmReport r = classify(load_one(o, in, err));
  if (o.json) {
    emit(out, to_json(r));
    return kExitOk;
  }
  out << "rank of Cl:  " << r.rank << '\n'
      << "omega:       " << class_text(r.omega) << '\n'
      << "factors:     " << r.factors.size() << '\n';
  for (std::size_t u = 0; u < r.factors.size(); ++u) {
    const FactorSummary& s = r.factors[u];
    out << "  Z_" << u << " " << s.m << "x" << s.n
        << (s.gorenstein ? " Gorenstein" : " not Gorenstein") << ", omega image "
        << class_text(s.omega_image) << '\n';
  }
  out << "semidualizing classes: " << r.count << '\n';
  for (const DivisorClass& d : r.classes) out << "  " << class_text(d) << '\n';
  if (r.factors.size() == 1)
    out << "note: single-factor case uses the two-sided ladder theorem "
           "(semidualizing classes are exactly 0 and omega)\n";
  return kExitOk;
}

void emit_ladder(const Options& o, const Ladder& y, std::ostream& out) {
  if (o.json)
    emit(out, to_json(y));
  else
    out << render_ascii(y) << '\n';
}

int cmd_compose(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.inputs.empty()) throw UsageError("compose needs at least one --in");
  std::vector<Ladder> factors;
  for (const std::string& path : o.inputs) {
    std::vector<std::string> warnings;
    factors.push_back(parse_ladder(read_file(path), &warnings));
    for (const std::string& w : warnings) err << "warning: " << w << '\n';
  }
  emit_ladder(o, compose(factors), out);
  return kExitOk;
}

int cmd_antitranspose(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  emit_ladder(o, antitranspose(load_one(o, in, err)), out);
  return kExitOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::string grid = render_ascii(load_one(o, in, err), o.annotate);
  if (o.json)
    emit(out, json{{"grid", grid}});
  else
    out << grid << '\n';
  return kExitOk;
}

int cmd_construct2n(const Options& o, std::ostream& out) {
  if (o.sizes.empty()) throw UsageError("construct2n needs --sizes m1xn1,m2xn2,...");
  const auto sizes = parse_sizes(o.sizes);
  emit_ladder(o, construct_2N(static_cast<int>(sizes.size()), sizes), out);
  return kExitOk;
}

int cmd_nf(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.monomials.size() != 1) throw UsageError("nf needs exactly one --mono");
  const RewriteSystem rs(load_one(o, in, err));
  const Monomial nf = normal_form(load_monomial(o.monomials[0], o.degree_bound), rs);
  if (o.json)
    emit(out, to_json(nf));
  else
    out << to_string(nf) << '\n';
  return kExitOk;
}

int cmd_eq(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.monomials.size() != 2) throw UsageError("eq needs exactly two --mono");
  const RewriteSystem rs(load_one(o, in, err));
  const Monomial a = load_monomial(o.monomials[0], o.degree_bound);
  const Monomial b = load_monomial(o.monomials[1], o.degree_bound);
  const bool equal = equal_mod_minors(a, b, rs);
  if (o.json)
    emit(out, json{{"equal", equal},
                   {"normal_forms", json::array({to_json(normal_form(a, rs)),
                                                 to_json(normal_form(b, rs))})}});
  else
    out << (equal ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_witness(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const WitnessReport r = verify_witnesses(load_one(o, in, err));
  if (o.json) {
    emit(out, to_json(r));
  } else {
    out << "coincidental corner " << to_string(r.corner) << ", lambda01 = " << r.lambda01
        << ", lambda11 = " << r.lambda11 << '\n';
    if (r.vacuous()) out << "vacuous: no case hypothesis holds\n";
    for (const WitnessCase& c : r.cases) {
      if (!c.applicable) continue;
      out << c.name << ": " << (c.holds() ? "holds" : "FAILS") << '\n'
          << "  " << to_string(c.first.first) << " (x) " << to_string(c.first.second) << '\n'
          << "  " << to_string(c.second.first) << " (x) " << to_string(c.second.second)
          << '\n';
    }
  }
  return r.all_hold() ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Divisor class groups and semidualizing modules of 2x2 ladder determinantal rings",
               args.empty() ? "ladderctl" : args.front()};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    bool multi_in;
  };
  const std::vector<Command> commands = {
      {"validate", "check the ladder axioms and 2-connectedness", false},
      {"corners", "list lower, upper and coincidental inside corners", false},
      {"decompose", "split at coincidental corners into Z_0 # ... # Z_w", false},
      {"classgroup", "basis of the divisor class group and its ideals", false},
      {"canonical", "canonical class in the class group basis", false},
      {"gorenstein", "Gorenstein test", false},
      {"sdm", "semidualizing module classes", false},
      {"compose", "glue ladders with #", true},
      {"antitranspose", "reflect across the antidiagonal", false},
      {"render", "draw the ladder as a grid", false},
      {"construct2n", "compose non-square matrices into a ladder with 2^N classes", false},
      {"nf", "normal form of a monomial modulo the 2-minors", false},
      {"eq", "test two monomials for equality modulo the 2-minors", false},
      {"witness", "check the multiplication-map witness identities", false},
  };
  for (const Command& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    auto* in_opt = sub->add_option("--in", o.inputs, "ladder file (JSON or ASCII grid)");
    if (!s.multi_in) in_opt->expected(0, 1);
    auto* json_flag = sub->add_flag("--json", o.json, "machine-readable output");
    auto* pretty_flag = sub->add_flag("--pretty", o.pretty, "human-readable output (default)");
    json_flag->excludes(pretty_flag);
    const std::string name = s.name;
    if (name == "render") sub->add_flag("--annotate", o.annotate, "mark inside corners L/U/C");
    if (name == "construct2n") sub->add_option("--sizes", o.sizes, "m1xn1,m2xn2,...");
    if (name == "nf" || name == "eq" || name == "witness")
      sub->add_option("--degree-bound", o.degree_bound, "largest monomial degree accepted")
          ->check(CLI::Range(1, kMaxDegreeBound));
    if (name == "nf" || name == "eq")
      sub->add_option("--mono", o.monomials, "monomial JSON (inline or file path)");
  }

  std::vector<const char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"ladderctl"} : args;
  for (const std::string& a : storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "validate") return cmd_validate(o, in, out, err);
    if (cmd == "corners") return cmd_corners(o, in, out, err);
    if (cmd == "decompose") return cmd_decompose(o, in, out, err);
    if (cmd == "classgroup") return cmd_classgroup(o, in, out, err);
    if (cmd == "canonical") return cmd_canonical(o, in, out, err);
    if (cmd == "gorenstein") return cmd_gorenstein(o, in, out, err);
    if (cmd == "sdm") return cmd_sdm(o, in, out, err);
    if (cmd == "compose") return cmd_compose(o, out, err);
    if (cmd == "antitranspose") return cmd_antitranspose(o, in, out, err);
    if (cmd == "render") return cmd_render(o, in, out, err);
    if (cmd == "construct2n") return cmd_construct2n(o, out);
    if (cmd == "nf") return cmd_nf(o, in, out, err);
    if (cmd == "eq") return cmd_eq(o, in, out, err);
    if (cmd == "witness") return cmd_witness(o, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  err << "error: unknown command '" << cmd << "'\n";
  return kExitUsage;
}

}  // namespace ladder::cli
