// ordsum CLI: expression parsing, canonical rendering and a subcommand per
// library operation. Exit codes: 0 success, 1 check failure, 2 usage or
// parse error, 3 capacity error. With --json every result is emitted as one
// line-delimited record {"v":1,"kind":...,"expr":...,"meta":{...}}.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordsum/bicolor.hpp"
#include "ordsum/complicated.hpp"
#include "ordsum/expr.hpp"
#include "ordsum/instances.hpp"
#include "ordsum/ordinal.hpp"
#include "ordsum/order_term.hpp"
#include "ordsum/selftest.hpp"
#include "ordsum/sgc.hpp"
#include "ordsum/shuffle.hpp"
#include "ordsum/sift.hpp"

namespace {

using nlohmann::json;
using namespace ordsum;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr const char* kUsage =
    "usage: ordsum [--json] <command> [args]\n"
    "commands:\n"
    "  ord-sum --op {hess|lcm|dyn|min|fsplit} A B\n"
    "  instances A B\n"
    "  normalize T\n"
    "  eq T1 T2\n"
    "  decompose --class C T\n"
    "  simple-sum --class C A B\n"
    "  sift --scheme hess A B | sift --scheme-file FILE A B\n"
    "  shuffle-sum S1 S2\n"
    "  encode BITS\n"
    "  decode T\n"
    "  check-table FILE\n"
    "  bicolor enum M N [--list]\n"
    "  selftest [SUITE]\n"
    "classes: W, W*, S, P(w^2), genQ, genOmegaQ, genQ1, zero, all,\n"
    "         perp(...), dual(...), inv(...), plus(...,...), times(...,...)\n"
    "env: ORDSUM_CAPACITY=maxexp,maxcoeff overrides enumeration bounds\n";

struct Output {
  bool as_json = false;

  void value(const std::string& kind, const std::string& expr,
             json meta = json::object()) const {
    if (as_json) {
      json rec{{"v", 1}, {"kind", kind}, {"expr", expr}, {"meta", meta}};
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << expr << "\n";
    }
  }
};

InstanceLimits limits_from_env() {
  InstanceLimits lim;
  if (const char* env = std::getenv("ORDSUM_CAPACITY")) {
    std::string s(env);
    std::size_t comma = s.find(',');
    try {
      if (comma == std::string::npos) {
        lim.max_exponent = lim.max_coeff = std::stoull(s);
      } else {
        lim.max_exponent = std::stoull(s.substr(0, comma));
        lim.max_coeff = std::stoull(s.substr(comma + 1));
      }
    } catch (const std::exception&) {
      throw UsageError("ORDSUM_CAPACITY must be N or N,M");
    }
  }
  return lim;
}

std::string need(const std::vector<std::string>& args, std::size_t i,
                 const char* what) {
  if (i >= args.size()) throw UsageError(std::string("missing ") + what);
  return args[i];
}

OrdinalSum ordinal_op(const std::string& name) {
  if (name == "hess") return hessenberg;
  if (name == "lcm") return lcm_sum;
  if (name == "dyn") return dynamic_sum;
  if (name == "min") return min_sum;
  if (name == "fsplit") return fsplit_sum;
  throw UsageError("unknown --op: " + name);
}

std::vector<TableRow> read_table_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table file: " + path);
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t bar = line.find('|', start);
      fields.push_back(line.substr(start, bar - start));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (fields.size() != 3)
      throw UsageError("table rows must be 'lhs | rhs | result'");
    rows.push_back(
        {parse_term(fields[0]), parse_term(fields[1]), parse_term(fields[2])});
  }
  return rows;
}

FiltrationScheme read_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open scheme file: " + path);
  FiltrationScheme s;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t last = line.find_last_not_of(" \t\r");
    if (last == std::string::npos) continue;
    line.erase(last + 1);
    std::size_t split = line.find_last_of(" \t");
    if (split == std::string::npos)
      throw UsageError("scheme lines are '<descriptor> <level-sum>'");
    std::string desc = line.substr(0, split);
    std::string sum = line.substr(split + 1);
    s.levels.push_back({parse_descriptor(desc), level_sum_by_name(sum), sum});
  }
  if (s.levels.empty()) throw UsageError("scheme file declares no levels");
  return s;
}

int dispatch(const std::vector<std::string>& args, const Output& out) {
  const std::string& cmd = need(args, 0, "command");

  if (cmd == "ord-sum") {
    if (need(args, 1, "--op") != "--op") throw UsageError("expected --op");
    OrdinalSum op = ordinal_op(need(args, 2, "operation name"));
    Ordinal a = parse_ordinal(need(args, 3, "first ordinal"));
    Ordinal b = parse_ordinal(need(args, 4, "second ordinal"));
    out.value("ordinal", ord_to_string(op(a, b)));
    return 0;
  }

  if (cmd == "instances") {
    Ordinal a = parse_ordinal(need(args, 1, "first ordinal"));
    Ordinal b = parse_ordinal(need(args, 2, "second ordinal"));
    InstanceLimits lim = limits_from_env();
    InstanceSet s = enumerate_instances(a, b, lim);
    for (const Ordinal& g : s.types) out.value("ordinal", ord_to_string(g));
    BoundsReport rep = check_bounds(a, b, lim);
    std::string bounds = "bounds: " + ord_to_string(rep.lower) +
                         " <= instances <= " + ord_to_string(rep.upper) +
                         (rep.pass ? " (both attained)" : " (VIOLATED)");
    out.value("bounds", bounds,
              json{{"min", ord_to_string(rep.lower)},
                   {"max", ord_to_string(rep.upper)},
                   {"pass", rep.pass},
                   {"count", s.types.size()}});
    return rep.pass ? 0 : 1;
  }

  if (cmd == "normalize") {
    out.value("term", term_to_string(parse_term(need(args, 1, "term"))));
    return 0;
  }

  if (cmd == "eq") {
    bool eq = parse_term(need(args, 1, "first term")) ==
              parse_term(need(args, 2, "second term"));
    out.value("bool", eq ? "true" : "false");
    return eq ? 0 : 1;
  }

  if (cmd == "decompose") {
    if (need(args, 1, "--class") != "--class") throw UsageError("expected --class");
    SgcDescriptor c = parse_descriptor(need(args, 2, "class"));
    OrderTerm t = parse_term(need(args, 3, "term"));
    Decomposition d = sgc_decompose(c, t);
    if (out.as_json) {
      out.value("term", term_to_string(d.left), json{{"part", "left"}});
      out.value("term", term_to_string(d.right), json{{"part", "right"}});
    } else {
      std::cout << "left: " << term_to_string(d.left) << "\n";
      std::cout << "right: " << term_to_string(d.right) << "\n";
    }
    return 0;
  }

  if (cmd == "simple-sum") {
    if (need(args, 1, "--class") != "--class") throw UsageError("expected --class");
    SgcDescriptor c = parse_descriptor(need(args, 2, "class"));
    OrderTerm a = parse_term(need(args, 3, "first term"));
    OrderTerm b = parse_term(need(args, 4, "second term"));
    out.value("term", term_to_string(simple_sum(c, a, b)));
    return 0;
  }

  if (cmd == "sift") {
    FiltrationScheme scheme;
    std::size_t next = 1;
    std::string kind = need(args, next++, "--scheme");
    if (kind == "--scheme") {
      std::string name = need(args, next++, "scheme name");
      if (name != "hess") throw UsageError("unknown scheme: " + name);
      scheme = hessenberg_scheme();
    } else if (kind == "--scheme-file") {
      scheme = read_scheme_file(need(args, next++, "scheme file"));
    } else {
      throw UsageError("expected --scheme or --scheme-file");
    }
    OrderTerm a = parse_term(need(args, next, "first term"));
    OrderTerm b = parse_term(need(args, next + 1, "second term"));
    out.value("term", term_to_string(sifted_sum(scheme, a, b)));
    return 0;
  }

  if (cmd == "shuffle-sum") {
    OrderTerm a = parse_term(need(args, 1, "first shuffle"));
    OrderTerm b = parse_term(need(args, 2, "second shuffle"));
    out.value("term", term_to_string(shuffle_sum_S(a, b)));
    return 0;
  }

  if (cmd == "encode") {
    BinaryWord w(args.size() > 1 ? args[1] : "");
    out.value("term", term_to_string(encode_word(w)));
    return 0;
  }

  if (cmd == "decode") {
    BinaryWord w = decode_word(parse_term(need(args, 1, "term")));
    out.value("word", w.bits);
    return 0;
  }

  if (cmd == "check-table") {
    TableReport conflicts;
    SumTable t = build_sum_table(read_table_rows(need(args, 1, "table file")),
                                 &conflicts);
    TableReport rep = check_good_table(t);
    rep.pass = rep.pass && conflicts.pass;
    rep.violations.insert(rep.violations.begin(), conflicts.violations.begin(),
                          conflicts.violations.end());
    if (out.as_json) {
      out.value("report", rep.pass ? "pass" : "fail",
                json{{"pass", rep.pass},
                     {"carrier", t.carrier.size()},
                     {"violations", rep.violations}});
    } else {
      std::cout << "carrier: " << t.carrier.size() << " terms\n";
      for (const std::string& v : rep.violations) std::cout << "violation: " << v << "\n";
      std::cout << (rep.pass ? "good sum table" : "not a good sum table") << "\n";
    }
    return rep.pass ? 0 : 1;
  }

  if (cmd == "bicolor") {
    if (need(args, 1, "enum") != "enum") throw UsageError("expected 'bicolor enum'");
    std::size_t m = 0, n = 0;
    bool list = false;
    try {
      m = std::stoull(need(args, 2, "M"));
      n = std::stoull(need(args, 3, "N"));
    } catch (const std::exception&) {
      throw UsageError("bicolor enum expects naturals M N");
    }
    for (std::size_t i = 4; i < args.size(); ++i) {
      if (args[i] == "--list")
        list = true;
      else
        throw UsageError("unknown flag: " + args[i]);
    }
    auto all = enumerate_bicolorings(m, n);
    out.value("count", std::to_string(all.size()),
              json{{"m", m}, {"n", n}});
    if (list) {
      for (const BiColoring& c : all) {
        if (out.as_json) {
          std::string flat;
          for (std::uint8_t v : c.p) flat += char('0' + v);
          out.value("coloring", flat, json{{"m", m}, {"n", n}});
        } else {
          std::cout << "\n" << bicoloring_to_string(c);
        }
      }
    }
    return 0;
  }

  if (cmd == "selftest") {
    std::string suite = args.size() > 1 ? args[1] : "all";
    std::ostringstream buf;
    int failures = run_selftest(suite, buf);
    if (out.as_json) {
      std::istringstream lines(buf.str());
      std::string line;
      while (std::getline(lines, line)) out.value("check", line);
    } else {
      std::cout << buf.str();
    }
    return failures == 0 ? 0 : 1;
  }

  throw UsageError("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args;
  Output out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--json")
      out.as_json = true;
    else
      args.push_back(std::move(a));
  }
  if (args.empty()) {
    std::cerr << kUsage;
    return 2;
  }
  try {
    return dispatch(args, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << kUsage;
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
