#include "qflag/cli.hpp"

#include "qflag/calculus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

namespace qflag {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int rank = 2;
  std::string word = "nice";
  std::string tangent;
  std::vector<std::string> sets;
  std::string format = "text";
  int kmax = -1;
  std::string expect;
  std::string expr;
  std::string oq;
  int r = 1;
  int degree = 1;
  bool witness = false;
  bool involution = false;
  std::size_t max_rules = CompletionLimits{}.max_rules;
  unsigned threads = 0;
};

struct Output {
  Json json;
  std::string text;
  std::string dot;
  std::string key;  // compared against --expect
};

std::string join(const std::vector<std::string> &v, const std::string &sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string weight_str(const std::vector<int> &w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::map<std::string, RatQ> parse_sets(const std::vector<std::string> &sets) {
  std::map<std::string, RatQ> vars;
  for (const auto &s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("--set expects name=value, got '" + s + "'");
    vars[s.substr(0, eq)] = RatQ::parse(s.substr(eq + 1));
  }
  return vars;
}

std::vector<std::string> split_tangent(const std::string &s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ';')) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("empty tangent expression in '" + s + "'");
    parts.push_back(cur.substr(b, e - b + 1));
  }
  if (parts.empty()) throw Error("empty tangent list");
  return parts;
}

TangentSpace make_tangent(const Uq &uq, const Options &o) {
  if (!o.tangent.empty()) return tangent_from_exprs(uq, split_tangent(o.tangent), parse_sets(o.sets));
  if (!o.sets.empty()) throw Error("--set requires --tangent");
  return tangent_from_word(uq, parse_word(o.word, uq.rank()));
}

Json tangent_json(const TangentSpace &t) {
  Json j;
  j["rank"] = t.n;
  if (t.word) j["word"] = word_str(*t.word, t.n);
  else j["tangent"] = t.exprs;
  j["labels"] = t.labels;
  return j;
}

std::string dims_str(const std::vector<std::uint64_t> &d) {
  std::vector<std::string> s;
  for (auto x : d) s.push_back(std::to_string(x));
  return join(s, " ");
}

Output cmd_roots(const Options &o) {
  Uq uq(o.rank);
  TangentSpace t = tangent_from_word(uq, parse_word(o.word, o.rank));
  Output out;
  out.json = tangent_json(t);
  Json rows = Json::array();
  std::ostringstream os;
  os << "word: " << word_str(*t.word, t.n) << "\n";
  for (std::size_t k = 0; k < t.dim(); ++k) {
    std::string v = uq.render(t.basis[k]);
    rows.push_back({{"root", root_label(t.roots[k])}, {"label", t.labels[k]}, {"vector", v}});
    os << t.labels[k] << "  " << root_label(t.roots[k]) << "  " << v << "\n";
  }
  out.json["roots"] = rows;
  out.text = os.str();
  return out;
}

Output cmd_coproduct(const Options &o) {
  if (o.expr.empty()) throw Error("coproduct requires --expr");
  Uq uq(o.rank);
  UqElement x = parse_uq(uq, o.expr, parse_sets(o.sets));
  std::string c = uq.render(uq.coproduct(x));
  Output out;
  out.json = {{"rank", o.rank}, {"expr", o.expr}, {"coproduct", c}};
  out.text = "coproduct: " + c + "\n";
  return out;
}

Output cmd_pair(const Options &o) {
  if (o.expr.empty() || o.oq.empty()) throw Error("pair requires --expr and --oq");
  Uq uq(o.rank);
  UqElement x = parse_uq(uq, o.expr, parse_sets(o.sets));
  VectorRep rep(uq);
  RatQ v = rep.pair(x, parse_oq_word(o.oq, o.rank));
  Output out;
  out.json = {{"rank", o.rank}, {"expr", o.expr}, {"oq", o.oq}, {"pairing", v.str()}};
  out.text = "pairing: " + v.str() + "\n";
  out.key = v.str();
  return out;
}

Output cmd_coideal(const Options &o) {
  Uq uq(o.rank);
  TangentSpace t = make_tangent(uq, o);
  CoidealReport r = coideal_check(uq, t);
  Output out;
  out.json = tangent_json(t);
  out.json["verdict"] = verdict_str(r.verdict);
  out.json["right"] = r.right;
  out.json["left"] = r.left;
  Json ws = Json::array();
  std::ostringstream os;
  os << "verdict: " << verdict_str(r.verdict) << "\n";
  for (const auto &w : r.witnesses) {
    ws.push_back({{"side", w.side}, {"element", t.labels[w.element]}, {"fixed", w.fixed},
                  {"offending", w.offending}});
    if (o.witness)
      os << "witness: " << w.side << " " << t.labels[w.element] << " fixed " << w.fixed
         << " offending " << w.offending << "\n";
  }
  out.json["witness"] = ws;
  out.text = os.str();
  out.key = verdict_str(r.verdict);
  return out;
}

Output cmd_relations(const Options &o) {
  Uq uq(o.rank);
  TangentSpace t = make_tangent(uq, o);
  RelationSpace rs = quadratic_relations(uq, t);
  Alphabet a = t.alphabet();
  Output out;
  out.json = tangent_json(t);
  std::vector<std::string> rels;
  for (const auto &f : rs.all()) rels.push_back(f.render(a, "(x)"));
  out.json["relations"] = rels;
  out.text = "relations: " + std::to_string(rels.size()) + "\n";
  for (const auto &s : rels) out.text += s + "\n";
  out.key = std::to_string(rels.size());
  return out;
}

Output cmd_exterior(const Options &o) {
  Uq uq(o.rank);
  TangentSpace t = make_tangent(uq, o);
  RelationSpace rs = quadratic_relations(uq, t);
  int kmax = o.kmax >= 0 ? o.kmax : default_kmax(t);
  DimensionTable d = exterior_dims(t, rs, kmax, {o.max_rules, CompletionLimits{}.max_group_words});
  Output out;
  out.json = tangent_json(t);
  out.json["dims"] = d.dims;
  out.json["classical"] = d.classical;
  out.text = "dims: " + dims_str(d.dims) + "  classical: " + (d.classical ? "yes" : "no") + "\n";
  out.key = d.classical ? "classical" : "nonclassical";
  return out;
}

Output cmd_frobenius(const Options &o) {
  Uq uq(o.rank);
  TangentSpace t = make_tangent(uq, o);
  RelationSpace rs = quadratic_relations(uq, t);
  FrobeniusReport f = frobenius_report(t, rs, {o.max_rules, CompletionLimits{}.max_group_words});
  Output out;
  out.json = tangent_json(t);
  out.json["top_degree"] = f.top_degree;
  out.json["top_dimension"] = f.top_dimension;
  bool nondeg = std::all_of(f.pairing_nondegenerate.begin(), f.pairing_nondegenerate.end(),
                            [](bool b) { return b; });
  out.json["nondegenerate"] = nondeg;
  std::vector<std::string> nak;
  for (const auto &c : f.nakayama) nak.push_back(c.str());
  out.json["nakayama"] = nak;
  // A single sign when every generator shares it, 0 otherwise.
  int sign = f.nakayama_sign.empty() ? 0 : f.nakayama_sign.front();
  for (int s : f.nakayama_sign)
    if (s != sign) sign = 0;
  out.json["nakayama_sign"] = sign;
  std::ostringstream os;
  os << "top_degree: " << f.top_degree << "\ntop_dimension: " << f.top_dimension
     << "\nnondegenerate: " << (nondeg ? "yes" : "no") << "\nnakayama: " << join(nak, " ")
     << "\nnakayama_sign: " << sign << "\n";
  out.text = os.str();
  out.key = std::to_string(sign);
  return out;
}

Output cmd_lines(const Options &o) {
  Uq uq(o.rank);
  TangentSpace t = make_tangent(uq, o);
  RelationSpace rs = quadratic_relations(uq, t);
  DimensionTable d = exterior_dims(t, rs, default_kmax(t), {o.max_rules, CompletionLimits{}.max_group_words});
  auto ws = line_decomposition(t, d, o.degree);
  Output out;
  out.json = tangent_json(t);
  out.json["degree"] = o.degree;
  out.json["weights"] = ws;
  std::vector<std::string> s;
  for (const auto &w : ws) s.push_back(weight_str(w));
  out.text = "weights: " + join(s, " ") + "\n";
  return out;
}

Output cmd_grassmann(const Options &o) {
  Uq uq(o.rank);
  TangentSpace t = tangent_from_word(uq, parse_word(o.word, o.rank));
  GrassmannReport g = grassmann_restriction(uq, t, o.r);
  Output out;
  out.json = tangent_json(t);
  out.json["r"] = o.r;
  out.json["restricted"] = g.restricted.labels;
  out.json["closed"] = g.closed;
  out.json["failure"] = g.failure;
  out.text = "restricted: " + join(g.restricted.labels, " ") + "\nclosed: " + (g.closed ? "yes" : "no") + "\n";
  if (!g.closed) out.text += "failure: " + g.failure + "\n";
  out.key = g.closed ? "closed" : "open";
  return out;
}

Output cmd_dbar_kernel(const Options &o) {
  Uq uq(o.rank);
  TangentSpace t = make_tangent(uq, o);
  VectorRep rep(uq);
  auto ker = dbar_kernel(rep, all_oq_words(o.rank, o.degree), t);
  Output out;
  out.json = tangent_json(t);
  out.json["degree"] = o.degree;
  std::vector<std::string> s;
  for (const auto &e : ker) s.push_back(e.str());
  out.json["kernel"] = s;
  out.text = "kernel: " + std::to_string(s.size()) + "\n";
  for (const auto &e : s) out.text += e + "\n";
  out.key = std::to_string(s.size());
  return out;
}

Output cmd_classes(const Options &o) {
  check_rank(o.rank);
  ClassGraph g = commutation_classes(o.rank);
  Output out;
  Json nodes = Json::array();
  std::ostringstream os;
  os << "classes: " << g.nodes.size() << "\nreduced_words: " << g.reduced_words
     << "\nedges: " << g.edges.size() << "\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    std::string rep = word_str(g.nodes[k].rep, g.n);
    nodes.push_back({{"rep", rep}, {"members", g.nodes[k].members},
                     {"opposite", word_str(g.nodes[g.opposite[k]].rep, g.n)}});
    os << rep << "  members " << g.nodes[k].members << "\n";
  }
  Json edges = Json::array();
  for (const auto &[a, b] : g.edges)
    edges.push_back({word_str(g.nodes[a].rep, g.n), word_str(g.nodes[b].rep, g.n)});
  out.json = {{"rank", g.n}, {"reduced_words", g.reduced_words}, {"classes", nodes}, {"edges", edges}};
  out.text = os.str();
  out.dot = to_dot(g, o.involution);
  out.key = std::to_string(g.nodes.size());
  return out;
}

struct SurveyRow {
  std::string rep;
  Verdict verdict = Verdict::neither;
  std::vector<std::uint64_t> dims;
  bool classical = false;
  bool truncated = false;
};

Output cmd_survey(const Options &o) {
  check_rank(o.rank);
  ClassGraph g = commutation_classes(o.rank);
  std::vector<SurveyRow> rows(g.nodes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Uq uq(o.rank);
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      SurveyRow &row = rows[k];
      row.rep = word_str(g.nodes[k].rep, g.n);
      TangentSpace t = tangent_from_word(uq, g.nodes[k].rep);
      row.verdict = coideal_check(uq, t).verdict;
      if (row.verdict == Verdict::neither) continue;
      try {
        RelationSpace rs = quadratic_relations(uq, t);
        DimensionTable d = exterior_dims(t, rs, default_kmax(t), {o.max_rules, CompletionLimits{}.max_group_words});
        row.dims = d.dims;
        row.classical = d.classical;
      } catch (const ResourceLimit &) {
        row.truncated = true;
      }
    }
  };
  unsigned nt = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, static_cast<unsigned>(rows.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
  for (auto &th : pool) th.join();

  Output out;
  Json js = Json::array();
  std::ostringstream os;
  std::size_t truncated = 0;
  for (const auto &row : rows) {
    Json j = {{"rep", row.rep}, {"verdict", verdict_str(row.verdict)}};
    os << row.rep << "  " << verdict_str(row.verdict);
    if (row.truncated) {
      ++truncated;
      j["truncated"] = true;
      os << "  truncated";
    } else if (row.verdict != Verdict::neither) {
      j["dims"] = row.dims;
      j["classical"] = row.classical;
      os << "  dims: " << dims_str(row.dims) << "  classical: " << (row.classical ? "yes" : "no");
    }
    os << "\n";
    js.push_back(j);
  }
  if (truncated) os << "# truncated: " << truncated << " classes exceeded resource limits\n";
  out.json = {{"rank", o.rank}, {"rows", js}, {"truncated", truncated}};
  out.text = os.str();
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Quantum tangent spaces and exterior algebras for U_q(sl_{n+1})", "qflag"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char *name;
    const char *help;
    Output (*run)(const Options &);
    bool tangent, expect, dot;
  };
  const std::vector<Command> commands = {
      {"roots", "Lusztig root vectors of a reduced word", cmd_roots, false, false, false},
      {"coproduct", "coproduct of an expression", cmd_coproduct, false, false, false},
      {"pair", "Hopf pairing of an expression with an O_q word", cmd_pair, false, true, false},
      {"coideal", "tangent-space verdict", cmd_coideal, true, true, false},
      {"relations", "degree-two relations of the maximal prolongation", cmd_relations, true, true, false},
      {"exterior", "graded dimensions of the exterior algebra", cmd_exterior, true, true, false},
      {"frobenius", "Frobenius pairing and Nakayama automorphism", cmd_frobenius, true, true, false},
      {"lines", "weights of the line-module decomposition", cmd_lines, true, false, false},
      {"grassmann", "restriction to a Grassmannian", cmd_grassmann, false, true, false},
      {"dbar-kernel", "joint kernel of the tangent vectors on O_q words", cmd_dbar_kernel, true, true, false},
      {"classes", "commutation classes of reduced words of w0", cmd_classes, false, true, true},
      {"survey", "verdict and dimensions for every commutation class", cmd_survey, false, false, false},
  };
  std::vector<std::pair<CLI::App *, const Command *>> subs;
  for (const auto &s : commands) {
    CLI::App *sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--rank,-n", o.rank, "rank n of sl_{n+1}")->check(CLI::PositiveNumber);
    std::vector<std::string> formats = {"text", "json"};
    if (s.dot) formats.push_back("dot");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    if (s.expect) sub->add_option("--expect", o.expect, "exit 1 unless the result matches");
    std::string name = s.name;
    if (s.tangent || name == "roots" || name == "grassmann") {
      auto *w = sub->add_option("--word,-w", o.word, "reduced word: digits, comma list, nice or nice-op");
      if (s.tangent) {
        auto *t = sub->add_option("--tangent", o.tangent, "semicolon-separated expressions");
        w->excludes(t);
        sub->add_option("--set", o.sets, "bind an expression variable, name=value");
      }
    }
    if (name == "coproduct" || name == "pair") {
      sub->add_option("--expr", o.expr, "U_q expression")->required();
      sub->add_option("--set", o.sets, "bind an expression variable, name=value");
    }
    if (name == "pair") sub->add_option("--oq", o.oq, "O_q word, e.g. u[1,2]u[2,1]")->required();
    if (name == "exterior") sub->add_option("--kmax", o.kmax, "highest degree computed");
    if (name == "exterior" || name == "frobenius" || name == "lines" || name == "survey")
      sub->add_option("--max-rules", o.max_rules, "rewriting rule cap per completion");
    if (name == "lines" || name == "dbar-kernel") sub->add_option("--degree,-k", o.degree, "degree");
    if (name == "grassmann") sub->add_option("--r", o.r, "crossed simple root");
    if (name == "coideal") sub->add_flag("--witness", o.witness, "print failing coproduct legs");
    if (name == "classes") sub->add_flag("--involution", o.involution, "draw the opposite involution");
    if (name == "survey") sub->add_option("--threads", o.threads, "worker threads, 0 for all cores");
    subs.emplace_back(sub, &s);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Command *cmd = nullptr;
  for (const auto &[sub, s] : subs)
    if (sub->parsed()) cmd = s;
  try {
    check_rank(o.rank);
    Output res = cmd->run(o);
    if (o.format == "json") out << res.json.dump(2) << "\n";
    else if (o.format == "dot") out << res.dot;
    else out << res.text;
    if (!o.expect.empty() && o.expect != res.key) {
      err << "expectation failed: expected " << o.expect << ", got " << res.key << "\n";
      return 1;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace qflag
