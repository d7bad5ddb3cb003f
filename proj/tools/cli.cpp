#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lg/cut.hpp"
#include "lg/folnb.hpp"
#include "lg/printer.hpp"
#include "lg/script.hpp"
#include "lg/serialize.hpp"

namespace lg::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised to leave a command with an exit code after printing `msg`.
struct Stop {
  int code;
  std::string msg;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Stop{kParse, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Stop{kInternal, "cannot write " + path};
  out << text;
}

Module load(const std::string& path) {
  try {
    return parse_module(read_file(path));
  } catch (const ParseError& e) {
    throw Stop{kParse, path + ":" + e.what()};
  }
}

// Levels first, then the clause rules.
void stratify(Module& m, const std::string& path) {
  std::string why;
  if (!m.th.infer_levels(&why)) throw Stop{kStrat, path + ": " + why};
  auto issues = m.th.stratify();
  if (!issues.empty()) {
    std::string msg;
    for (const auto& i : issues) msg += (msg.empty() ? "" : "\n") + path + ": " + i.message;
    throw Stop{kStrat, msg};
  }
}

Module load_checked(const std::string& path) {
  Module m = load(path);
  stratify(m, path);
  return m;
}

struct Outcome {
  std::string name;
  bool ok = false;
  std::string why;
  Deriv d;
};

Outcome prove(const Module& m, const TheoremDecl& t) {
  Outcome o;
  o.name = t.name;
  if (!t.proof) {
    o.why = "no proof";
    return o;
  }
  try {
    o.d = elaborate_script(m, t.seq, *t.proof);
  } catch (const ScriptError& e) {
    o.why = e.what();
    return o;
  } catch (const TypeError& e) {
    o.why = e.what();
    return o;
  }
  if (auto v = check(m.th, o.d)) {
    o.why = "at " + show_path(v->path) + " (" + v->rule + "): " + v->reason;
    return o;
  }
  o.ok = true;
  return o;
}

Deriv theorem_deriv(const Module& m, const std::string& name) {
  const TheoremDecl* t = m.theorem(name);
  if (!t) throw Stop{kViolation, "no theorem named " + name};
  Outcome o = prove(m, *t);
  if (!o.ok) throw Stop{kViolation, name + ": " + o.why};
  return o.d;
}

bool is_folnb_doc(const std::string& text) {
  try {
    return json::parse(text).value("kind", std::string()) == "folnb";
  } catch (const json::exception&) {
    return false;
  }
}

Deriv read_lg(const Module& m, const std::string& path) {
  try {
    return deriv_from_json(m, read_file(path));
  } catch (const FormatError& e) {
    throw Stop{kParse, path + ": " + e.what()};
  }
}

FDeriv read_folnb(const Module& m, const std::string& path) {
  try {
    return fderiv_from_json(m, read_file(path));
  } catch (const FormatError& e) {
    throw Stop{kParse, path + ": " + e.what()};
  }
}

// ------------------------------------------------------------ verbs

int cmd_check(const std::string& file, const std::string& only, const std::string& dpath, bool as_json,
              std::ostream& out) {
  Module m = load_checked(file);
  if (!dpath.empty()) {
    std::string text = read_file(dpath);
    std::optional<Violation> v;
    if (is_folnb_doc(text))
      v = check_folnb(m.th, read_folnb(m, dpath));
    else
      v = check(m.th, read_lg(m, dpath));
    if (as_json) {
      json r = {{"format", kFormatVersion}, {"derivation", dpath}, {"ok", !v}};
      if (v) r["reason"] = "at " + show_path(v->path) + " (" + v->rule + "): " + v->reason;
      out << r.dump(2) << "\n";
    } else if (v) {
      out << "FAIL " << dpath << " at " << show_path(v->path) << " (" << v->rule << "): " << v->reason << "\n";
    } else {
      out << "ok " << dpath << "\n";
    }
    return v ? kViolation : kOk;
  }
  std::vector<const TheoremDecl*> todo;
  for (const auto& t : m.theorems)
    if (only.empty() || t.name == only) todo.push_back(&t);
  if (!only.empty() && todo.empty()) throw Stop{kViolation, "no theorem named " + only};
  std::vector<std::future<Outcome>> jobs;
  for (const auto* t : todo) jobs.push_back(std::async(std::launch::async, [&m, t] { return prove(m, *t); }));
  bool all = true;
  json rep = json::array();
  for (auto& j : jobs) {
    Outcome o = j.get();
    all = all && o.ok;
    if (as_json) {
      json r = {{"name", o.name}, {"ok", o.ok}};
      if (o.ok) {
        r["height"] = o.d->height;
        r["size"] = o.d->size;
        r["cut_free"] = is_cut_free(o.d);
      } else {
        r["reason"] = o.why;
      }
      rep.push_back(r);
    } else if (o.ok) {
      out << "ok " << o.name << " (height " << o.d->height << ", size " << o.d->size << ")\n";
    } else {
      out << "FAIL " << o.name << ": " << o.why << "\n";
    }
  }
  if (as_json) out << json{{"format", kFormatVersion}, {"file", file}, {"theorems", rep}}.dump(2) << "\n";
  return all ? kOk : kViolation;
}

int cmd_normalize(const std::string& file, const std::string& thm, const std::string& dpath,
                  const std::string& outp, const std::string& trace, bool as_json, std::ostream& out) {
  Module m = load_checked(file);
  if (thm.empty() == dpath.empty()) throw Stop{kParse, "normalize needs one of --theorem or --derivation"};
  Deriv d = dpath.empty() ? theorem_deriv(m, thm) : read_lg(m, dpath);
  if (auto v = check(m.th, d)) throw Stop{kViolation, "input does not check: " + v->reason};
  NormalizeResult r = normalize(m.th, d);
  if (!r.ok) throw Stop{kInternal, "normalization failed: " + r.why};
  if (auto v = check(m.th, r.result))
    throw Stop{kInternal, "normal form does not check at " + show_path(v->path) + ": " + v->reason};
  if (!outp.empty()) write_file(outp, deriv_to_json(r.result));
  if (!trace.empty()) {
    std::string lines;
    for (const auto& s : r.trace)
      lines += json{{"path", s.path}, {"case", s.label}, {"pre_height", s.pre_height},
                    {"post_height", s.post_height}}.dump() + "\n";
    write_file(trace, lines);
  }
  if (as_json) {
    out << json{{"format", kFormatVersion}, {"steps", r.trace.size()}, {"height_before", d->height},
                {"height_after", r.result->height}, {"size_before", d->size}, {"size_after", r.result->size}}
               .dump(2)
        << "\n";
  } else {
    out << "normalized in " << r.trace.size() << " steps, height " << d->height << " -> " << r.result->height
        << ", size " << d->size << " -> " << r.result->size << "\n";
    if (outp.empty()) out << deriv_to_json(r.result);
  }
  return kOk;
}

Deriv cut_free(const Module& m, Deriv d) {
  if (is_cut_free(d)) return d;
  NormalizeResult r = normalize(m.th, d);
  if (!r.ok) throw Stop{kInternal, "normalization failed: " + r.why};
  return r.result;
}

int cmd_translate(const std::string& file, const std::string& thm, const std::string& dpath,
                  const std::string& to, const std::string& outp, std::ostream& out) {
  Module m = load_checked(file);
  if (thm.empty() == dpath.empty()) throw Stop{kParse, "translate needs one of --theorem or --derivation"};
  std::string text;
  try {
    if (to == "folnb") {
      Deriv d = dpath.empty() ? theorem_deriv(m, thm) : read_lg(m, dpath);
      if (auto v = check(m.th, d)) throw Stop{kViolation, "input does not check: " + v->reason};
      d = cut_free(m, d);
      if (!in_core_fragment(d)) throw Stop{kViolation, "derivation uses equality, definitions or induction"};
      FDeriv fd = lg_to_folnb(m.th, d);
      if (auto v = check_folnb(m.th, fd))
        throw Stop{kInternal, "translation does not check at " + show_path(v->path) + ": " + v->reason};
      text = fderiv_to_json(fd);
    } else {
      FDeriv fd;
      if (!dpath.empty()) {
        fd = read_folnb(m, dpath);
      } else {
        Deriv d = cut_free(m, theorem_deriv(m, thm));
        if (!in_core_fragment(d)) throw Stop{kViolation, "derivation uses equality, definitions or induction"};
        fd = lg_to_folnb(m.th, d);
      }
      if (auto v = check_folnb(m.th, fd)) throw Stop{kViolation, "input does not check: " + v->reason};
      Deriv d = folnb_to_lg(m.th, fd);
      if (auto v = check(m.th, d))
        throw Stop{kInternal, "translation does not check at " + show_path(v->path) + ": " + v->reason};
      text = deriv_to_json(d);
    }
  } catch (const BridgeError& e) {
    throw Stop{kInternal, e.what()};
  }
  if (outp.empty())
    out << text;
  else
    write_file(outp, text);
  return kOk;
}

int cmd_unify(const std::string& s1, const std::string& s2, const std::string& theory,
              const std::vector<std::string>& noms, bool as_json, std::ostream& out) {
  Module m;
  if (!theory.empty()) {
    m = load(theory);
  } else {
    m.types["nm"] = base_type("nm", true);
    m.types["i"] = base_type("i");
  }
  if (!m.types.count("i")) m.types["i"] = base_type("i");
  std::vector<std::string> ns = noms;
  if (theory.empty() && ns.empty()) ns = {"a", "b", "c"};
  for (const auto& n : ns) {
    auto it = m.types.find("nm");
    if (it == m.types.end()) throw Stop{kParse, "--nominal needs a nominal type nm"};
    nominal(n, it->second);
  }
  Signature sig;
  std::map<Symbol, Ty> consts;
  Term a, b;
  try {
    a = parse_open_term(m, s1, sig, consts, m.types["i"]);
    Ty ty = type_of_closed(a);
    b = parse_open_term(m, s2, sig, consts, m.types["i"], &ty);
  } catch (const ParseError& e) {
    throw Stop{kParse, e.what()};
  }
  UnifyResult r = unify(a, b);
  if (as_json) {
    json j = {{"format", kFormatVersion}, {"status", status_name(r.status)}};
    if (r.status == UnifyStatus::Unifier) {
      json th = json::object();
      for (const auto& e : r.theta.entries()) th[name_of(e.var.name)] = show(e.image);
      j["theta"] = th;
    } else if (r.status == UnifyStatus::NotAPattern) {
      j["why"] = r.why;
    }
    out << j.dump(2) << "\n";
  } else if (r.status == UnifyStatus::Unifier) {
    out << "unifier " << show_subst(r.theta) << "\n";
  } else if (r.status == UnifyStatus::NoUnifier) {
    out << "no unifier\n";
  } else {
    out << "not a pattern: " << r.why << "\n";
  }
  switch (r.status) {
    case UnifyStatus::Unifier: return kOk;
    case UnifyStatus::NoUnifier: return kViolation;
    case UnifyStatus::NotAPattern: return kParse;
  }
  return kInternal;
}

int cmd_level(const std::string& file, bool as_json, std::ostream& out) {
  Module m = load(file);
  std::string why;
  bool ok = m.th.infer_levels(&why);
  std::vector<StratIssue> issues;
  if (ok) issues = m.th.stratify();
  std::set<Symbol> preds;
  for (const auto& [c, t] : m.th.consts())
    if (m.th.is_predicate(c)) preds.insert(c);
  json levels = json::object();
  for (Symbol p : preds) {
    bool declared = m.th.has_declared_level(p);
    if (as_json)
      levels[name_of(p)] = {{"level", m.th.pred_level(p)}, {"declared", declared}};
    else if (ok)
      out << name_of(p) << " " << m.th.pred_level(p) << (declared ? " declared" : " inferred") << "\n";
  }
  std::vector<std::string> errs;
  if (!ok) errs.push_back(why);
  for (const auto& i : issues) errs.push_back(i.message);
  if (as_json) {
    json j = {{"format", kFormatVersion}, {"stratified", errs.empty()}, {"levels", levels}, {"errors", errs}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& e : errs) out << "error: " << e << "\n";
  }
  return errs.empty() ? kOk : kStrat;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lg: checker, cut eliminator and translator for a logic of definitions and nabla"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file, thm, dpath, outp, trace, to = "folnb", theory, t1, t2;
  std::vector<std::string> noms;

  auto* check = app.add_subcommand("check", "check every theorem of a theory file");
  check->add_option("file", file, "theory file")->required();
  check->add_option("--theorem", thm, "check only this theorem");
  check->add_option("--derivation", dpath, "check a serialized derivation instead");
  check->add_flag("--json", as_json);

  auto* norm = app.add_subcommand("normalize", "eliminate cuts from a theorem's derivation");
  norm->add_option("file", file, "theory file")->required();
  norm->add_option("--theorem", thm, "theorem to normalize");
  norm->add_option("--derivation", dpath, "serialized derivation to normalize");
  norm->add_option("--out", outp, "write the cut-free derivation here");
  norm->add_option("--trace", trace, "write one JSON line per reduction step here");
  norm->add_flag("--json", as_json);

  auto* tr = app.add_subcommand("translate", "translate between LG and the local-signature calculus");
  tr->add_option("file", file, "theory file")->required();
  tr->add_option("--theorem", thm, "theorem to translate");
  tr->add_option("--derivation", dpath, "serialized derivation to translate");
  tr->add_option("--to", to, "target calculus")->check(CLI::IsMember({"folnb", "lg"}));
  tr->add_option("--out", outp, "output file (default: standard output)");

  auto* un = app.add_subcommand("unify", "most general unifier of two pattern terms");
  un->add_option("s", t1, "first term")->required();
  un->add_option("t", t2, "second term")->required();
  un->add_option("--theory", theory, "theory file declaring the vocabulary");
  un->add_option("--nominal", noms, "nominal constants of type nm (default a b c)");
  un->add_flag("--json", as_json);

  auto* lv = app.add_subcommand("level", "show predicate levels and stratification errors");
  lv->add_option("file", file, "theory file")->required();
  lv->add_flag("--json", as_json);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParse;
  }

  try {
    if (check->parsed()) return cmd_check(file, thm, dpath, as_json, out);
    if (norm->parsed()) return cmd_normalize(file, thm, dpath, outp, trace, as_json, out);
    if (tr->parsed()) return cmd_translate(file, thm, dpath, to, outp, out);
    if (un->parsed()) return cmd_unify(t1, t2, theory, noms, as_json, out);
    if (lv->parsed()) return cmd_level(file, as_json, out);
  } catch (const Stop& s) {
    err << s.msg << "\n";
    return s.code;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace lg::cli
