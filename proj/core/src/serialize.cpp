#include "lg/serialize.hpp"

#include <set>

#include "json.hpp"
#include "lg/printer.hpp"

namespace lg {

namespace {

using json = nlohmann::ordered_json;

// ------------------------------------------------------------ nominals

void noms_of(const Term& t, std::set<NomId>& out) {
  if (!t || !t->has_nom) return;
  for (NomId c : support(t)) out.insert(c);
}
void noms_of(const Perm& p, std::set<NomId>& out) {
  for (NomId c : p.moved()) out.insert(c);
}

void collect(const Deriv& d, std::set<NomId>& out) {
  for (const auto& h : d->concl.hyps) noms_of(h, out);
  noms_of(d->concl.goal, out);
  const Rule& r = d->rule;
  noms_of(r.pi, out);
  noms_of(r.pi2, out);
  for (NomId c : r.noms) out.insert(c);
  if (r.tag == RuleTag::NabL || r.tag == RuleTag::NabR) out.insert(r.nom);
  for (const auto& p : d->prem) collect(p, out);
}

void collect(const FDeriv& d, std::set<NomId>& out) {
  auto judg = [&](const Judgment& j) {
    for (NomId c : j.sigma) out.insert(c);
    noms_of(j.f, out);
  };
  for (const auto& h : d->concl.hyps) judg(h);
  judg(d->concl.goal);
  const FRule& r = d->rule;
  noms_of(r.pi, out);
  switch (r.tag) {
    case FTag::NabL: case FTag::NabR: case FTag::SSL: case FTag::SSR: out.insert(r.nom); break;
    default: break;
  }
  for (const auto& p : d->prem) collect(p, out);
}

json nominals_json(const std::set<NomId>& ns) {
  json a = json::array();
  for (NomId c : ns) a.push_back({{"name", nominal_name(c)}, {"type", show_type(nominal_type(c))}});
  return a;
}

void declare_nominals(const Module& m, const json& a) {
  for (const auto& e : a) {
    Ty t = parse_type(m, e.at("type").get<std::string>());
    try {
      nominal(e.at("name").get<std::string>(), t);
    } catch (const TypeError& ex) {
      throw FormatError(ex.what());
    }
  }
}

NomId nom_named(const std::string& n) {
  NomId c;
  if (!find_nominal(n, c)) throw FormatError("unknown nominal constant '" + n + "'");
  return c;
}

json perm_json(const Perm& p) {
  json a = json::array();
  for (auto [x, y] : p.pairs()) a.push_back(json::array({nominal_name(x), nominal_name(y)}));
  return a;
}

Perm perm_from(const json& a) {
  std::vector<std::pair<NomId, NomId>> ps;
  for (const auto& e : a) ps.push_back({nom_named(e.at(0)), nom_named(e.at(1))});
  try {
    return Perm::from_pairs(ps);
  } catch (const TypeError& ex) {
    throw FormatError(ex.what());
  }
}

json noms_json(const std::vector<NomId>& v) {
  json a = json::array();
  for (NomId c : v) a.push_back(nominal_name(c));
  return a;
}

std::vector<NomId> noms_from(const json& a) {
  std::vector<NomId> out;
  for (const auto& e : a) out.push_back(nom_named(e.get<std::string>()));
  return out;
}

json var_json(const Var& v) { return {{"name", name_of(v.name)}, {"type", show_type(v.ty)}}; }

Var var_from(const Module& m, const json& j) {
  return {intern(j.at("name").get<std::string>()), parse_type(m, j.at("type").get<std::string>())};
}

// ------------------------------------------------------------ LG

json seq_json(const Sequent& s) {
  json h = json::array();
  for (const auto& f : s.hyps) h.push_back(show_formula(f));
  return {{"sig", show_sig(s.sig)}, {"hyps", h}, {"goal", show_formula(s.goal)}};
}

Sequent seq_from(const Module& m, const json& j) {
  Sequent s;
  s.sig = parse_signature(m, j.at("sig").get<std::string>());
  for (const auto& h : j.at("hyps")) s.hyps.push_back(parse_formula(m, s.sig, h.get<std::string>()));
  s.goal = parse_formula(m, s.sig, j.at("goal").get<std::string>());
  return s;
}

json payload(const Rule& r) {
  json p = json::object();
  if (is_left_rule(r.tag) || r.tag == RuleTag::IdPi) p["idx"] = r.idx;
  switch (r.tag) {
    case RuleTag::IdPi:
      p["pi"] = perm_json(r.pi);
      p["pi2"] = perm_json(r.pi2);
      break;
    case RuleTag::Mc: {
      json c = json::array();
      for (const auto& f : r.cuts) c.push_back(show_formula(f));
      p["cuts"] = c;
      p["part"] = r.part;
      break;
    }
    case RuleTag::AndL:
    case RuleTag::OrR: p["choice"] = r.choice; break;
    case RuleTag::AllL:
    case RuleTag::ExR: p["term"] = show(r.term); break;
    case RuleTag::AllR:
    case RuleTag::ExL:
      p["var"] = var_json(r.var);
      p["noms"] = noms_json(r.noms);
      break;
    case RuleTag::NabL:
    case RuleTag::NabR: p["nom"] = nominal_name(r.nom); break;
    case RuleTag::DefL: p["clauses"] = r.clauses; break;
    case RuleTag::DefR: {
      p["clause"] = r.clause;
      json th = json::array();
      for (const auto& e : r.theta.entries())
        th.push_back({{"var", name_of(e.var.name)}, {"type", show_type(e.var.ty)}, {"image", show(e.image)}});
      p["theta"] = th;
      break;
    }
    case RuleTag::NatL:
      p["invariant"] = show(r.term);
      p["var"] = var_json(r.var);
      break;
    default: break;
  }
  return p;
}

json node_json(const Deriv& d) {
  json prem = json::array();
  for (const auto& p : d->prem) prem.push_back(node_json(p));
  return {{"rule", rule_name(d->rule.tag)},
          {"payload", payload(d->rule)},
          {"conclusion", seq_json(d->concl)},
          {"premises", prem}};
}

Deriv node_from(const Module& m, const json& j) {
  RuleTag tag;
  const std::string rn = j.at("rule").get<std::string>();
  if (!rule_from_name(rn, tag)) throw FormatError("unknown rule '" + rn + "'");
  Sequent s = seq_from(m, j.at("conclusion"));
  const json& p = j.at("payload");
  Rule r = Rule::make(tag);
  if (p.contains("idx")) r.idx = p["idx"].get<std::size_t>();
  if (p.contains("choice")) r.choice = p["choice"].get<int>();
  if (p.contains("pi")) r.pi = perm_from(p["pi"]);
  if (p.contains("pi2")) r.pi2 = perm_from(p["pi2"]);
  if (p.contains("cuts"))
    for (const auto& c : p["cuts"]) r.cuts.push_back(parse_formula(m, s.sig, c.get<std::string>()));
  if (p.contains("part")) r.part = p["part"].get<std::vector<std::size_t>>();
  if (p.contains("var")) r.var = var_from(m, p["var"]);
  if (p.contains("noms")) r.noms = noms_from(p["noms"]);
  if (p.contains("nom")) r.nom = nom_named(p["nom"].get<std::string>());
  if (p.contains("clauses")) r.clauses = p["clauses"].get<std::vector<std::size_t>>();
  if (p.contains("clause")) r.clause = p["clause"].get<std::size_t>();
  if (p.contains("term")) {
    FView v = view(tag == RuleTag::AllL ? s.hyps.at(r.idx) : s.goal);
    r.term = parse_term(m, s.sig, p["term"].get<std::string>(), &v.qty);
  }
  if (p.contains("invariant")) {
    Ty it = arrow(nat_type(), prop_type());
    r.term = parse_term(m, Signature{}, p["invariant"].get<std::string>(), &it);
  }
  if (p.contains("theta"))
    for (const auto& e : p["theta"]) {
      Var v{intern(e.at("var").get<std::string>()), parse_type(m, e.at("type").get<std::string>())};
      r.theta.bind(v, parse_term(m, s.sig, e.at("image").get<std::string>(), &v.ty));
    }
  std::vector<Deriv> prem;
  for (const auto& q : j.at("premises")) prem.push_back(node_from(m, q));
  return mk_node(std::move(s), std::move(r), std::move(prem));
}

// ------------------------------------------------------------ local

json judg_json(const Judgment& jd) { return {{"sigma", noms_json(jd.sigma)}, {"formula", show_formula(jd.f)}}; }

Judgment judg_from(const Module& m, const Signature& sig, const json& j) {
  return {noms_from(j.at("sigma")), parse_formula(m, sig, j.at("formula").get<std::string>())};
}

json fnode_json(const FDeriv& d) {
  const FRule& r = d->rule;
  json p = json::object();
  if (ftag_is_left(r.tag) || r.tag == FTag::Id) p["idx"] = r.idx;
  switch (r.tag) {
    case FTag::Cut:
      p["cut"] = judg_json(r.cut);
      p["left"] = r.left;
      break;
    case FTag::OrR: p["choice"] = r.choice; break;
    case FTag::AllL: case FTag::ExR: p["term"] = show(r.term); break;
    case FTag::AllR: case FTag::ExL: p["var"] = var_json(r.var); break;
    case FTag::NabL: case FTag::NabR: p["nom"] = nominal_name(r.nom); break;
    case FTag::AlphaL: case FTag::AlphaR: p["pi"] = perm_json(r.pi); break;
    case FTag::PL: case FTag::PR: case FTag::WSL: case FTag::WSR: p["pos"] = r.pos; break;
    case FTag::SSL: case FTag::SSR:
      p["pos"] = r.pos;
      p["nom"] = nominal_name(r.nom);
      break;
    default: break;
  }
  json h = json::array();
  for (const auto& x : d->concl.hyps) h.push_back(judg_json(x));
  json prem = json::array();
  for (const auto& q : d->prem) prem.push_back(fnode_json(q));
  return {{"rule", ftag_name(r.tag)},
          {"payload", p},
          {"conclusion", {{"sig", show_sig(d->concl.sig)}, {"hyps", h}, {"goal", judg_json(d->concl.goal)}}},
          {"premises", prem}};
}

FDeriv fnode_from(const Module& m, const json& j) {
  FTag tag;
  const std::string rn = j.at("rule").get<std::string>();
  if (!ftag_from_name(rn, tag)) throw FormatError("unknown rule '" + rn + "'");
  const json& c = j.at("conclusion");
  FSequent s;
  s.sig = parse_signature(m, c.at("sig").get<std::string>());
  for (const auto& h : c.at("hyps")) s.hyps.push_back(judg_from(m, s.sig, h));
  s.goal = judg_from(m, s.sig, c.at("goal"));
  const json& p = j.at("payload");
  FRule r = FRule::make(tag);
  if (p.contains("idx")) r.idx = p["idx"].get<std::size_t>();
  if (p.contains("choice")) r.choice = p["choice"].get<int>();
  if (p.contains("pos")) r.pos = p["pos"].get<std::size_t>();
  if (p.contains("nom")) r.nom = nom_named(p["nom"].get<std::string>());
  if (p.contains("pi")) r.pi = perm_from(p["pi"]);
  if (p.contains("var")) r.var = var_from(m, p["var"]);
  if (p.contains("cut")) r.cut = judg_from(m, s.sig, p["cut"]);
  if (p.contains("left")) r.left = p["left"].get<std::vector<bool>>();
  if (p.contains("term")) {
    const Judgment& pj = tag == FTag::AllL ? s.hyps.at(r.idx) : s.goal;
    FView v = view(pj.f);
    r.term = parse_term(m, s.sig, p["term"].get<std::string>(), &v.qty);
  }
  std::vector<FDeriv> prem;
  for (const auto& q : j.at("premises")) prem.push_back(fnode_from(m, q));
  return mk_fnode(std::move(s), std::move(r), std::move(prem));
}

json read_doc(std::string_view text, const char* kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", 0) != kFormatVersion)
    throw FormatError("unsupported derivation format");
  if (doc.value("kind", std::string()) != kind)
    throw FormatError(std::string("expected a derivation of kind ") + kind);
  return doc;
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed derivation: ") + e.what());
  } catch (const TypeError& e) {
    throw FormatError(std::string("ill-typed derivation: ") + e.what());
  } catch (const ParseError& e) {
    throw FormatError(std::string("unreadable term: ") + e.what());
  }
}

}  // namespace

std::string deriv_to_json(const Deriv& d) {
  std::set<NomId> ns;
  collect(d, ns);
  json doc = {{"format", kFormatVersion}, {"kind", "lg"}, {"nominals", nominals_json(ns)},
              {"derivation", node_json(d)}};
  return doc.dump(2) + "\n";
}

Deriv deriv_from_json(const Module& m, std::string_view text) {
  json doc = read_doc(text, "lg");
  return guarded([&] {
    declare_nominals(m, doc.at("nominals"));
    return node_from(m, doc.at("derivation"));
  });
}

std::string fderiv_to_json(const FDeriv& d) {
  std::set<NomId> ns;
  collect(d, ns);
  json doc = {{"format", kFormatVersion}, {"kind", "folnb"}, {"nominals", nominals_json(ns)},
              {"derivation", fnode_json(d)}};
  return doc.dump(2) + "\n";
}

FDeriv fderiv_from_json(const Module& m, std::string_view text) {
  json doc = read_doc(text, "folnb");
  return guarded([&] {
    declare_nominals(m, doc.at("nominals"));
    return fnode_from(m, doc.at("derivation"));
  });
}

}  // namespace lg
