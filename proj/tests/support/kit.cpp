#include "kit.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace lgt {

std::string corpus_dir() { return LG_CORPUS_DIR; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Module load_module_text(const std::string& text) {
  Module m = parse_module(text);
  std::string why;
  if (!m.th.infer_levels(&why)) throw std::runtime_error("levels: " + why);
  auto issues = m.th.stratify();
  if (!issues.empty()) throw std::runtime_error("stratification: " + issues.front().message);
  return m;
}

const Module& corpus_module(const std::string& file) {
  static std::map<std::string, std::unique_ptr<Module>> cache;
  auto it = cache.find(file);
  if (it == cache.end()) {
    auto m = std::make_unique<Module>(load_module_text(read_text(corpus_dir() + "/" + file)));
    it = cache.emplace(file, std::move(m)).first;
  }
  return *it->second;
}

const std::vector<std::string>& corpus_files() {
  static const std::vector<std::string> files = {"prop1.lg", "cuts.lg", "defs.lg", "names.lg"};
  return files;
}

std::vector<Proof> corpus_proofs(const std::string& file) {
  const Module& m = corpus_module(file);
  std::vector<Proof> out;
  for (const auto& t : m.theorems) {
    if (!t.proof) throw std::runtime_error(file + ": " + t.name + " has no proof");
    Deriv d = elaborate_script(m, t.seq, *t.proof);
    if (auto v = check(m.th, d)) throw std::runtime_error(file + ": " + t.name + ": " + v->reason);
    out.push_back({file, t.name, &m, d});
  }
  return out;
}

Deriv theorem_deriv(const Module& m, const std::string& name) {
  const TheoremDecl* t = m.theorem(name);
  if (!t || !t->proof) throw std::runtime_error("no proof of " + name);
  return elaborate_script(m, t->seq, *t->proof);
}

const Proof& corpus_proof(const std::string& file, const std::string& name) {
  for (const auto& p : corpus_proofs())
    if (p.file == file && p.name == name) return p;
  throw std::runtime_error(file + " has no theorem " + name);
}

const std::vector<Proof>& corpus_proofs() {
  static const std::vector<Proof> all = [] {
    std::vector<Proof> v;
    for (const auto& f : corpus_files())
      for (auto& p : corpus_proofs(f)) v.push_back(std::move(p));
    return v;
  }();
  return all;
}

// --------------------------------------------------------------- misc

bool same_multiset(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size() && !found; ++i)
      if (!used[i] && term_equal(x, b[i])) used[i] = found = true;
    if (!found) return false;
  }
  return true;
}

bool seq_equal_upto_order(const Sequent& a, const Sequent& b) {
  return a.sig == b.sig && term_equal(a.goal, b.goal) && same_multiset(a.hyps, b.hyps);
}

std::uint32_t walk_height(const Deriv& d) {
  std::uint32_t h = 0;
  for (const auto& p : d->prem) h = std::max(h, walk_height(p) + 1);
  return h;
}

Deriv weaken_by_hand(const Deriv& d, const std::vector<Term>& extra) {
  Sequent s = d->concl;
  s.hyps.insert(s.hyps.begin(), extra.begin(), extra.end());
  Rule r = d->rule;
  switch (r.tag) {
    case RuleTag::Mc:
    case RuleTag::EqL:
    case RuleTag::DefL:
    case RuleTag::NatL:
      throw std::logic_error("weaken_by_hand: core rules only");
    default: break;
  }
  if (is_left_rule(r.tag) || r.tag == RuleTag::IdPi) r.idx += extra.size();
  std::vector<Deriv> ps;
  for (const auto& p : d->prem) ps.push_back(weaken_by_hand(p, extra));
  return mk_node(std::move(s), std::move(r), std::move(ps));
}

}  // namespace lgt
