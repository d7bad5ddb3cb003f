#include "lg/sequent.hpp"

#include <algorithm>
#include <array>

namespace lg {

bool seq_equal(const Sequent& a, const Sequent& b) {
  if (!(a.sig == b.sig) || a.hyps.size() != b.hyps.size()) return false;
  for (std::size_t i = 0; i < a.hyps.size(); ++i)
    if (!term_equal(a.hyps[i], b.hyps[i])) return false;
  return term_equal(a.goal, b.goal);
}

namespace {

constexpr std::array<std::pair<RuleTag, const char*>, 23> kNames{{
    {RuleTag::IdPi, "id"},       {RuleTag::Mc, "mc"},         {RuleTag::CL, "cL"},
    {RuleTag::BotL, "botL"},     {RuleTag::TopR, "topR"},     {RuleTag::AndL, "andL"},
    {RuleTag::AndR, "andR"},     {RuleTag::OrL, "orL"},       {RuleTag::OrR, "orR"},
    {RuleTag::ImpL, "impL"},     {RuleTag::ImpR, "impR"},     {RuleTag::AllL, "allL"},
    {RuleTag::AllR, "allR"},     {RuleTag::ExL, "existsL"},   {RuleTag::ExR, "existsR"},
    {RuleTag::NabL, "nablaL"},   {RuleTag::NabR, "nablaR"},   {RuleTag::EqL, "eqL"},
    {RuleTag::EqR, "eqR"},       {RuleTag::DefL, "defL"},     {RuleTag::DefR, "defR"},
    {RuleTag::NatL, "natL"},     {RuleTag::NatR, "natR"},
}};

}  // namespace

const char* rule_name(RuleTag t) {
  for (auto& [k, n] : kNames)
    if (k == t) return n;
  return "?";
}

bool rule_from_name(const std::string& s, RuleTag& out) {
  for (auto& [k, n] : kNames)
    if (s == n) {
      out = k;
      return true;
    }
  return false;
}

bool is_left_rule(RuleTag t) {
  switch (t) {
    case RuleTag::CL:
    case RuleTag::BotL:
    case RuleTag::AndL:
    case RuleTag::OrL:
    case RuleTag::ImpL:
    case RuleTag::AllL:
    case RuleTag::ExL:
    case RuleTag::NabL:
    case RuleTag::EqL:
    case RuleTag::DefL:
    case RuleTag::NatL: return true;
    default: return false;
  }
}

Deriv mk_node(Sequent concl, Rule rule, std::vector<Deriv> prem) {
  auto n = std::make_shared<DNode>();
  std::uint32_t h = 0, sz = 1;
  bool mc = rule.tag == RuleTag::Mc;
  for (const auto& p : prem) {
    h = std::max(h, p->height);
    sz += p->size;
    mc = mc || p->has_mc;
  }
  n->concl = std::move(concl);
  n->rule = std::move(rule);
  n->prem = std::move(prem);
  n->height = n->prem.empty() ? 0 : h + 1;
  n->size = sz;
  n->has_mc = mc;
  return n;
}

}  // namespace lg
