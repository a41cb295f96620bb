#include "ekneg/planner.hpp"

#include <algorithm>
#include <array>

namespace ekneg {

namespace {

const std::array<std::pair<FrameRole, std::string_view>, 5> kRoleNames{{
    {FrameRole::Subject, "Subject"},
    {FrameRole::Object, "Object"},
    {FrameRole::Adverbial, "Adverbial"},
    {FrameRole::Attribute, "Attribute"},
    {FrameRole::PredicateComplement, "PredicateComplement"},
}};

const std::array<std::pair<PredicateClass, std::string_view>, 4> kClassNames{{
    {PredicateClass::CopularNoun, "CopularNoun"},
    {PredicateClass::LexicalVerb, "LexicalVerb"},
    {PredicateClass::Adjective, "Adjective"},
    {PredicateClass::Existential, "Existential"},
}};

AdverbPosition placement_for(std::string_view word) {
  if (word == "전혀") return AdverbPosition::NegatorInfix;
  if (word == "거의" || word == "다시는") return AdverbPosition::BeforeObject;
  return AdverbPosition::BeforePredicate;
}

FrameRole frame_role_for(NegSlot slot) {
  return slot == NegSlot::Subject ? FrameRole::Subject : FrameRole::Object;
}

}  // namespace

std::string_view to_string(FrameRole r) {
  for (auto& [v, n] : kRoleNames)
    if (v == r) return n;
  return "?";
}

std::string_view to_string(PredicateClass c) {
  for (auto& [v, n] : kClassNames)
    if (v == c) return n;
  return "?";
}

std::optional<FrameRole> parse_frame_role(std::string_view s) {
  for (auto& [v, n] : kRoleNames)
    if (n == s) return v;
  return std::nullopt;
}

std::optional<PredicateClass> parse_predicate_class(std::string_view s) {
  for (auto& [v, n] : kClassNames)
    if (n == s) return v;
  return std::nullopt;
}

const Constituent* KoreanFrame::find(FrameRole role) const {
  int i = find_index(role);
  return i < 0 ? nullptr : &constituents[i];
}

int KoreanFrame::find_index(FrameRole role) const {
  for (size_t i = 0; i < constituents.size(); ++i)
    if (constituents[i].role == role) return static_cast<int>(i);
  return -1;
}

std::optional<AdverbInsert> related_adverb(const DetectedNegative& d,
                                           NegSlot scope) {
  if (d.never_again) return AdverbInsert{"다시는", AdverbPosition::BeforeObject};
  if (d.not_at_all) return AdverbInsert{"전혀", AdverbPosition::NegatorInfix};
  if (d.entry->pos == WordPos::Pronoun && d.entry->surface == "nothing" &&
      scope == NegSlot::Object) {
    return AdverbInsert{"아무것도", AdverbPosition::BeforePredicate};
  }
  if (d.entry->related_adverb.empty()) return std::nullopt;
  return AdverbInsert{d.entry->related_adverb,
                      placement_for(d.entry->related_adverb)};
}

SuffixPattern select_suffix(const NegationAnalysis& a, const KoreanFrame& f,
                            const Lexicons& lx) {
  if (a.kind == NegKind::NonNegative)
    throw EknegError("select_suffix called on a non-negative analysis");

  const FramePredicate& p = f.predicate;

  if (a.kind == NegKind::Partial) {
    // Partial negation never suppletes: it negates the quantifier's scope,
    // not the predicate itself.
    for (const auto& d : a.negatives)
      if (d.entry->force == EntryForce::PartialJiNeunAnta)
        return SuffixPattern::JiNeunAnta;
    if (a.modal_can) return SuffixPattern::SuNeunEopda;
    if (a.english_tense == EnglishTense::Future) return SuffixPattern::JiNeunAnta;
    if (a.has_auxiliary && a.aspect == Aspect::Simple &&
        a.negates(NegSlot::Subject)) {
      return SuffixPattern::JiNeunAnta;
    }
    return SuffixPattern::NGeosEunAnida;
  }

  if (lx.suppletive_form(p.stem, p.context)) return SuffixPattern::Suppletive;

  for (const auto& d : a.negatives)
    if (d.entry->force == EntryForce::SuEopda) return SuffixPattern::SuEopda;

  if (p.cls == PredicateClass::CopularNoun) {
    return p.context == "Possession" ? SuffixPattern::IEopda
                                     : SuffixPattern::IAnida;
  }
  // Ability before aspect: 못하다-class verbs absorb the inability reading.
  if (a.modal_can || p.modal_can) {
    return lx.collocation_class(p.stem) == NegationVerb::Motada
               ? SuffixPattern::JiMotada
               : SuffixPattern::SuEopda;
  }
  if (a.aspect == Aspect::Perfect && p.cls == PredicateClass::LexicalVerb)
    return SuffixPattern::NJeokIEopda;
  return lx.collocation_class(p.stem) == NegationVerb::Motada
             ? SuffixPattern::JiMotada
             : SuffixPattern::JiAnta;
}

std::vector<ParticleRewrite> plan_particles(const NegationAnalysis& a,
                                            const KoreanFrame& f,
                                            const Lexicons& lx) {
  std::vector<ParticleRewrite> out;

  if (a.kind == NegKind::Partial) {
    int idx = f.find_index(FrameRole::Subject);
    if (idx >= 0 && f.constituents[idx].particle == ParticleClass::Topic)
      out.push_back({idx, "", ParticleClass::Nominative});
    return out;
  }

  bool intensified = a.kind == NegKind::Intensified || a.kind == NegKind::Double;
  bool suppletive_frame =
      lx.suppletive_form(f.predicate.stem, f.predicate.context) != nullptr;

  for (const auto& d : a.negatives) {
    if (d.entry->quasi) {
      // few/little as determiner on the subject: 거의 모든 N이 + negative
      // predicate, unless the frame already negates by suppletion.
      if (intensified && d.entry->pos == WordPos::Determiner &&
          d.slot == NegSlot::Subject && !suppletive_frame) {
        int idx = f.find_index(FrameRole::Subject);
        if (idx >= 0 && f.constituents[idx].particle)
          out.push_back({idx, "거의 모든 ", ParticleClass::Nominative});
      }
      continue;  // other quasi negatives are rendered with adverbs
    }

    bool nominal_slot = d.slot == NegSlot::Subject || d.slot == NegSlot::Object;
    bool plain_do =
        d.entry->pos == WordPos::Pronoun || d.entry->surface == "not" ||
        (d.entry->pos == WordPos::Determiner && d.entry->surface == "no" &&
         d.slot == NegSlot::Object);
    if (intensified && nominal_slot && plain_do) {
      int idx = f.find_index(frame_role_for(d.slot));
      if (idx >= 0 && f.constituents[idx].particle)
        out.push_back({idx, "", ParticleClass::Additive});
      continue;
    }

    // Determiner "no" on a clause-internal object (the noun phrase sits in an
    // adverbial clause): emphatic 그 어떤 N도 on the frame's object.
    if (d.entry->pos == WordPos::Determiner && d.entry->surface == "no" &&
        d.slot == NegSlot::Adverbial) {
      int idx = f.find_index(FrameRole::Object);
      if (idx >= 0 && f.constituents[idx].particle)
        out.push_back({idx, "그 어떤 ", ParticleClass::Additive});
    }
  }
  return out;
}

std::vector<AdverbInsert> plan_adverbs(const NegationAnalysis& a) {
  std::vector<AdverbInsert> out;
  for (const auto& d : a.negatives) {
    // In a double negative only the quasi words keep their related adverbs.
    if (a.kind == NegKind::Double && !d.entry->quasi) continue;

    bool nominal_slot = d.slot == NegSlot::Subject || d.slot == NegSlot::Object;
    if (!d.entry->quasi && nominal_slot &&
        (d.entry->pos == WordPos::Pronoun || d.entry->surface == "not")) {
      continue;  // realized through a particle rewrite
    }
    if (d.entry->pos == WordPos::Determiner && d.entry->surface == "no") {
      if (d.slot == NegSlot::Subject) {
        out.push_back(d.head_plural
                          ? AdverbInsert{"전혀", AdverbPosition::BeforePredicate}
                          : AdverbInsert{"하나도", AdverbPosition::BeforePredicate});
      }
      continue;  // object/adverbial: wrapper rewrite instead
    }
    if (auto ra = related_adverb(d, d.slot)) out.push_back(*ra);
  }

  std::vector<AdverbInsert> dedup;
  for (auto& ai : out) {
    bool seen = false;
    for (auto& prev : dedup)
      if (prev.word == ai.word) seen = true;
    if (!seen) dedup.push_back(std::move(ai));
  }
  return dedup;
}

namespace {

bool partial_pattern(SuffixPattern p) {
  return p == SuffixPattern::NGeosEunAnida || p == SuffixPattern::JiNeunAnta ||
         p == SuffixPattern::SuNeunEopda;
}

void check_plan(const NegationAnalysis& a, const TransformPlan& p) {
  if (p.suppletion.has_value() != (p.suffix == SuffixPattern::Suppletive))
    throw EknegError("plan invariant: suppletion/suffix mismatch");
  if ((a.kind == NegKind::Partial) != partial_pattern(p.suffix))
    throw EknegError("plan invariant: kind/suffix correspondence");
}

}  // namespace

TransformPlan plan(const NegationAnalysis& a, const KoreanFrame& f,
                   const Lexicons& lx) {
  TransformPlan p;
  p.tense = f.predicate.tense;
  p.suffix = select_suffix(a, f, lx);
  if (p.suffix == SuffixPattern::Suppletive) {
    const SuppletivePair* sp =
        lx.suppletive_form(f.predicate.stem, f.predicate.context);
    if (!sp) throw EknegError("suppletive suffix without a suppletive pair");
    p.suppletion = sp->form(p.tense);
  }
  p.particle_rewrites = plan_particles(a, f, lx);
  p.adverb_inserts = plan_adverbs(a);

  // A 거의-모든 wrapper already carries the quasi adverb.
  bool has_quasi_wrapper = false;
  for (const auto& rw : p.particle_rewrites)
    if (rw.prefix.find("거의") != std::string::npos) has_quasi_wrapper = true;
  if (has_quasi_wrapper) {
    std::erase_if(p.adverb_inserts,
                  [](const AdverbInsert& ai) { return ai.word == "거의"; });
  }

  check_plan(a, p);
  return p;
}

}  // namespace ekneg
