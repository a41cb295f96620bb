#include "ekneg/analyzer.hpp"

#include <array>
#include <set>

namespace ekneg {

namespace {

const std::array<std::pair<Structure, std::string_view>, 8> kStructureNames{{
    {Structure::NS_AP_AO, "NS-AP-AO"},
    {Structure::NS_NP_AO, "NS-NP-AO"},
    {Structure::NS_AP_NO, "NS-AP-NO"},
    {Structure::AS_AP_NO, "AS-AP-NO"},
    {Structure::AS_NP_AO, "AS-NP-AO"},
    {Structure::AS_NP_NO, "AS-NP-NO"},
    {Structure::NS_NP_NO, "NS-NP-NO"},
    {Structure::NonNegative, "NonNegative"},
}};

const std::array<std::pair<NegKind, std::string_view>, 5> kKindNames{{
    {NegKind::General, "General"},
    {NegKind::Partial, "Partial"},
    {NegKind::Intensified, "Intensified"},
    {NegKind::Double, "Double"},
    {NegKind::NonNegative, "NonNegative"},
}};

std::optional<WordPos> pos_for_lookup(PosTag tag) {
  switch (tag) {
    case PosTag::Adverb: return WordPos::Adverb;
    case PosTag::Pronoun: return WordPos::Pronoun;
    case PosTag::Determiner: return WordPos::Determiner;
    default: return std::nullopt;
  }
}

std::optional<NegSlot> slot_for_role(RoleTag role) {
  switch (role) {
    case RoleTag::Subject: return NegSlot::Subject;
    case RoleTag::Predicate: return NegSlot::Predicate;
    case RoleTag::Object: return NegSlot::Object;
    case RoleTag::Adverbial: return NegSlot::Adverbial;
    default: return std::nullopt;  // Attribute/Other: outside the main slots
  }
}

}  // namespace

std::string_view to_string(Structure s) {
  for (auto& [v, n] : kStructureNames)
    if (v == s) return n;
  return "?";
}

std::string_view to_string(NegKind k) {
  for (auto& [v, n] : kKindNames)
    if (v == k) return n;
  return "?";
}

std::optional<Structure> parse_structure(std::string_view s) {
  for (auto& [v, n] : kStructureNames)
    if (n == s) return v;
  return std::nullopt;
}

std::optional<NegKind> parse_kind(std::string_view s) {
  for (auto& [v, n] : kKindNames)
    if (n == s) return v;
  return std::nullopt;
}

std::vector<DetectedNegative> detect_negatives(const AnnotatedSentence& s,
                                               const Lexicons& lx) {
  std::vector<DetectedNegative> out;
  std::vector<std::string> lowered;
  lowered.reserve(s.tokens.size());
  for (const auto& t : s.tokens) lowered.push_back(lowercase_ascii(t.surface));

  size_t i = 0;
  while (i < s.tokens.size()) {
    std::vector<std::string> window(lowered.begin() + i, lowered.end());
    const NegativeWordEntry* entry =
        lx.lookup_negative(window, pos_for_lookup(s.tokens[i].pos));
    if (!entry) {
      ++i;
      continue;
    }
    size_t span = entry->tokens().size();
    if (lx.match_idiom(lowered, i)) {
      i += span;
      continue;
    }

    DetectedNegative d;
    d.entry = entry;
    d.token_index = i;
    size_t next = i + span;

    std::optional<NegSlot> slot;
    if (entry->pos == WordPos::Adverb) {
      // "Not + quantifier" negates the quantified constituent.
      if (entry->surface == "not" && next < s.tokens.size()) {
        RoleTag nr = s.tokens[next].role;
        if (nr == RoleTag::Subject || nr == RoleTag::Object)
          slot = slot_for_role(nr);
      }
      if (!slot) {
        // an adverb keeps its own constituent's role (nowhere as object);
        // Attribute/Other placements default to predicate negation
        slot = slot_for_role(s.tokens[i].role);
        if (!slot) slot = NegSlot::Predicate;
      }
    } else {
      // Pronoun and determiner negatives take their noun phrase's role.
      slot = slot_for_role(s.tokens[i].role);
      if (!slot) {
        // Outside the main-clause slots entirely; not a sentence negation.
        i = next;
        continue;
      }
    }
    d.slot = *slot;

    if (entry->surface == "not") {
      for (size_t k = next; k + 1 < lowered.size(); ++k) {
        if (lowered[k] == "at" && lowered[k + 1] == "all") d.not_at_all = true;
      }
    }
    if (entry->surface == "never" && next < lowered.size() &&
        lowered[next] == "again") {
      d.never_again = true;
    }
    if (entry->pos == WordPos::Determiner && next < s.tokens.size()) {
      d.head_plural = s.tokens[next].pos == PosTag::NounPlural;
    }

    out.push_back(d);
    i = next;
  }
  return out;
}

Structure classify_structure(const std::vector<DetectedNegative>& negatives,
                             const AnnotatedSentence&) {
  if (negatives.empty()) return Structure::NonNegative;
  bool ns = false, np = false, no = false;
  for (const auto& d : negatives) {
    switch (d.slot) {
      case NegSlot::Subject: ns = true; break;
      case NegSlot::Object: no = true; break;
      case NegSlot::Predicate: np = true; break;
      // Adverbial negatives count as predicate negation structurally.
      case NegSlot::Adverbial: np = true; break;
    }
  }
  if (ns && np && no) return Structure::NS_NP_NO;
  if (ns && np) return Structure::NS_NP_AO;
  if (ns && no) return Structure::NS_AP_NO;
  if (np && no) return Structure::AS_NP_NO;
  if (ns) return Structure::NS_AP_AO;
  if (no) return Structure::AS_AP_NO;
  return Structure::AS_NP_AO;
}

std::optional<std::string> detect_partial_trigger(
    const AnnotatedSentence& s, const std::vector<DetectedNegative>& negatives,
    const Lexicons& lx) {
  if (negatives.empty()) return std::nullopt;

  // A lexicon entry may force the partial reading; the negative word itself
  // then stands as the trigger token.
  for (const auto& d : negatives) {
    if (d.entry->force == EntryForce::PartialJiNeunAnta)
      return lowercase_ascii(s.tokens[d.token_index].surface);
  }

  std::set<size_t> negative_positions;
  for (const auto& d : negatives) negative_positions.insert(d.token_index);

  // Span of the predicate for the adjacency test.
  size_t pred_lo = s.tokens.size(), pred_hi = 0;
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].role == RoleTag::Predicate) {
      pred_lo = std::min(pred_lo, i);
      pred_hi = std::max(pred_hi, i);
    }
  }
  bool predicate_negated = false;
  for (const auto& d : negatives)
    if (d.slot == NegSlot::Predicate) predicate_negated = true;

  for (size_t i = 0; i < s.tokens.size(); ++i) {
    if (negative_positions.count(i)) continue;
    const std::string lowered = lowercase_ascii(s.tokens[i].surface);
    if (!lx.is_trigger(lowered)) continue;
    // "at all" is a fixed intensifier, not a quantifier.
    if (lowered == "all" && i > 0 &&
        lowercase_ascii(s.tokens[i - 1].surface) == "at") {
      continue;
    }
    // Inside a negated constituent?
    for (const auto& d : negatives) {
      if (slot_for_role(s.tokens[i].role) == d.slot) return lowered;
    }
    // Adjacent to a negated predicate?
    if (predicate_negated && pred_lo <= pred_hi) {
      if (i + 1 >= pred_lo && i <= pred_hi + 1) return lowered;
    }
  }
  return std::nullopt;
}

NegKind classify_kind(Structure structure,
                      const std::vector<DetectedNegative>& negatives,
                      const std::optional<std::string>& trigger) {
  if (structure == Structure::NonNegative) return NegKind::NonNegative;

  // Double negation counts distinct main slots (subject/predicate/object);
  // coordinated negatives inside one slot and clause-peripheral adverbial
  // negatives collapse into a single negation in Korean.
  std::set<NegSlot> main_slots;
  for (const auto& d : negatives) {
    if (d.slot != NegSlot::Adverbial) main_slots.insert(d.slot);
  }
  if (main_slots.size() >= 2) return NegKind::Double;

  if (trigger) return NegKind::Partial;

  bool nominal = false;
  for (const auto& d : negatives) {
    if (d.slot == NegSlot::Subject || d.slot == NegSlot::Object) nominal = true;
  }
  return nominal ? NegKind::Intensified : NegKind::General;
}

namespace {

void check_invariants(const NegationAnalysis& a) {
  std::set<NegSlot> main_slots;
  for (const auto& d : a.negatives)
    if (d.slot != NegSlot::Adverbial) main_slots.insert(d.slot);
  bool is_double = main_slots.size() >= 2;
  if ((a.kind == NegKind::Double) != is_double)
    throw EknegError("analysis invariant: double negative count mismatch");
  if ((a.kind == NegKind::NonNegative) != (a.structure == Structure::NonNegative))
    throw EknegError("analysis invariant: kind/structure NonNegative mismatch");
  if ((a.structure == Structure::NonNegative) != a.negatives.empty())
    throw EknegError("analysis invariant: NonNegative with detected negatives");
  if (a.kind == NegKind::General &&
      (a.structure != Structure::AS_NP_AO || a.partial_trigger))
    throw EknegError("analysis invariant: general negative shape");
  if (a.kind == NegKind::Partial && !a.partial_trigger)
    throw EknegError("analysis invariant: partial without trigger");
}

}  // namespace

bool NegationAnalysis::negates(NegSlot slot) const {
  for (const auto& d : negatives)
    if (d.slot == slot) return true;
  return false;
}

NegationAnalysis analyze(const AnnotatedSentence& s, const Lexicons& lx) {
  NegationAnalysis a;
  a.negatives = detect_negatives(s, lx);
  a.structure = classify_structure(a.negatives, s);
  if (a.structure != Structure::NonNegative)
    a.partial_trigger = detect_partial_trigger(s, a.negatives, lx);
  a.kind = classify_kind(a.structure, a.negatives, a.partial_trigger);
  if (a.kind != NegKind::Partial) a.partial_trigger.reset();
  for (const auto& d : a.negatives)
    if (d.entry->quasi) a.quasi = true;
  a.aspect = s.aspect;
  a.english_tense = s.tense;
  a.modal_can = s.modal_can;
  for (const auto& t : s.tokens)
    if (t.role == RoleTag::Auxiliary) a.has_auxiliary = true;
  check_invariants(a);
  return a;
}

}  // namespace ekneg
