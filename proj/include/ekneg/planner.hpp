#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekneg/analyzer.hpp"

namespace ekneg {

enum class FrameRole { Subject, Object, Adverbial, Attribute, PredicateComplement };
enum class PredicateClass { CopularNoun, LexicalVerb, Adjective, Existential };

std::string_view to_string(FrameRole r);
std::string_view to_string(PredicateClass c);
std::optional<FrameRole> parse_frame_role(std::string_view s);
std::optional<PredicateClass> parse_predicate_class(std::string_view s);

// Ordered constituent of the Korean affirmative frame.  Constituents without
// a particle slot are frozen surfaces and pass through untouched.
struct Constituent {
  std::string surface;
  FrameRole role = FrameRole::Adverbial;
  std::optional<ParticleClass> particle;
};

struct FramePredicate {
  std::string stem;                         // dictionary-form stem, pre-segmented
  PredicateClass cls = PredicateClass::LexicalVerb;
  Tense tense = Tense::Present;
  bool perfect = false;
  bool modal_can = false;
  std::string context = "General";          // Identity|Possession|Knowledge|General
  std::string affirmative;                  // conjugated affirmative predicate
};

struct KoreanFrame {
  std::vector<Constituent> constituents;
  FramePredicate predicate;

  const Constituent* find(FrameRole role) const;
  int find_index(FrameRole role) const;  // -1 when absent
};

enum class AdverbPosition {
  BeforePredicate,   // directly before the predicate word
  BeforeObject,      // before the object constituent; falls back to predicate
  NegatorInfix,      // inside the suffix template when it has an {adv} slot
  SentenceInitial,
};

struct AdverbInsert {
  std::string word;
  AdverbPosition position = AdverbPosition::BeforePredicate;
};

// Particle rewrite on one constituent: optional prefix prepended to the
// surface, and the particle slot replaced.
struct ParticleRewrite {
  int constituent = -1;
  std::string prefix;
  ParticleClass particle = ParticleClass::Additive;
};

struct TransformPlan {
  SuffixPattern suffix = SuffixPattern::JiAnta;
  std::optional<std::string> suppletion;  // conjugated replacement predicate
  std::vector<ParticleRewrite> particle_rewrites;
  std::vector<AdverbInsert> adverb_inserts;
  Tense tense = Tense::Present;
};

// Related negation word for one detected negative, or nothing.
std::optional<AdverbInsert> related_adverb(const DetectedNegative& d,
                                           NegSlot scope);

// Suffix pattern for the analysis/frame pair.  Throws on kind NonNegative.
SuffixPattern select_suffix(const NegationAnalysis& a, const KoreanFrame& f,
                            const Lexicons& lx);

std::vector<ParticleRewrite> plan_particles(const NegationAnalysis& a,
                                            const KoreanFrame& f,
                                            const Lexicons& lx);

std::vector<AdverbInsert> plan_adverbs(const NegationAnalysis& a);

TransformPlan plan(const NegationAnalysis& a, const KoreanFrame& f,
                   const Lexicons& lx);

}  // namespace ekneg
