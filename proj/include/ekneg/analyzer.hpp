#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekneg/lexicon.hpp"

namespace ekneg {

enum class PosTag {
  Noun,
  NounPlural,
  Pronoun,
  Verb,
  Auxiliary,
  Adjective,
  Adverb,
  Determiner,
  Numeral,
  Preposition,
  Conjunction,
  Other,
};

// Main-clause grammatical function.  Subordinate-clause material carries the
// role of the clause as a whole (usually Adverbial) or Other.
enum class RoleTag {
  Subject,
  Predicate,
  Auxiliary,
  Object,
  Adverbial,
  Attribute,
  Other,
};

struct Token {
  std::string surface;
  PosTag pos = PosTag::Other;
  RoleTag role = RoleTag::Other;
};

enum class EnglishTense { Present, Past, Future };
enum class Aspect { Simple, Perfect };
enum class VerbKind { Copular, Lexical };

struct AnnotatedSentence {
  std::vector<Token> tokens;
  VerbKind verb_kind = VerbKind::Lexical;
  EnglishTense tense = EnglishTense::Present;
  Aspect aspect = Aspect::Simple;
  bool modal_can = false;
};

// Constituent slot a negative word attaches to.
enum class NegSlot { Subject, Predicate, Object, Adverbial };

struct DetectedNegative {
  const NegativeWordEntry* entry = nullptr;
  NegSlot slot = NegSlot::Predicate;
  size_t token_index = 0;
  bool not_at_all = false;   // "not ... at all"
  bool never_again = false;  // "never again"
  bool head_plural = false;  // determiner negatives: number of the head noun
};

enum class Structure {
  NS_AP_AO,
  NS_NP_AO,
  NS_AP_NO,
  AS_AP_NO,
  AS_NP_AO,
  AS_NP_NO,
  NS_NP_NO,  // all three slots negated; reported under Others
  NonNegative,
};

enum class NegKind { General, Partial, Intensified, Double, NonNegative };

std::string_view to_string(Structure s);
std::string_view to_string(NegKind k);
std::optional<Structure> parse_structure(std::string_view s);
std::optional<NegKind> parse_kind(std::string_view s);

struct NegationAnalysis {
  std::vector<DetectedNegative> negatives;
  Structure structure = Structure::NonNegative;
  NegKind kind = NegKind::NonNegative;
  std::optional<std::string> partial_trigger;
  bool quasi = false;

  // English predicate features carried over for suffix selection.
  Aspect aspect = Aspect::Simple;
  EnglishTense english_tense = EnglishTense::Present;
  bool modal_can = false;
  bool has_auxiliary = false;  // an Auxiliary-role token is present

  bool negates(NegSlot slot) const;
};

// Negative words with their slots; idiom-consumed words are excluded, as are
// negatives inside constituents tagged Other (outside the main clause).
std::vector<DetectedNegative> detect_negatives(const AnnotatedSentence& s,
                                               const Lexicons& lx);

Structure classify_structure(const std::vector<DetectedNegative>& negatives,
                             const AnnotatedSentence& s);

std::optional<std::string> detect_partial_trigger(
    const AnnotatedSentence& s, const std::vector<DetectedNegative>& negatives,
    const Lexicons& lx);

NegKind classify_kind(Structure structure,
                      const std::vector<DetectedNegative>& negatives,
                      const std::optional<std::string>& trigger);

// Runs the full chain and checks the analysis invariants.
NegationAnalysis analyze(const AnnotatedSentence& s, const Lexicons& lx);

}  // namespace ekneg
