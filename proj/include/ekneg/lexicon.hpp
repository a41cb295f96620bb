#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ekneg/hangul.hpp"

namespace ekneg {

enum class WordPos { Adverb, Pronoun, Determiner };

// Lexicon-level special handling for a negative word, beyond the
// part-of-speech driven rules.
enum class EntryForce {
  None,
  SuEopda,            // force the ~수 없다 pattern (hardly)
  PartialJiNeunAnta,  // classify partial, realize with ~지는 않다 (none-adverb)
};

struct NegativeWordEntry {
  std::string surface;          // lowercased, may be multiword ("no one")
  WordPos pos = WordPos::Adverb;
  std::string related_adverb;   // empty when no related adverb
  bool quasi = false;           // little/few near-negatives
  EntryForce force = EntryForce::None;

  std::vector<std::string> tokens() const;
};

struct IdiomEntry {
  std::vector<std::string> pattern;  // token sequence, "*" = one-token wildcard
  // effect is always NonNegative: a matched idiom removes the negative word
  // from consideration.
};

enum class NegationVerb { Anta, Motada };

struct SuppletivePair {
  std::string stem;
  std::string context;   // Identity | Possession | Knowledge | General
  std::string present;
  std::string past;
  std::string future;

  const std::string& form(Tense t) const;
};

class Lexicons {
 public:
  // Loads negatives.tsv, idioms.tsv, collocations.tsv, suppletives.tsv,
  // triggers.tsv and conjugation.tsv from `dir`.
  static Lexicons load(const std::string& dir);

  // Longest match over the negative-word table starting at the window head,
  // filtered by the head token's part of speech when `pos` is given.
  const NegativeWordEntry* lookup_negative(
      const std::vector<std::string>& window,
      std::optional<WordPos> pos = std::nullopt) const;

  // Idiom whose pattern covers the negative word at `position`; longest wins.
  const IdiomEntry* match_idiom(const std::vector<std::string>& tokens,
                                size_t position) const;

  // Listed collocation class, else the declared default.
  NegationVerb collocation_class(std::string_view stem) const;

  const SuppletivePair* suppletive_form(std::string_view stem,
                                        std::string_view context) const;

  bool is_trigger(std::string_view word) const;

  const ConjugationTable& conjugation() const { return conjugation_; }

  const std::vector<NegativeWordEntry>& negatives() const { return negatives_; }
  const std::vector<IdiomEntry>& idioms() const { return idioms_; }
  const std::vector<std::string>& triggers() const { return triggers_; }

 private:
  std::vector<NegativeWordEntry> negatives_;
  std::vector<IdiomEntry> idioms_;
  std::vector<std::pair<std::string, NegationVerb>> collocations_;
  NegationVerb default_collocation_ = NegationVerb::Anta;
  std::vector<SuppletivePair> suppletives_;
  std::vector<std::string> triggers_;
  ConjugationTable conjugation_;
};

std::string lowercase_ascii(std::string_view s);

}  // namespace ekneg
