#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ekneg {

struct EknegError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- UTF-8 helpers -------------------------------------------------------

std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(char32_t cp);
std::string utf8_encode(std::u32string_view s);

// --- Hangul syllable arithmetic ------------------------------------------

inline constexpr char32_t kSyllableBase = 0xAC00;  // 가
inline constexpr char32_t kSyllableLast = 0xD7A3;  // 힣
inline constexpr int kLeadCount = 19;
inline constexpr int kVowelCount = 21;
inline constexpr int kTailCount = 28;  // slot 0 = open syllable

// One precomposed syllable split into jamo indices.
// tail is absent exactly when the syllable is open.
struct SyllableParts {
  int lead = 0;              // 초성 0..18
  int vowel = 0;             // 중성 0..20
  std::optional<int> tail;   // 종성 1..27
};

bool is_syllable(char32_t cp);

// Total function: non-Hangul input maps to nullopt, never throws.
std::optional<SyllableParts> decompose_syllable(char32_t cp);
char32_t compose_syllable(const SyllableParts& parts);

// True iff the last syllable of `word` carries a final consonant.
// Throws if the last character is not a precomposed Hangul syllable.
bool has_final_consonant(std::string_view word);

// --- Particles (josa) -----------------------------------------------------

enum class ParticleClass {
  Topic,       // 는/은
  Nominative,  // 가/이
  Accusative,  // 를/을
  Additive,    // 도
  Comitative,  // 와/과
};

std::string_view particle_after_vowel(ParticleClass pc);
std::string_view particle_after_consonant(ParticleClass pc);

// word + allomorph chosen by the final-consonant status of `word`.
std::string attach_particle(std::string_view word, ParticleClass pc);

// --- Negative suffix conjugation ------------------------------------------

enum class SuffixPattern {
  JiAnta,          // ~지 않다
  JiMotada,        // ~지 못하다
  IAnida,          // ~이 아니다
  IEopda,          // ~이 없다
  NJeokIEopda,     // ~ㄴ 적이 없다
  NGeosEunAnida,   // ~ㄴ 것은 아니다
  JiNeunAnta,      // ~지는 않다
  SuNeunEopda,     // ~수는 없다
  SuEopda,         // ~수 없다
  Suppletive,      // stem replaced wholesale, no suffix
};

enum class Tense { Present, Past, Future, Ability };

// Refines a (pattern, tense) table lookup by the shape of the predicate.
enum class PredicateShape { Default, Verb, Adjective, Copular, Perfect };

std::string_view to_string(SuffixPattern p);
std::string_view to_string(Tense t);
std::optional<SuffixPattern> parse_suffix_pattern(std::string_view s);
std::optional<Tense> parse_tense(std::string_view s);

// ㄴ/은 adnominal attachment: fuses ㄴ into an open final syllable,
// otherwise appends 은.  가보 -> 가본, 읽 -> 읽은.
std::string attach_nieun(std::string_view stem);
// ㄹ/을 prospective attachment: 하 -> 할, 믿 -> 믿을.
std::string attach_rieul(std::string_view stem);

// Table-driven conjugation of the negative suffix patterns.
//
// Rows come from a tab-separated file: pattern, tense, shape, template.
// Template placeholders: {s} stem, {s+n} ㄴ/은-attached stem,
// {s+l} ㄹ/을-attached stem, {s+nom} stem with nominative particle,
// {adv} optional adverb infix slot (renders as "adv " or "").
class ConjugationTable {
 public:
  static ConjugationTable load(const std::string& path);

  bool supports(SuffixPattern p, Tense t,
                PredicateShape shape = PredicateShape::Default) const;
  bool has_adverb_slot(SuffixPattern p, Tense t,
                       PredicateShape shape = PredicateShape::Default) const;

  // Throws EknegError naming the pair when (pattern, tense) is unsupported.
  std::string conjugate(std::string_view stem, SuffixPattern p, Tense t,
                        PredicateShape shape = PredicateShape::Default,
                        std::string_view adverb_infix = {}) const;

  size_t row_count() const { return rows_.size(); }
  std::vector<std::tuple<SuffixPattern, Tense, PredicateShape>> supported_rows() const;

 private:
  const std::string* find(SuffixPattern p, Tense t, PredicateShape shape) const;
  std::map<std::tuple<int, int, int>, std::string> rows_;
};

}  // namespace ekneg
