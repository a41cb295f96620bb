#include "ekneg/hangul.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace ekneg {

std::u32string utf8_decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    int len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6) {
      cp = c & 0x1F;
      len = 2;
    } else if ((c >> 4) == 0xE) {
      cp = c & 0x0F;
      len = 3;
    } else if ((c >> 3) == 0x1E) {
      cp = c & 0x07;
      len = 4;
    } else {
      throw EknegError("invalid UTF-8 byte in input");
    }
    if (i + len > s.size()) throw EknegError("truncated UTF-8 sequence");
    for (int k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc >> 6) != 0x2) throw EknegError("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (cc & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string utf8_encode(std::u32string_view s) {
  std::string out;
  for (char32_t cp : s) out += utf8_encode(cp);
  return out;
}

bool is_syllable(char32_t cp) {
  return cp >= kSyllableBase && cp <= kSyllableLast;
}

std::optional<SyllableParts> decompose_syllable(char32_t cp) {
  if (!is_syllable(cp)) return std::nullopt;
  int offset = static_cast<int>(cp - kSyllableBase);
  SyllableParts p;
  p.lead = offset / (kVowelCount * kTailCount);
  p.vowel = (offset / kTailCount) % kVowelCount;
  int tail = offset % kTailCount;
  if (tail != 0) p.tail = tail;
  return p;
}

char32_t compose_syllable(const SyllableParts& parts) {
  if (parts.lead < 0 || parts.lead >= kLeadCount || parts.vowel < 0 ||
      parts.vowel >= kVowelCount ||
      (parts.tail && (*parts.tail < 1 || *parts.tail >= kTailCount))) {
    throw EknegError("jamo index out of range");
  }
  int tail = parts.tail.value_or(0);
  return kSyllableBase +
         (static_cast<char32_t>(parts.lead) * kVowelCount + parts.vowel) *
             kTailCount +
         tail;
}

bool has_final_consonant(std::string_view word) {
  if (word.empty()) throw EknegError("empty word has no final syllable");
  std::u32string cps = utf8_decode(word);
  char32_t last = cps.back();
  auto parts = decompose_syllable(last);
  if (!parts) {
    throw EknegError("last character is not a Hangul syllable: '" +
                     utf8_encode(last) + "'");
  }
  return parts->tail.has_value();
}

std::string_view particle_after_vowel(ParticleClass pc) {
  switch (pc) {
    case ParticleClass::Topic: return "는";
    case ParticleClass::Nominative: return "가";
    case ParticleClass::Accusative: return "를";
    case ParticleClass::Additive: return "도";
    case ParticleClass::Comitative: return "와";
  }
  throw EknegError("unknown particle class");
}

std::string_view particle_after_consonant(ParticleClass pc) {
  switch (pc) {
    case ParticleClass::Topic: return "은";
    case ParticleClass::Nominative: return "이";
    case ParticleClass::Accusative: return "을";
    case ParticleClass::Additive: return "도";
    case ParticleClass::Comitative: return "과";
  }
  throw EknegError("unknown particle class");
}

std::string attach_particle(std::string_view word, ParticleClass pc) {
  bool closed = has_final_consonant(word);
  std::string out(word);
  out += closed ? particle_after_consonant(pc) : particle_after_vowel(pc);
  return out;
}

namespace {

constexpr int kTailNieun = 4;  // ㄴ
constexpr int kTailRieul = 8;  // ㄹ

std::string attach_tail_or_syllable(std::string_view stem, int tail,
                                    std::string_view fallback) {
  if (stem.empty()) throw EknegError("empty stem");
  std::u32string cps = utf8_decode(stem);
  auto parts = decompose_syllable(cps.back());
  if (!parts) {
    throw EknegError("stem does not end in a Hangul syllable: '" +
                     std::string(stem) + "'");
  }
  if (!parts->tail) {
    parts->tail = tail;
    cps.back() = compose_syllable(*parts);
    return utf8_encode(cps);
  }
  std::string out(stem);
  out += fallback;
  return out;
}

}  // namespace

std::string attach_nieun(std::string_view stem) {
  return attach_tail_or_syllable(stem, kTailNieun, "은");
}

std::string attach_rieul(std::string_view stem) {
  // Stems already ending in ㄹ keep it: 풀 -> 풀수.
  std::u32string cps = utf8_decode(stem);
  if (!cps.empty()) {
    auto parts = decompose_syllable(cps.back());
    if (parts && parts->tail == kTailRieul) return std::string(stem);
  }
  return attach_tail_or_syllable(stem, kTailRieul, "을");
}

namespace {

const std::array<std::pair<SuffixPattern, std::string_view>, 10> kPatternNames{{
    {SuffixPattern::JiAnta, "JiAnta"},
    {SuffixPattern::JiMotada, "JiMotada"},
    {SuffixPattern::IAnida, "IAnida"},
    {SuffixPattern::IEopda, "IEopda"},
    {SuffixPattern::NJeokIEopda, "NJeokIEopda"},
    {SuffixPattern::NGeosEunAnida, "NGeosEunAnida"},
    {SuffixPattern::JiNeunAnta, "JiNeunAnta"},
    {SuffixPattern::SuNeunEopda, "SuNeunEopda"},
    {SuffixPattern::SuEopda, "SuEopda"},
    {SuffixPattern::Suppletive, "Suppletive"},
}};

const std::array<std::pair<Tense, std::string_view>, 4> kTenseNames{{
    {Tense::Present, "Present"},
    {Tense::Past, "Past"},
    {Tense::Future, "Future"},
    {Tense::Ability, "Ability"},
}};

const std::array<std::pair<PredicateShape, std::string_view>, 5> kShapeNames{{
    {PredicateShape::Default, "any"},
    {PredicateShape::Verb, "verb"},
    {PredicateShape::Adjective, "adj"},
    {PredicateShape::Copular, "copular"},
    {PredicateShape::Perfect, "perfect"},
}};

std::optional<PredicateShape> parse_shape(std::string_view s) {
  for (auto& [v, n] : kShapeNames)
    if (n == s) return v;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(SuffixPattern p) {
  for (auto& [v, n] : kPatternNames)
    if (v == p) return n;
  return "?";
}

std::string_view to_string(Tense t) {
  for (auto& [v, n] : kTenseNames)
    if (v == t) return n;
  return "?";
}

std::optional<SuffixPattern> parse_suffix_pattern(std::string_view s) {
  for (auto& [v, n] : kPatternNames)
    if (n == s) return v;
  return std::nullopt;
}

std::optional<Tense> parse_tense(std::string_view s) {
  for (auto& [v, n] : kTenseNames)
    if (n == s) return v;
  return std::nullopt;
}

ConjugationTable ConjugationTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EknegError("cannot open conjugation table: " + path);
  ConjugationTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 4) {
      throw EknegError("bad conjugation row at " + path + ":" +
                       std::to_string(lineno));
    }
    auto p = parse_suffix_pattern(cols[0]);
    auto t = parse_tense(cols[1]);
    auto sh = parse_shape(cols[2]);
    if (!p || !t || !sh) {
      throw EknegError("bad pattern/tense/shape at " + path + ":" +
                       std::to_string(lineno));
    }
    table.rows_[{static_cast<int>(*p), static_cast<int>(*t),
                 static_cast<int>(*sh)}] = cols[3];
  }
  if (table.rows_.empty()) throw EknegError("empty conjugation table: " + path);
  return table;
}

const std::string* ConjugationTable::find(SuffixPattern p, Tense t,
                                          PredicateShape shape) const {
  auto it = rows_.find(
      {static_cast<int>(p), static_cast<int>(t), static_cast<int>(shape)});
  if (it != rows_.end()) return &it->second;
  if (shape != PredicateShape::Default) {
    it = rows_.find({static_cast<int>(p), static_cast<int>(t),
                     static_cast<int>(PredicateShape::Default)});
    if (it != rows_.end()) return &it->second;
  }
  return nullptr;
}

bool ConjugationTable::supports(SuffixPattern p, Tense t,
                                PredicateShape shape) const {
  return find(p, t, shape) != nullptr;
}

bool ConjugationTable::has_adverb_slot(SuffixPattern p, Tense t,
                                       PredicateShape shape) const {
  const std::string* tmpl = find(p, t, shape);
  return tmpl && tmpl->find("{adv}") != std::string::npos;
}

std::string ConjugationTable::conjugate(std::string_view stem, SuffixPattern p,
                                        Tense t, PredicateShape shape,
                                        std::string_view adverb_infix) const {
  const std::string* tmpl = find(p, t, shape);
  if (!tmpl) {
    throw EknegError("unsupported conjugation: pattern=" +
                     std::string(to_string(p)) +
                     " tense=" + std::string(to_string(t)));
  }
  std::string out;
  size_t i = 0;
  while (i < tmpl->size()) {
    if ((*tmpl)[i] == '{') {
      size_t close = tmpl->find('}', i);
      if (close == std::string::npos) throw EknegError("bad template: " + *tmpl);
      std::string_view key(tmpl->data() + i + 1, close - i - 1);
      if (key == "s") {
        out += stem;
      } else if (key == "s+n") {
        out += attach_nieun(stem);
      } else if (key == "s+l") {
        out += attach_rieul(stem);
      } else if (key == "s+nom") {
        out += attach_particle(stem, ParticleClass::Nominative);
      } else if (key == "adv") {
        if (!adverb_infix.empty()) {
          out += adverb_infix;
          out += ' ';
        }
      } else {
        throw EknegError("unknown template key {" + std::string(key) + "}");
      }
      i = close + 1;
    } else {
      out.push_back((*tmpl)[i]);
      ++i;
    }
  }
  return out;
}

std::vector<std::tuple<SuffixPattern, Tense, PredicateShape>>
ConjugationTable::supported_rows() const {
  std::vector<std::tuple<SuffixPattern, Tense, PredicateShape>> out;
  for (auto& [key, _] : rows_) {
    out.emplace_back(static_cast<SuffixPattern>(std::get<0>(key)),
                     static_cast<Tense>(std::get<1>(key)),
                     static_cast<PredicateShape>(std::get<2>(key)));
  }
  return out;
}

}  // namespace ekneg
