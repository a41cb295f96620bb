#include "ekneg/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ekneg {

std::string lowercase_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::vector<std::string> NegativeWordEntry::tokens() const {
  std::vector<std::string> out;
  std::istringstream in(surface);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

const std::string& SuppletivePair::form(Tense t) const {
  switch (t) {
    case Tense::Past: return past;
    case Tense::Future: return future;
    default: return present;
  }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Applies `fn` to every data row of a tab-separated file.
template <typename Fn>
void for_each_row(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw EknegError("cannot open lexicon file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    fn(split_tabs(line), lineno);
  }
}

WordPos parse_pos(const std::string& s, const std::string& where) {
  if (s == "Adverb") return WordPos::Adverb;
  if (s == "Pronoun") return WordPos::Pronoun;
  if (s == "Determiner") return WordPos::Determiner;
  throw EknegError("bad part of speech '" + s + "' at " + where);
}

EntryForce parse_force(const std::string& s, const std::string& where) {
  if (s == "-" || s.empty()) return EntryForce::None;
  if (s == "SuEopda") return EntryForce::SuEopda;
  if (s == "PartialJiNeunAnta") return EntryForce::PartialJiNeunAnta;
  throw EknegError("bad override '" + s + "' at " + where);
}

bool contains_productive_suffix(const std::string& form) {
  return form.find("지 않") != std::string::npos ||
         form.find("지 못하") != std::string::npos ||
         form.find("지는 않") != std::string::npos;
}

}  // namespace

Lexicons Lexicons::load(const std::string& dir) {
  Lexicons lx;

  for_each_row(dir + "/negatives.tsv", [&](std::vector<std::string> cols, int n) {
    if (cols.size() != 5)
      throw EknegError("negatives.tsv:" + std::to_string(n) + ": want 5 columns");
    NegativeWordEntry e;
    e.surface = lowercase_ascii(cols[0]);
    e.pos = parse_pos(cols[1], "negatives.tsv:" + std::to_string(n));
    e.related_adverb = cols[2] == "-" ? "" : cols[2];
    e.quasi = cols[3] == "1";
    e.force = parse_force(cols[4], "negatives.tsv:" + std::to_string(n));
    for (const auto& prev : lx.negatives_) {
      if (prev.surface == e.surface && prev.pos == e.pos)
        throw EknegError("duplicate negative entry: " + e.surface);
    }
    lx.negatives_.push_back(std::move(e));
  });

  for_each_row(dir + "/idioms.tsv", [&](std::vector<std::string> cols, int n) {
    if (cols.empty() || cols[0].empty())
      throw EknegError("idioms.tsv:" + std::to_string(n) + ": empty pattern");
    IdiomEntry e;
    e.pattern = split_ws(lowercase_ascii(cols[0]));
    bool has_negative = false;
    for (const auto& tok : e.pattern) {
      for (const auto& neg : lx.negatives_) {
        auto nt = neg.tokens();
        if (!nt.empty() && nt[0] == tok) has_negative = true;
      }
    }
    if (!has_negative)
      throw EknegError("idiom without a negative word: " + cols[0]);
    lx.idioms_.push_back(std::move(e));
  });

  for_each_row(dir + "/collocations.tsv", [&](std::vector<std::string> cols, int n) {
    if (cols.size() != 2)
      throw EknegError("collocations.tsv:" + std::to_string(n) + ": want 2 columns");
    NegationVerb v = cols[1] == "Motada" ? NegationVerb::Motada : NegationVerb::Anta;
    if (cols[0] == "@default") {
      lx.default_collocation_ = v;
    } else {
      lx.collocations_.emplace_back(cols[0], v);
    }
  });

  for_each_row(dir + "/suppletives.tsv", [&](std::vector<std::string> cols, int n) {
    if (cols.size() != 5)
      throw EknegError("suppletives.tsv:" + std::to_string(n) + ": want 5 columns");
    SuppletivePair p{cols[0], cols[1], cols[2], cols[3], cols[4]};
    for (const std::string* f : {&p.present, &p.past, &p.future}) {
      if (contains_productive_suffix(*f))
        throw EknegError("suppletive form carries a productive suffix: " + *f);
    }
    lx.suppletives_.push_back(std::move(p));
  });

  for_each_row(dir + "/triggers.tsv", [&](std::vector<std::string> cols, int) {
    lx.triggers_.push_back(lowercase_ascii(cols[0]));
  });

  lx.conjugation_ = ConjugationTable::load(dir + "/conjugation.tsv");
  return lx;
}

const NegativeWordEntry* Lexicons::lookup_negative(
    const std::vector<std::string>& window, std::optional<WordPos> pos) const {
  const NegativeWordEntry* best = nullptr;
  size_t best_len = 0;
  for (const auto& e : negatives_) {
    if (pos && e.pos != *pos) continue;
    auto toks = e.tokens();
    if (toks.empty() || toks.size() > window.size()) continue;
    bool match = true;
    for (size_t i = 0; i < toks.size(); ++i) {
      if (toks[i] != lowercase_ascii(window[i])) {
        match = false;
        break;
      }
    }
    if (match && toks.size() > best_len) {
      best = &e;
      best_len = toks.size();
    }
  }
  return best;
}

const IdiomEntry* Lexicons::match_idiom(const std::vector<std::string>& tokens,
                                        size_t position) const {
  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const auto& t : tokens) lowered.push_back(lowercase_ascii(t));

  const IdiomEntry* best = nullptr;
  size_t best_len = 0;
  for (const auto& idiom : idioms_) {
    const auto& pat = idiom.pattern;
    // Align the pattern over `position` at every offset.
    for (size_t k = 0; k < pat.size(); ++k) {
      if (k > position) break;
      size_t start = position - k;
      if (start + pat.size() > lowered.size()) continue;
      bool match = true;
      bool covers = false;
      for (size_t i = 0; i < pat.size(); ++i) {
        if (pat[i] == "*") continue;
        if (pat[i] != lowered[start + i]) {
          match = false;
          break;
        }
        if (start + i == position) covers = true;
      }
      if (match && covers && pat.size() > best_len) {
        best = &idiom;
        best_len = pat.size();
      }
    }
  }
  return best;
}

NegationVerb Lexicons::collocation_class(std::string_view stem) const {
  for (const auto& [s, v] : collocations_)
    if (s == stem) return v;
  return default_collocation_;
}

const SuppletivePair* Lexicons::suppletive_form(std::string_view stem,
                                                std::string_view context) const {
  for (const auto& p : suppletives_)
    if (p.stem == stem && p.context == context) return &p;
  return nullptr;
}

bool Lexicons::is_trigger(std::string_view word) const {
  std::string lowered = lowercase_ascii(word);
  return std::find(triggers_.begin(), triggers_.end(), lowered) != triggers_.end();
}

}  // namespace ekneg
