#include "ekneg/record.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ekneg {

namespace {

using nlohmann::json;

const std::vector<std::pair<PosTag, std::string>> kPosNames{
    {PosTag::Noun, "Noun"},           {PosTag::NounPlural, "NounPlural"},
    {PosTag::Pronoun, "Pronoun"},     {PosTag::Verb, "Verb"},
    {PosTag::Auxiliary, "Auxiliary"}, {PosTag::Adjective, "Adjective"},
    {PosTag::Adverb, "Adverb"},       {PosTag::Determiner, "Determiner"},
    {PosTag::Numeral, "Numeral"},     {PosTag::Preposition, "Preposition"},
    {PosTag::Conjunction, "Conjunction"}, {PosTag::Other, "Other"},
};

const std::vector<std::pair<RoleTag, std::string>> kRoleTagNames{
    {RoleTag::Subject, "Subject"},   {RoleTag::Predicate, "Predicate"},
    {RoleTag::Auxiliary, "Auxiliary"}, {RoleTag::Object, "Object"},
    {RoleTag::Adverbial, "Adverbial"}, {RoleTag::Attribute, "Attribute"},
    {RoleTag::Other, "Other"},
};

const std::vector<std::pair<ParticleClass, std::string>> kParticleNames{
    {ParticleClass::Topic, "Topic"},
    {ParticleClass::Nominative, "Nominative"},
    {ParticleClass::Accusative, "Accusative"},
    {ParticleClass::Additive, "Additive"},
    {ParticleClass::Comitative, "Comitative"},
};

template <typename T>
std::string enum_name(const std::vector<std::pair<T, std::string>>& table, T v) {
  for (auto& [value, name] : table)
    if (value == v) return name;
  throw EknegError("unknown enum value");
}

template <typename T>
T enum_value(const std::vector<std::pair<T, std::string>>& table,
             const std::string& name, const char* what) {
  for (auto& [value, n] : table)
    if (n == name) return value;
  throw EknegError(std::string("unknown ") + what + ": '" + name + "'");
}

EnglishTense parse_english_tense(const std::string& s) {
  if (s == "Present") return EnglishTense::Present;
  if (s == "Past") return EnglishTense::Past;
  if (s == "Future") return EnglishTense::Future;
  throw EknegError("unknown tense: '" + s + "'");
}

std::string english_tense_name(EnglishTense t) {
  switch (t) {
    case EnglishTense::Present: return "Present";
    case EnglishTense::Past: return "Past";
    case EnglishTense::Future: return "Future";
  }
  return "Present";
}

}  // namespace

namespace {
TransferRecord parse_record_fields(const json& j);
}

TransferRecord parse_record(const std::string& json_line) {
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw EknegError(std::string("record is not valid JSON: ") + e.what());
  }
  try {
    return parse_record_fields(j);
  } catch (const json::exception& e) {
    throw EknegError(std::string("malformed record: ") + e.what());
  }
}

namespace {
TransferRecord parse_record_fields(const json& j) {
  TransferRecord rec;
  rec.id = j.at("id").get<std::string>();
  if (rec.id.empty()) throw EknegError("record with empty id");
  rec.provenance = j.value("provenance", "");

  const json& en = j.at("english");
  for (const auto& t : en.at("tokens")) {
    Token tok;
    tok.surface = t.at(0).get<std::string>();
    tok.pos = enum_value(kPosNames, t.at(1).get<std::string>(), "pos tag");
    tok.role = enum_value(kRoleTagNames, t.at(2).get<std::string>(), "role tag");
    rec.english.tokens.push_back(std::move(tok));
  }
  rec.english.verb_kind =
      en.value("verbKind", "Lexical") == "Copular" ? VerbKind::Copular
                                                   : VerbKind::Lexical;
  rec.english.tense = parse_english_tense(en.value("tense", "Present"));
  rec.english.aspect =
      en.value("aspect", "Simple") == "Perfect" ? Aspect::Perfect : Aspect::Simple;
  rec.english.modal_can = en.value("modalCan", false);

  const json& fr = j.at("frame");
  for (const auto& c : fr.at("constituents")) {
    Constituent con;
    con.surface = c.at("surface").get<std::string>();
    auto role = parse_frame_role(c.at("role").get<std::string>());
    if (!role) throw EknegError("unknown frame role in record " + rec.id);
    con.role = *role;
    if (c.contains("particle") && !c.at("particle").is_null()) {
      con.particle =
          enum_value(kParticleNames, c.at("particle").get<std::string>(),
                     "particle class");
    }
    rec.frame.constituents.push_back(std::move(con));
  }
  const json& pr = fr.at("predicate");
  rec.frame.predicate.stem = pr.value("stem", "");
  auto cls = parse_predicate_class(pr.at("class").get<std::string>());
  if (!cls) throw EknegError("unknown predicate class in record " + rec.id);
  rec.frame.predicate.cls = *cls;
  auto tense = parse_tense(pr.at("tense").get<std::string>());
  if (!tense) throw EknegError("unknown frame tense in record " + rec.id);
  rec.frame.predicate.tense = *tense;
  rec.frame.predicate.perfect = pr.value("perfect", false);
  rec.frame.predicate.modal_can = pr.value("modalCan", false);
  rec.frame.predicate.context = pr.value("context", "General");
  rec.frame.predicate.affirmative = pr.value("affirmative", "");

  if (j.contains("gold") && !j.at("gold").is_null()) {
    rec.gold = j.at("gold").get<std::string>();
    if (rec.gold->empty())
      throw EknegError("record " + rec.id + " has an empty gold field");
  }
  if (j.contains("expect")) {
    const json& ex = j.at("expect");
    if (ex.contains("kind")) {
      auto k = parse_kind(ex.at("kind").get<std::string>());
      if (!k) throw EknegError("unknown expected kind in record " + rec.id);
      rec.expect_kind = k;
    }
    if (ex.contains("structure")) {
      auto st = parse_structure(ex.at("structure").get<std::string>());
      if (!st) throw EknegError("unknown expected structure in record " + rec.id);
      rec.expect_structure = st;
    }
  }
  return rec;
}
}  // namespace

std::string serialize_record(const TransferRecord& rec) {
  json j;
  j["id"] = rec.id;
  if (!rec.provenance.empty()) j["provenance"] = rec.provenance;
  json tokens = json::array();
  for (const auto& t : rec.english.tokens) {
    tokens.push_back({t.surface, enum_name(kPosNames, t.pos),
                      enum_name(kRoleTagNames, t.role)});
  }
  j["english"] = {
      {"tokens", tokens},
      {"verbKind", rec.english.verb_kind == VerbKind::Copular ? "Copular" : "Lexical"},
      {"tense", english_tense_name(rec.english.tense)},
      {"aspect", rec.english.aspect == Aspect::Perfect ? "Perfect" : "Simple"},
      {"modalCan", rec.english.modal_can},
  };
  json cons = json::array();
  for (const auto& c : rec.frame.constituents) {
    json jc = {{"surface", c.surface}, {"role", std::string(to_string(c.role))}};
    if (c.particle) jc["particle"] = enum_name(kParticleNames, *c.particle);
    cons.push_back(jc);
  }
  j["frame"] = {
      {"constituents", cons},
      {"predicate",
       {{"stem", rec.frame.predicate.stem},
        {"class", std::string(to_string(rec.frame.predicate.cls))},
        {"tense", std::string(to_string(rec.frame.predicate.tense))},
        {"perfect", rec.frame.predicate.perfect},
        {"modalCan", rec.frame.predicate.modal_can},
        {"context", rec.frame.predicate.context},
        {"affirmative", rec.frame.predicate.affirmative}}},
  };
  if (rec.gold) j["gold"] = *rec.gold;
  if (rec.expect_kind || rec.expect_structure) {
    json ex;
    if (rec.expect_kind) ex["kind"] = std::string(to_string(*rec.expect_kind));
    if (rec.expect_structure)
      ex["structure"] = std::string(to_string(*rec.expect_structure));
    j["expect"] = ex;
  }
  return j.dump();
}

std::vector<TransferRecord> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EknegError("cannot open corpus file: " + path);
  std::vector<TransferRecord> out;
  std::set<std::string> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      TransferRecord rec = parse_record(line);
      if (!ids.insert(rec.id).second)
        throw EknegError("duplicate record id: " + rec.id);
      out.push_back(std::move(rec));
    } catch (const std::exception& e) {
      throw EknegError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

const std::vector<std::string>& CategoryReport::columns() {
  static const std::vector<std::string> cols{
      "NS-AP-AO", "AS-NP-AO", "AS-AP-NO", "NS-NP-AO",
      "NS-AP-NO", "AS-NP-NO", "Others"};
  return cols;
}

void CategoryReport::add(const NegationAnalysis& analysis) {
  ++total;
  std::string col(to_string(analysis.structure));
  bool named = false;
  for (const auto& c : columns())
    if (c == col) named = true;
  if (!named) col = "Others";
  ++structure_counts[col];
  ++kind_counts[std::string(to_string(analysis.kind))];
  if (analysis.kind != NegKind::NonNegative) ++negative;
}

std::string CategoryReport::format() const {
  std::ostringstream out;
  for (size_t i = 0; i < columns().size(); ++i) {
    if (i) out << '\t';
    out << columns()[i];
  }
  out << '\n';
  for (size_t i = 0; i < columns().size(); ++i) {
    if (i) out << '\t';
    auto it = structure_counts.find(columns()[i]);
    out << (it == structure_counts.end() ? 0 : it->second);
  }
  out << '\n';
  out << "kinds:";
  for (const char* k : {"General", "Partial", "Intensified", "Double", "NonNegative"}) {
    auto it = kind_counts.find(k);
    out << ' ' << k << '=' << (it == kind_counts.end() ? 0 : it->second);
  }
  out << '\n';
  double pct = total == 0 ? 0.0 : 100.0 * negative / total;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "negative: %d/%d (%.1f%%)", negative, total, pct);
  out << buf << '\n';
  return out.str();
}

}  // namespace ekneg
