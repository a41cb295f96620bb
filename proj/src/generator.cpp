#include "ekneg/generator.hpp"

#include <algorithm>

namespace ekneg {

namespace {

PredicateShape shape_for(const FramePredicate& p) {
  if (p.cls == PredicateClass::CopularNoun) return PredicateShape::Copular;
  if (p.perfect) return PredicateShape::Perfect;
  if (p.cls == PredicateClass::Adjective) return PredicateShape::Adjective;
  return PredicateShape::Verb;
}

std::string render_constituent(const Constituent& c, const ParticleRewrite* rw,
                               std::vector<std::string>& trace) {
  if (!rw) {
    return c.particle ? attach_particle(c.surface, *c.particle) : c.surface;
  }
  if (!c.particle) {
    throw EknegError("particle rewrite on a constituent without a particle slot: '" +
                     c.surface + "'");
  }
  std::string surface = rw->prefix + c.surface;
  std::string out = attach_particle(surface, rw->particle);
  trace.push_back("particle: " + c.surface + " -> " + out);
  return out;
}

}  // namespace

RealizedSentence realize(const KoreanFrame& frame,
                         const std::optional<TransformPlan>& plan,
                         const ConjugationTable& table) {
  RealizedSentence r;
  const FramePredicate& pred = frame.predicate;
  bool copular = pred.cls == PredicateClass::CopularNoun;

  // The copular complement is folded into the predicate rendering unless the
  // negation suppletes the predicate wholesale.
  int complement_index = frame.find_index(FrameRole::PredicateComplement);
  bool consume_complement =
      copular && complement_index >= 0 &&
      (!plan || plan->suffix != SuffixPattern::Suppletive);
  if (copular && complement_index < 0)
    throw EknegError("copular frame without a predicate complement");

  if (plan) {
    for (const auto& rw : plan->particle_rewrites) {
      if (rw.constituent < 0 ||
          rw.constituent >= static_cast<int>(frame.constituents.size())) {
        throw EknegError("particle rewrite targets a missing constituent");
      }
    }
  }

  // Sort the plan's adverbs into their concrete insertion points.
  std::vector<std::string> initial, before_object, before_predicate;
  std::string infix;
  if (plan) {
    PredicateShape shape = shape_for(pred);
    bool slot = !plan->suppletion &&
                table.has_adverb_slot(plan->suffix, plan->tense, shape);
    for (const auto& ai : plan->adverb_inserts) {
      switch (ai.position) {
        case AdverbPosition::SentenceInitial:
          initial.push_back(ai.word);
          break;
        case AdverbPosition::BeforeObject:
          before_object.push_back(ai.word);
          break;
        case AdverbPosition::NegatorInfix:
          if (slot) {
            if (!infix.empty()) infix += ' ';
            infix += ai.word;
          } else {
            before_predicate.push_back(ai.word);
          }
          break;
        case AdverbPosition::BeforePredicate:
          before_predicate.push_back(ai.word);
          break;
      }
      r.trace.push_back("adverb: " + ai.word);
    }
  }

  std::vector<std::string> parts;
  for (const auto& w : initial) parts.push_back(w);

  bool object_seen = false;
  for (size_t i = 0; i < frame.constituents.size(); ++i) {
    if (consume_complement && static_cast<int>(i) == complement_index) continue;
    const Constituent& c = frame.constituents[i];
    const ParticleRewrite* rw = nullptr;
    if (plan) {
      for (const auto& cand : plan->particle_rewrites) {
        if (cand.constituent == static_cast<int>(i)) rw = &cand;
      }
    }
    if (c.role == FrameRole::Object && !object_seen) {
      object_seen = true;
      for (const auto& w : before_object) parts.push_back(w);
    }
    parts.push_back(render_constituent(c, rw, r.trace));
  }
  if (!object_seen) {
    // no rendered object: these adverbs precede the predicate instead
    before_predicate.insert(before_predicate.begin(), before_object.begin(),
                            before_object.end());
  }
  for (const auto& w : before_predicate) parts.push_back(w);

  // Predicate rendering.
  if (!plan) {
    if (copular) {
      r.predicate = frame.constituents[complement_index].surface + pred.affirmative;
    } else {
      r.predicate = pred.affirmative;
    }
    if (r.predicate.empty())
      throw EknegError("frame has no affirmative predicate form");
  } else if (plan->suppletion) {
    r.predicate = *plan->suppletion;
    r.trace.push_back("suppletion: " + r.predicate);
  } else {
    std::string stem;
    PredicateShape shape = shape_for(pred);
    if (copular) {
      const std::string& comp = frame.constituents[complement_index].surface;
      if (plan->suffix == SuffixPattern::IAnida ||
          plan->suffix == SuffixPattern::IEopda) {
        stem = comp;  // ~이 아니다 / ~이 없다 carry their own particle
      } else {
        stem = comp + pred.stem;  // e.g. 진실 + 이 -> 진실인것은 아니다
      }
    } else {
      stem = pred.stem;
    }
    r.predicate = table.conjugate(stem, plan->suffix, plan->tense, shape, infix);
    r.trace.push_back("suffix: " + std::string(to_string(plan->suffix)));
  }
  parts.push_back(r.predicate);

  std::string text;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) text += ' ';
    text += parts[i];
  }
  text += '.';
  r.text = std::move(text);
  return r;
}

}  // namespace ekneg
