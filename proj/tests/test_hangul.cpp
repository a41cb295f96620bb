#include "doctest.h"
#include "test_util.hpp"

using namespace ekneg;

TEST_SUITE("hangul") {
  TEST_CASE("syllable decomposition") {
    auto han = decompose_syllable(U'한');
    REQUIRE(han.has_value());
    CHECK(han->lead == 18);   // ㅎ
    CHECK(han->vowel == 0);   // ㅏ
    CHECK(han->tail == 4);    // ㄴ

    auto ja = decompose_syllable(U'자');
    REQUIRE(ja.has_value());
    CHECK(ja->lead == 12);    // ㅈ
    CHECK(ja->vowel == 0);
    CHECK_FALSE(ja->tail.has_value());

    CHECK_FALSE(decompose_syllable(U'a').has_value());
    CHECK_FALSE(decompose_syllable(U'ㄱ').has_value());
  }

  TEST_CASE("round-trip over the whole syllable block") {
    for (char32_t cp = kSyllableBase; cp <= kSyllableLast; ++cp) {
      auto parts = decompose_syllable(cp);
      REQUIRE(parts.has_value());
      REQUIRE(compose_syllable(*parts) == cp);
      // tail is absent exactly when the block offset is a multiple of 28
      bool open = (cp - kSyllableBase) % 28 == 0;
      REQUIRE(parts->tail.has_value() == !open);
    }
  }

  TEST_CASE("final consonant test") {
    CHECK(has_final_consonant("사람"));
    CHECK_FALSE(has_final_consonant("녀자"));
    CHECK(has_final_consonant("친구들"));
    CHECK_THROWS_WITH_AS(has_final_consonant("abc"),
                         doctest::Contains("'c'"), EknegError);
    CHECK_THROWS_AS(has_final_consonant(""), EknegError);
  }

  TEST_CASE("particle attachment") {
    CHECK(attach_particle("친구들", ParticleClass::Topic) == "친구들은");
    CHECK(attach_particle("녀자", ParticleClass::Topic) == "녀자는");
    CHECK(attach_particle("친구들", ParticleClass::Nominative) == "친구들이");
    CHECK(attach_particle("사람", ParticleClass::Additive) == "사람도");
    CHECK(attach_particle("동생", ParticleClass::Comitative) == "동생과");
    CHECK(attach_particle("녀자", ParticleClass::Comitative) == "녀자와");
    CHECK(attach_particle("말", ParticleClass::Accusative) == "말을");
    CHECK(attach_particle("기사", ParticleClass::Accusative) == "기사를");
  }

  TEST_CASE("allomorph agreement over the syllable block") {
    // post-consonant allomorph iff the word has a final consonant
    for (char32_t cp = kSyllableBase; cp <= kSyllableLast; cp += 7) {
      std::string word = utf8_encode(cp);
      bool closed = has_final_consonant(word);
      for (ParticleClass pc :
           {ParticleClass::Topic, ParticleClass::Nominative,
            ParticleClass::Accusative, ParticleClass::Additive,
            ParticleClass::Comitative}) {
        std::string attached = attach_particle(word, pc);
        std::string suffix = attached.substr(word.size());
        REQUIRE(suffix == (closed ? particle_after_consonant(pc)
                                  : particle_after_vowel(pc)));
      }
    }
  }

  TEST_CASE("adnominal and prospective attachment") {
    CHECK(attach_nieun("가보") == "가본");
    CHECK(attach_nieun("참가하") == "참가한");
    CHECK(attach_nieun("진실이") == "진실인");
    CHECK(attach_nieun("읽") == "읽은");
    CHECK(attach_rieul("하") == "할");
    CHECK(attach_rieul("대답하") == "대답할");
    CHECK(attach_rieul("믿") == "믿을");
    CHECK(attach_rieul("풀") == "풀");
  }

  TEST_CASE("negative suffix conjugation") {
    const ConjugationTable& table = test::lexicons().conjugation();
    CHECK(table.conjugate("일어나", SuffixPattern::JiAnta, Tense::Present) ==
          "일어나지 않는다");
    CHECK(table.conjugate("달성하", SuffixPattern::JiMotada, Tense::Past) ==
          "달성하지 못하였다");
    CHECK(table.conjugate("움직이", SuffixPattern::JiNeunAnta, Tense::Future) ==
          "움직이지는 않을것이다");
    CHECK(table.conjugate("영향을 받", SuffixPattern::JiAnta, Tense::Future) ==
          "영향을 받지 않을것이다");
    CHECK(table.conjugate("비슷하", SuffixPattern::JiAnta, Tense::Present,
                          PredicateShape::Adjective) == "비슷하지 않다");
    CHECK(table.conjugate("읽", SuffixPattern::NGeosEunAnida, Tense::Present,
                          PredicateShape::Perfect) == "읽은것은 아니다");
    CHECK(table.conjugate("나의 녀동생", SuffixPattern::IAnida, Tense::Present) ==
          "나의 녀동생이 아니다");
  }

  TEST_CASE("adverb infix slot") {
    const ConjugationTable& table = test::lexicons().conjugation();
    CHECK(table.has_adverb_slot(SuffixPattern::NJeokIEopda, Tense::Present));
    CHECK_FALSE(table.has_adverb_slot(SuffixPattern::JiAnta, Tense::Present));
    CHECK(table.conjugate("가보", SuffixPattern::NJeokIEopda, Tense::Present,
                          PredicateShape::Perfect, "전혀") == "가본적이 전혀 없다");
    CHECK(table.conjugate("가보", SuffixPattern::NJeokIEopda, Tense::Present,
                          PredicateShape::Perfect) == "가본적이 없다");
  }

  TEST_CASE("unsupported pairs are rejected with the pair named") {
    const ConjugationTable& table = test::lexicons().conjugation();
    CHECK_FALSE(table.supports(SuffixPattern::NJeokIEopda, Tense::Future));
    CHECK_THROWS_WITH_AS(
        table.conjugate("가보", SuffixPattern::NJeokIEopda, Tense::Future),
        doctest::Contains("NJeokIEopda"), EknegError);
    CHECK_THROWS_WITH_AS(
        table.conjugate("가보", SuffixPattern::NJeokIEopda, Tense::Future),
        doctest::Contains("Future"), EknegError);
    CHECK_THROWS_AS(table.conjugate("하", SuffixPattern::Suppletive, Tense::Present),
                    EknegError);
  }

  TEST_CASE("every supported row yields a negation morpheme") {
    const ConjugationTable& table = test::lexicons().conjugation();
    CHECK(table.row_count() > 20);
    for (auto [p, t, shape] : table.supported_rows()) {
      std::string s = table.conjugate("하", p, t, shape, "");
      REQUIRE_FALSE(s.empty());
      bool marked = s.find("않") != std::string::npos ||
                    s.find("못") != std::string::npos ||
                    s.find("아니") != std::string::npos ||
                    s.find("없") != std::string::npos ||
                    s.find("수") != std::string::npos;
      REQUIRE(marked);
    }
  }

  TEST_CASE("operations are deterministic") {
    for (int i = 0; i < 3; ++i) {
      CHECK(attach_particle("사람", ParticleClass::Topic) == "사람은");
      CHECK(test::lexicons().conjugation().conjugate(
                "믿", SuffixPattern::SuEopda, Tense::Present) == "믿을수 없다");
    }
  }
}
