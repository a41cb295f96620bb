#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace ekneg;

TEST_SUITE("lexicon") {
  TEST_CASE("seeded inventory matches the reference word lists") {
    std::set<std::string> adverbs, pronouns, determiners;
    for (const auto& e : test::lexicons().negatives()) {
      switch (e.pos) {
        case WordPos::Adverb: adverbs.insert(e.surface); break;
        case WordPos::Pronoun: pronouns.insert(e.surface); break;
        case WordPos::Determiner: determiners.insert(e.surface); break;
      }
    }
    CHECK(adverbs == std::set<std::string>{"not", "never", "hardly", "little",
                                           "nowhere", "nothing", "none"});
    CHECK(pronouns == std::set<std::string>{"no one", "nobody", "nothing",
                                            "none", "little"});
    CHECK(determiners == std::set<std::string>{"no", "few", "little"});
  }

  TEST_CASE("longest match wins") {
    const auto& lx = test::lexicons();
    const auto* e = lx.lookup_negative({"no", "one", "could"});
    REQUIRE(e != nullptr);
    CHECK(e->surface == "no one");
    CHECK(e->pos == WordPos::Pronoun);

    e = lx.lookup_negative({"never", "been"});
    REQUIRE(e != nullptr);
    CHECK(e->surface == "never");
    CHECK(e->related_adverb == "전혀");

    CHECK(lx.lookup_negative({"some", "food"}) == nullptr);
  }

  TEST_CASE("lookup respects the part of speech filter") {
    const auto& lx = test::lexicons();
    const auto* adv = lx.lookup_negative({"none", "the", "worse"}, WordPos::Adverb);
    REQUIRE(adv != nullptr);
    CHECK(adv->force == EntryForce::PartialJiNeunAnta);
    const auto* pron = lx.lookup_negative({"none", "of", "them"}, WordPos::Pronoun);
    REQUIRE(pron != nullptr);
    CHECK(pron->force == EntryForce::None);
  }

  TEST_CASE("idiom matching") {
    const auto& lx = test::lexicons();
    std::vector<std::string> t1{"he", "just", "stopped", "working",
                                "for", "no", "reason"};
    CHECK(lx.match_idiom(t1, 5) != nullptr);

    std::vector<std::string> t2{"the", "victory", "was", "nothing",
                                "less", "than", "a", "miracle"};
    CHECK(lx.match_idiom(t2, 3) != nullptr);

    std::vector<std::string> t3{"we", "said", "nothing", "about", "her"};
    CHECK(lx.match_idiom(t3, 2) == nullptr);
  }

  TEST_CASE("collocation classes") {
    const auto& lx = test::lexicons();
    CHECK(lx.collocation_class("달성하") == NegationVerb::Motada);
    CHECK(lx.collocation_class("일어나") == NegationVerb::Anta);
    CHECK(lx.collocation_class("먹") == NegationVerb::Anta);  // default
  }

  TEST_CASE("suppletive pairs") {
    const auto& lx = test::lexicons();
    const auto* know = lx.suppletive_form("알", "Knowledge");
    REQUIRE(know != nullptr);
    CHECK(know->present == "모른다");
    CHECK(know->past == "몰랐다");

    const auto* have = lx.suppletive_form("가지", "Possession");
    REQUIRE(have != nullptr);
    CHECK(have->present == "없다");

    CHECK(lx.suppletive_form("일어나", "General") == nullptr);
    CHECK(lx.suppletive_form("알", "General") == nullptr);
  }

  TEST_CASE("trigger words") {
    const auto& lx = test::lexicons();
    CHECK(lx.is_trigger("always"));
    CHECK(lx.is_trigger("All"));
    CHECK(lx.is_trigger("necessarily"));
    CHECK_FALSE(lx.is_trigger("one"));
    CHECK_FALSE(lx.is_trigger("early"));
  }

  TEST_CASE("missing lexicon directory fails loudly") {
    CHECK_THROWS_AS(Lexicons::load("/nonexistent/dir"), EknegError);
  }

  TEST_CASE("loader enforces the table invariants") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ekneg_badlex";
    fs::remove_all(dir);
    fs::copy(test::lexicon_dir(), dir);

    SUBCASE("idiom without a negative word") {
      std::ofstream(dir / "idioms.tsv", std::ios::app) << "per se\tNonNegative\n";
      CHECK_THROWS_WITH_AS(Lexicons::load(dir.string()),
                           doctest::Contains("idiom"), EknegError);
    }
    SUBCASE("suppletive form with a productive suffix") {
      std::ofstream(dir / "suppletives.tsv", std::ios::app)
          << "먹\tGeneral\t먹지 않는다\t먹지 않았다\t먹지 않을것이다\n";
      CHECK_THROWS_WITH_AS(Lexicons::load(dir.string()),
                           doctest::Contains("productive"), EknegError);
    }
    SUBCASE("duplicate surface within one part of speech") {
      std::ofstream(dir / "negatives.tsv", std::ios::app)
          << "never\tAdverb\t-\t0\t-\n";
      CHECK_THROWS_WITH_AS(Lexicons::load(dir.string()),
                           doctest::Contains("duplicate"), EknegError);
    }
    fs::remove_all(dir);
  }
}
