#include <doctest.h>

#include <algorithm>

#include "latkit/catalog.hpp"
#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"
#include "latkit/latformat.hpp"

using namespace latkit;

TEST_CASE("m3 into itself: the automorphism group") {
  auto m3 = make_m3();
  auto embs = find_embeddings(m3, m3, EmbedMode::Sublattice);
  CHECK(embs.size() == 6);  // S3 on the atoms
  for (const auto& f : embs) CHECK(validate_embedding(m3, m3, f, EmbedMode::Sublattice));
}

TEST_CASE("m3 does not embed into the diamond") {
  CHECK(find_embeddings(make_m3(), make_diamond(), EmbedMode::Sublattice).empty());
  CHECK(find_embeddings(make_m3(), make_diamond(), EmbedMode::Subposet).empty());
}

TEST_CASE("subposet mode contains sublattice mode") {
  auto l7 = make_l7();
  auto n5 = make_n5();
  auto sub = find_embeddings(n5, l7, EmbedMode::Sublattice);
  auto pos = find_embeddings(n5, l7, EmbedMode::Subposet);
  CHECK(!sub.empty());
  for (const auto& f : sub) CHECK(std::find(pos.begin(), pos.end(), f) != pos.end());
}

TEST_CASE("sublattice mode demands lattices") {
  auto usl = remove_meets(make_m3(), {"bot"});
  CHECK_THROWS_AS(find_embeddings(make_diamond(), usl, EmbedMode::Sublattice), ConflictError);
}

TEST_CASE("each omega-omega pattern embeds into one of the rejected candidates") {
  auto lempp = parse_lat_file(std::string(FIXTURES_DIR) + "/lempp.lat");
  auto lerman = parse_lat_file(std::string(FIXTURES_DIR) + "/lerman.lat");
  bool lempp_hit = false, lerman_hit = false;
  for (const auto& p : omega_omega_patterns()) {
    if (!find_embeddings(p.structure, lempp, EmbedMode::Sublattice).empty()) lempp_hit = true;
    if (!find_embeddings(p.structure, lerman, EmbedMode::Sublattice).empty()) lerman_hit = true;
  }
  CHECK(lempp_hit);
  CHECK(lerman_hit);
}

TEST_CASE("the known sublattice copies are found") {
  // Hand-derived copies of the m1 pattern inside the two candidates.
  FiniteStructure m1;
  for (const auto& p : omega_omega_patterns())
    if (p.name == "d3-m1") m1 = p.structure;
  REQUIRE(m1.size() == 6);

  auto copy_of = [&](const FiniteStructure& host,
                     const std::vector<std::string>& image) {
    Embedding f;
    for (const auto& name : image) f.push_back(*host.index_of(name));
    return f;
  };

  auto lempp = parse_lat_file(std::string(FIXTURES_DIR) + "/lempp.lat");
  // Pattern order: bot, m01, g0, g1, g2, top.
  Embedding in_lempp = copy_of(lempp, {"X", "AX", "BX", "AY", "Z", "top"});
  CHECK(validate_embedding(m1, lempp, in_lempp, EmbedMode::Sublattice));
  auto all_lempp = find_embeddings(m1, lempp, EmbedMode::Sublattice);
  CHECK(std::find(all_lempp.begin(), all_lempp.end(), in_lempp) != all_lempp.end());

  auto lerman = parse_lat_file(std::string(FIXTURES_DIR) + "/lerman.lat");
  Embedding in_lerman = copy_of(lerman, {"bot", "Y", "Z", "AY", "C", "top"});
  CHECK(validate_embedding(m1, lerman, in_lerman, EmbedMode::Sublattice));
  auto all_lerman = find_embeddings(m1, lerman, EmbedMode::Sublattice);
  CHECK(std::find(all_lerman.begin(), all_lerman.end(), in_lerman) != all_lerman.end());
}

TEST_CASE("canonical keys separate and unify correctly") {
  CHECK(canonical_key(make_m3()) != canonical_key(make_n5()));
  CHECK(canonical_key(make_diamond()) !=
        canonical_key(build_structure({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}})));

  // Relabeled diamond.
  auto d2 = build_structure({"p", "q", "r", "s"}, {{"s", "q"}, {"s", "r"}, {"q", "p"}, {"r", "p"}});
  CHECK(canonical_key(make_diamond()) == canonical_key(d2));

  // The four patterns are pairwise non-isomorphic.
  auto pats = omega_omega_patterns();
  for (std::size_t i = 0; i < pats.size(); ++i)
    for (std::size_t j = i + 1; j < pats.size(); ++j)
      CHECK(canonical_key(pats[i].structure) != canonical_key(pats[j].structure));
}

TEST_CASE("catalog fixtures match their builders") {
  auto check = [](const char* file, const char* name) {
    auto s = parse_lat_file(std::string(FIXTURES_DIR) + "/" + file);
    auto hit = catalog_match(s);
    REQUIRE(hit.has_value());
    CHECK(hit->name == name);
  };
  check("m3.lat", "M3");
  check("n5.lat", "N5");
  check("l7.lat", "L7");
  check("s8.lat", "S8");
  check("l20.lat", "L20");
  check("diamond.lat", "diamond");
  check("lempp.lat", "lempp-candidate");
  check("lerman.lat", "lerman-candidate");
  check("cholak.lat", "cholak-candidate");
  check("m3_usl.lat", "M3-usl");
  check("l7_usl.lat", "L7-usl");
  check("m1_usl.lat", "d3-m1-usl");
  check("j1_usl.lat", "d3-j1-usl");
  check("j1m1_skew_usl.lat", "d3-j1m1-skew-usl");
  check("j2_labeled.lat", "d3-j2");
}
