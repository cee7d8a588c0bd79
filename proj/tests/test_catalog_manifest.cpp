#include <doctest.h>

#include "arborlab/catalog.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/manifest.hpp"
#include "arborlab/ramification.hpp"

using namespace arborlab;

TEST_CASE("catalog loads and validates") {
  Catalog cat = Catalog::load_default();
  const CatalogEntry* pg9 = cat.find("PGammaL2_9");
  REQUIRE(pg9 != nullptr);
  CHECK(pg9->group().order() == 1440);
  CHECK(pg9->socle()->order() == 360);
  CHECK(pg9->socle()->is_normal_in(pg9->group()));

  CHECK(cat.find("PGammaL2_8")->group().order() == 1512);
  CHECK(cat.find("PSL3_2_points")->group().order() == 168);
  CHECK(cat.find("PSL3_2_lines")->group().order() == 168);
  CHECK(cat.find("PSL3_3")->group().order() == 5616);
  CHECK(cat.find("M11")->group().order() == 7920);
  CHECK(cat.find("M23")->group().order() == 10200960);
  CHECK(cat.find("M23")->group().is_transitive());

  // round trip
  for (const auto& e : cat.entries()) {
    CatalogEntry back = CatalogEntry::from_json(e.to_json());
    CHECK(back.name == e.name);
    CHECK(back.generator_strings == e.generator_strings);
  }
}

TEST_CASE("catalog group specs") {
  Catalog cat = Catalog::load_default();
  CHECK(cat.resolve_group("A7").order() == 2520);
  CHECK(cat.resolve_group("S5").order() == 120);
  CHECK(cat.resolve_group("catalog:M11").order() == 7920);
  CHECK(cat.resolve_socle("S6").order() == 360);
  CHECK(cat.resolve_socle("catalog:PGammaL2_8").order() == 504);
  CHECK(cat.resolve_socle("catalog:M11").order() == 7920); // simple: socle is itself
  CHECK_THROWS_AS(cat.resolve_group("catalog:NoSuchGroup"), InvalidArgumentError);
}

TEST_CASE("the shipped inertia triple is product-one and invariably generates") {
  Catalog cat = Catalog::load_default();
  const CatalogEntry* e = cat.find("belyi_d7_r3_s2_t3");
  REQUIRE(e != nullptr);
  auto inertia = e->inertia();
  REQUIRE(inertia.size() == 3);
  CHECK(cycle_type(inertia[0]) == CycleType({7}));
  CHECK(cycle_type(inertia[1]) == CycleType({3, 1, 1, 1, 1}));
  CHECK(cycle_type(inertia[2]) == CycleType({3, 2, 2}));
  CHECK(compose(compose(inertia[0], inertia[1]), inertia[2]).is_identity());

  PermGroup generated = e->group();
  CHECK(generated.order() == 2520); // all three classes even, primitivity forces Alt(7)
  CHECK(invariably_generates(generated, PermGroup::alternating(7),
                             {PermGroup::cyclic(inertia[0]), PermGroup::cyclic(inertia[1]),
                              PermGroup::cyclic(inertia[2])}));
}

TEST_CASE("manifests hash their payload, not their timestamp") {
  RunManifest m = RunManifest::make("stats olds", {{"n", 5}}, 7);
  RunManifest later = m;
  later.created_at = "2099-01-01T00:00:00Z";
  CHECK(m.payload_hash() == later.payload_hash());

  RunManifest other = RunManifest::make("stats olds", {{"n", 6}}, 7);
  CHECK(m.payload_hash() != other.payload_hash());

  RunManifest back = RunManifest::from_json(m.to_json());
  CHECK(back.command == "stats olds");
  CHECK(back.seed.has_value());
  CHECK(*back.seed == 7);
  CHECK(back.payload_hash() == m.payload_hash());
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 12638187200555641996ULL);
}
