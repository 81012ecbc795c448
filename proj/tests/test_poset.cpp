#include <stdexcept>

#include "doctest.h"
#include "satlat/poset.hpp"

using namespace satlat;

TEST_CASE("named posets have the advertised relations") {
  PosetSpec d = PosetSpec::diamond();
  CHECK(d.size() == 4);
  CHECK(d.less(0, 1));
  CHECK(d.less(0, 2));
  CHECK(d.less(0, 3));
  CHECK(d.less(1, 3));
  CHECK(d.less(2, 3));
  CHECK_FALSE(d.comparable(1, 2));

  PosetSpec v = PosetSpec::v2();
  CHECK(v.size() == 3);
  CHECK(v.less(0, 1));
  CHECK(v.less(0, 2));
  CHECK_FALSE(v.comparable(1, 2));

  PosetSpec b = PosetSpec::butterfly();
  CHECK(b.size() == 4);
  int related = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) related += b.less(i, j);
  CHECK(related == 4);  // two bottoms x two tops
  CHECK_FALSE(b.comparable(0, 1));
  CHECK_FALSE(b.comparable(2, 3));
}

TEST_CASE("chains and antichains recognize themselves") {
  CHECK(PosetSpec::chain(4).is_chain());
  CHECK_FALSE(PosetSpec::chain(4).is_antichain());
  CHECK(PosetSpec::antichain(4).is_antichain());
  CHECK_FALSE(PosetSpec::antichain(4).is_chain());
  // size-1 is both
  CHECK(PosetSpec::chain(1).is_chain());
  CHECK(PosetSpec::chain(1).is_antichain());
  CHECK_FALSE(PosetSpec::diamond().is_chain());
  CHECK_FALSE(PosetSpec::diamond().is_antichain());
}

TEST_CASE("construction validates the strict-order axioms") {
  // irreflexive
  CHECK_THROWS_AS(PosetSpec(2, {{0, 0}}, "bad"), std::invalid_argument);
  // antisymmetric (cycle)
  CHECK_THROWS_AS(PosetSpec(2, {{0, 1}, {1, 0}}, "bad"),
                  std::invalid_argument);
  // transitive, unless closure requested
  CHECK_THROWS_AS(PosetSpec(3, {{0, 1}, {1, 2}}, "open"),
                  std::invalid_argument);
  PosetSpec closed(3, {{0, 1}, {1, 2}}, "closed", true);
  CHECK(closed.less(0, 2));
  CHECK(closed.same_relation(PosetSpec::chain(3)));
  // range
  CHECK_THROWS_AS(PosetSpec(2, {{0, 2}}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(PosetSpec(0, {}, "bad"), std::invalid_argument);
}

TEST_CASE("dual transposes the relation") {
  PosetSpec v = PosetSpec::v2();
  PosetSpec lam = v.dual();
  CHECK(lam.less(1, 0));
  CHECK(lam.less(2, 0));
  CHECK_FALSE(lam.less(0, 1));
  CHECK(lam.label() == "dual(v2)");
  CHECK(lam.dual().same_relation(v));
  // dual of the diamond is the transposed relation (isomorphic via i -> 3-i,
  // but not label-identical); an antichain is label-identically self-dual
  PosetSpec dd = PosetSpec::diamond().dual();
  CHECK(dd.same_relation(PosetSpec(4, {{3, 1}, {3, 2}, {1, 0}, {2, 0}}, "m", true)));
  CHECK_FALSE(dd.same_relation(PosetSpec::diamond()));
  CHECK(PosetSpec::antichain(3).dual().same_relation(PosetSpec::antichain(3)));
}

TEST_CASE("descriptors parse to the named posets") {
  CHECK(parse_poset("diamond").same_relation(PosetSpec::diamond()));
  CHECK(parse_poset("v2").same_relation(PosetSpec::v2()));
  CHECK(parse_poset("butterfly").same_relation(PosetSpec::butterfly()));
  CHECK(parse_poset("chain:3").same_relation(PosetSpec::chain(3)));
  CHECK(parse_poset("antichain:2").same_relation(PosetSpec::antichain(2)));
  CHECK(parse_poset("antichain:1").size() == 1);
  CHECK_THROWS_AS(parse_poset("chain:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("chain:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("pentagon"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("custom:/nonexistent/poset.json"),
                  std::exception);
}
