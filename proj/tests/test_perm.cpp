#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "icoq/perm.hpp"

using namespace icoq;

TEST_CASE("composition acts on the left") {
  Perm a = Perm::parse(3, "(1,2)");
  Perm b = Perm::parse(3, "(2,3)");
  // (a*b)(x) = a(b(x)): 3 -> 2 -> 1
  CHECK((a * b).apply(2) == 0);
  CHECK((a * b).cycle_string() == "(1 2 3)");
  CHECK((b * a).cycle_string() == "(1 3 2)");
}

TEST_CASE("cycle parsing accepts both separators and the identity") {
  CHECK(Perm::parse(5, "(1,2)(3,4)") == Perm::parse(5, "(1 2)(3 4)"));
  CHECK(Perm::parse(5, "e").is_identity());
  CHECK(Perm::parse(5, "()").is_identity());
  CHECK_THROWS_AS(Perm::parse(5, "(1,2"), Error);
  CHECK_THROWS_AS(Perm::parse(5, "(0,1)"), Error);
  CHECK_THROWS_AS(Perm::parse(5, "(1,6)"), Error);
  CHECK(Perm::parse(5, "(1,1)").is_identity());  // degenerate self-cycle
  CHECK_THROWS_AS(Perm::parse(5, "(1,2)(2,3)"), Error);  // overlapping cycles
}

TEST_CASE("parse round-trips through cycle_string") {
  std::mt19937 rng(11);
  std::vector<int> base = {0, 1, 2, 3, 4};
  for (int i = 0; i < 100; ++i) {
    std::shuffle(base.begin(), base.end(), rng);
    Perm p = Perm::from_images(base);
    CHECK(Perm::parse(5, p.cycle_string()) == p);
  }
}

TEST_CASE("order, parity, and cycle type") {
  Perm p = Perm::parse(5, "(1,2,3)(4,5)");
  CHECK(p.order() == 6);
  CHECK(!p.even());
  CHECK(p.cycle_type() == std::vector<int>{3, 2});
  CHECK(Perm::parse(5, "(1,2,3,4,5)").even());
  CHECK(Perm::parse(5, "e").cycle_type() == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("inverse") {
  std::mt19937 rng(13);
  std::vector<int> base = {0, 1, 2, 3, 4};
  for (int i = 0; i < 50; ++i) {
    std::shuffle(base.begin(), base.end(), rng);
    Perm p = Perm::from_images(base);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("symmetric and alternating groups have the right orders") {
  CHECK(PermGroup::symmetric(5).order() == 120);
  CHECK(PermGroup::alternating(5).order() == 60);
  CHECK(PermGroup::symmetric(4).order() == 24);
  PermGroup a5 = PermGroup::alternating(5);
  for (const Perm& p : a5.elements()) CHECK(p.even());
}

TEST_CASE("closure respects the order bound") {
  std::vector<Perm> gens = {Perm::parse(5, "(1,2)"), Perm::parse(5, "(1,2,3,4,5)")};
  CHECK_THROWS_AS(PermGroup::closure(5, gens, 60), Error);
  try {
    PermGroup::closure(5, gens, 60);
  } catch (const Error& e) {
    CHECK(e.code() == "OrderBoundExceeded");
  }
}

TEST_CASE("conjugacy classes of the degree-5 symmetric group") {
  PermGroup s5 = PermGroup::symmetric(5);
  auto classes = s5.conjugacy_classes();
  CHECK(classes.size() == 7);
  size_t total = 0;
  for (const auto& c : classes) total += c.size;
  CHECK(total == 120);
  // sorted by (element order, class size)
  std::vector<std::pair<int, size_t>> want = {{1, 1},  {2, 10}, {2, 15}, {3, 20},
                                              {4, 30}, {5, 24}, {6, 20}};
  REQUIRE(classes.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    CHECK(classes[i].element_order == want[i].first);
    CHECK(classes[i].size == want[i].second);
  }
}

TEST_CASE("centralizer orders multiply out to the class equation") {
  PermGroup s5 = PermGroup::symmetric(5);
  for (const auto& c : s5.conjugacy_classes()) {
    PermGroup cent = s5.centralizer_of(c.rep);
    CHECK(cent.order() * c.size == 120);
  }
}

TEST_CASE("normalizer of a Sylow 5-subgroup has order 20") {
  PermGroup s5 = PermGroup::symmetric(5);
  PermGroup p5 = s5.sylow(5);
  CHECK(p5.order() == 5);
  CHECK(s5.normalizer_of(p5).order() == 20);
  PermGroup p2 = s5.sylow(2);
  CHECK(p2.order() == 8);
}

TEST_CASE("iso fingerprints of familiar groups") {
  CHECK(iso_fingerprint(PermGroup::symmetric(3).elements()) == "S3");
  CHECK(iso_fingerprint(PermGroup::symmetric(4).elements()) == "S4");
  CHECK(iso_fingerprint(PermGroup::alternating(4).elements()) == "A4");
  CHECK(iso_fingerprint(PermGroup::alternating(5).elements()) == "A5");
  CHECK(iso_fingerprint(
            PermGroup::closure(5, {Perm::parse(5, "(1,2,3,4,5)")}).elements()) == "mu5");
  CHECK(iso_fingerprint(
            PermGroup::closure(5, {Perm::parse(5, "(1,2)(3,4)"), Perm::parse(5, "(1,3)(2,4)")})
                .elements()) == "mu2xmu2");
}

TEST_CASE("subgroup census invariants") {
  PermGroup s5 = PermGroup::symmetric(5);
  auto census = s5.subgroup_census();
  CHECK(census.size() == 17);
  size_t total = 0;
  for (const auto& r : census) {
    total += r.count;
    CHECK(r.normalizer_order * r.count == 120);
    // the stored representative is an honest subgroup of the right order
    CHECK(r.elements.size() == r.order);
    PermGroup h = PermGroup::closure(5, r.generators);
    CHECK(h.order() == r.order);
    CHECK(iso_fingerprint(h.elements()) == r.label);
    bool all_even = true;
    for (const Perm& p : r.elements)
      if (!p.even()) all_even = false;
    CHECK(all_even == r.in_alternating);
  }
  CHECK(total == 154);
  // census rows are sorted by (order, label, in_alternating) and are distinct
  for (size_t i = 1; i < census.size(); ++i) {
    auto key = [](const SubgroupClassRecord& r) {
      return std::make_tuple(r.order, r.label, r.in_alternating);
    };
    CHECK(key(census[i - 1]) < key(census[i]));
  }
}

TEST_CASE("census of the alternating group on 5 letters") {
  PermGroup a5 = PermGroup::alternating(5);
  auto census = a5.subgroup_census();
  // proper nontrivial subgroup classes of A5: mu2, mu3, mu2xmu2, mu5, S3, D5, A4
  CHECK(census.size() == 7);
  size_t total = 0;
  for (const auto& r : census) {
    total += r.count;
    CHECK(r.normalizer_order * r.count == 60);
  }
  CHECK(total == 57);
}
