#include <catch2/catch.hpp>

#include <set>

#include "oracles.hpp"
#include "regvar/profinite.hpp"

using namespace regvar;
using oracle::Cyclic;

namespace {
  Alphabet const A  = Alphabet::parse("a");
  Alphabet const AB = Alphabet::parse("ab");

  GeneratedDMonoid cyc(std::size_t index, std::size_t period) {
    return oracle::cyclic_monoid({index, period});
  }

  // Every cyclic monoid below c in Quo.
  std::set<GeneratedDMonoid> below(Cyclic c) {
    std::set<GeneratedDMonoid> out;
    for (auto d : oracle::cyclic_up_to(c.size())) {
      if (oracle::quotient_of(d, c)) {
        out.insert(oracle::cyclic_monoid(d));
      }
    }
    return out;
  }

  std::set<GeneratedDMonoid> as_set(std::vector<GeneratedDMonoid> const& v) {
    return {v.begin(), v.end()};
  }

  // Predicates on cyclic monoids by their arithmetic.
  bool cyclic_satisfies(std::string const& name, Cyclic c) {
    if (name == "idempotent") {
      return c.index <= 1 && c.period == 1;
    }
    if (name == "x2=x3") {
      return c.index <= 2 && c.period == 1;
    }
    if (name == "group") {
      return c.index == 0;
    }
    return true;  // all, commutative
  }
}  // namespace

TEST_CASE("limit examples", "[profinite]") {
  auto z6 = limit_of({cyc(0, 2), cyc(0, 3)});
  CHECK(z6.base == cyc(0, 6));
  REQUIRE(z6.projections.size() == 2);
  for (auto const& p : z6.projections) {
    CHECK(p.is_surjective());
    CHECK(validate(p).ok());
  }
  auto trivial = trivial_monoid(A, DSignature::set);
  CHECK(limit_of({trivial}).base == trivial);
  auto m = transition_monoid(compile("(ab)*", AB));
  CHECK(limit_of({m}).base == m);
  CHECK_THROWS_AS(limit_of({}), InputError);
  CHECK_THROWS_AS(limit_of({cyc(0, 2), trivial_monoid(AB, DSignature::set)}),
                  InputError);
}

TEST_CASE("limit is the cyclic join", "[profinite]") {
  auto cs = oracle::cyclic_up_to(4);
  for (auto x : cs) {
    for (auto y : cs) {
      for (auto z : cs) {
        auto m = limit_of({oracle::cyclic_monoid(x), oracle::cyclic_monoid(y),
                           oracle::cyclic_monoid(z)});
        REQUIRE(m.base == oracle::cyclic_monoid(oracle::join(oracle::join(x, y), z)));
        REQUIRE(m.base == subdirect(m.provenance));
      }
    }
  }
}

TEST_CASE("limit in the other signatures agrees with iterated joins", "[profinite]") {
  for (auto d : {DSignature::pos, DSignature::slat, DSignature::z2vec}) {
    auto all = enumerate_generated(A, d, 3);
    REQUIRE(all.size() >= 3);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        auto m = limit_of({all[i], all[j]});
        REQUIRE(m.base == subdirect(all[i], all[j]));
        REQUIRE(m.projections[0].is_surjective());
        REQUIRE(m.projections[1].is_surjective());
      }
    }
  }
}

TEST_CASE("cones factor through the limit", "[profinite]") {
  auto        cs      = oracle::cyclic_up_to(4);
  std::size_t checked = 0;
  for (auto k : oracle::cyclic_up_to(6)) {
    auto kk = oracle::cyclic_monoid(k);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i; j < cs.size(); ++j) {
        auto m = limit_of({oracle::cyclic_monoid(cs[i]), oracle::cyclic_monoid(cs[j])});
        bool cone = oracle::quotient_of(cs[i], k) && oracle::quotient_of(cs[j], k);
        auto h    = mediating_map(kk, m);
        REQUIRE(h.has_value() == cone);
        if (h) {
          REQUIRE(h->is_surjective());
        }
        ++checked;
      }
    }
  }
  CHECK(checked == 21 * 55);
}

TEST_CASE("larger families give larger limits", "[profinite]") {
  auto cs = oracle::cyclic_up_to(3);
  for (std::size_t mask = 1; mask < (1u << cs.size()); ++mask) {
    std::vector<GeneratedDMonoid> small, large;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (mask >> i & 1) {
        small.push_back(oracle::cyclic_monoid(cs[i]));
      }
    }
    large = small;
    large.push_back(cyc(1, 2));
    auto h = leq_quo(limit_of(small).base, limit_of(large).base);
    REQUIRE(h.has_value());
    REQUIRE(h->is_surjective());
  }
}

TEST_CASE("recover_ideal examples", "[profinite]") {
  auto z6 = recover_ideal(limit_of({cyc(0, 2), cyc(0, 3)}), 6);
  CHECK(as_set(z6.elements())
        == std::set<GeneratedDMonoid>{cyc(0, 1), cyc(0, 2), cyc(0, 3), cyc(0, 6)});
  auto trivial = trivial_monoid(A, DSignature::set);
  CHECK(recover_ideal(limit_of({trivial}), 4).elements()
        == std::vector<GeneratedDMonoid>{trivial});
  CHECK(recover_ideal(limit_of({cyc(0, 2)}), 4).elements().size() == 2);
  CHECK(recover_ideal(limit_of({cyc(0, 2), cyc(0, 3)}), 3).elements().size() == 3);
}

TEST_CASE("recovered ideals are quotient-and-join closures", "[profinite]") {
  auto        cs      = oracle::cyclic_up_to(4);
  std::size_t checked = 0;
  for (std::size_t mask = 1; mask < (1u << cs.size()); ++mask) {
    std::vector<GeneratedDMonoid> gens;
    Cyclic                        top{0, 1};
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (mask >> i & 1) {
        gens.push_back(oracle::cyclic_monoid(cs[i]));
        top = oracle::join(top, cs[i]);
      }
    }
    auto m = limit_of(gens);
    REQUIRE(as_set(recover_ideal(m, m.base.size()).elements()) == below(top));
    ++checked;
  }
  CHECK(checked == 1023);
}

TEST_CASE("kernel pairs", "[profinite]") {
  using P = std::pair<FreeDElement, FreeDElement>;
  auto w  = [](std::size_t n) { return FreeDElement::word(DSignature::set, Word(n, 0)); };
  CHECK(kernel_pairs(cyc(0, 2), 3) == std::vector<P>{{w(0), w(2)}, {w(1), w(3)}});
  auto t = kernel_pairs(trivial_monoid(A, DSignature::set), 1);
  CHECK(t == std::vector<P>{{w(0), w(1)}});
  CHECK(kernel_pairs(cyc(0, 4), 3).empty());
  // against normal forms of a^n
  for (auto c : oracle::cyclic_up_to(5)) {
    std::vector<P> expected;
    for (std::size_t i = 0; i <= 5; ++i) {
      for (std::size_t j = i + 1; j <= 5; ++j) {
        if (c.reduce(i) == c.reduce(j)) {
          expected.emplace_back(w(i), w(j));
        }
      }
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(kernel_pairs(oracle::cyclic_monoid(c), 5) == expected);
  }
  // two letters: pairs are exactly the words with equal transformations
  auto m     = transition_monoid(compile("(ab)*", AB));
  auto pairs = kernel_pairs(m, 3);
  for (auto const& [u, v] : pairs) {
    REQUIRE(u < v);
    REQUIRE(m.evaluate(u) == m.evaluate(v));
  }
  CHECK(std::find(pairs.begin(), pairs.end(),
                  P{FreeDElement::word(DSignature::set, AB.parse_word("aa")),
                    FreeDElement::word(DSignature::set, AB.parse_word("bb"))})
        != pairs.end());
}

TEST_CASE("named predicates are closed on samples", "[profinite]") {
  auto one = enumerate_generated(A, DSignature::set, 6);
  auto two = enumerate_generated(AB, DSignature::set, 3);
  for (auto const& name : predicate_names()) {
    auto p = named_predicate(name, DSignature::set);
    INFO(name);
    CHECK(spot_check(p, one).empty());
    CHECK(spot_check(p, two).empty());
  }
  PseudovarietyPredicate small{
      DSignature::set, [](FiniteDMonoid const& m) { return m.size() <= 2; }, "small"};
  auto failures = spot_check(small, one);
  CHECK_FALSE(failures.empty());
  CHECK_THROWS_AS(named_predicate("nilpotent", DSignature::set), InputError);
}

TEST_CASE("theory examples", "[profinite]") {
  auto idem = named_predicate("idempotent", DSignature::set);
  auto all  = named_predicate("all", DSignature::set);
  auto comm = named_predicate("commutative", DSignature::set);
  CHECK(theory_from_pseudovariety(idem, A, 2).base == cyc(1, 1));
  CHECK(theory_from_pseudovariety(all, A, 1).base == trivial_monoid(A, DSignature::set));
  CHECK(theory_from_pseudovariety(comm, A, 3).base == cyc(2, 6));
  PseudovarietyPredicate none{
      DSignature::set, [](FiniteDMonoid const&) { return false; }, "none"};
  CHECK_THROWS_AS(theory_from_pseudovariety(none, A, 2), InputError);

  auto t = truncated_theory(idem, {A, AB}, 3);
  CHECK(t.warnings.empty());
  FiniteDMonoid two_idem(FiniteDObject::set(2), 0, {0, 1, 1, 1});
  CHECK(pseudovariety_from_theory(t, two_idem).holds);
  CHECK(pseudovariety_from_theory(t, trivial_monoid(A, DSignature::set).monoid()).holds);
  auto z2 = pseudovariety_from_theory(t, cyc(0, 2).monoid());
  CHECK_FALSE(z2.holds);
  CHECK(z2.witness.find("size bound 3") != std::string::npos);
  CHECK_FALSE(pseudovariety_from_theory(t, cyc(0, 2)).holds);
  FiniteDMonoid three(FiniteDObject::set(3), 0, {0, 1, 2, 1, 1, 2, 2, 2, 2});
  CHECK_THROWS_AS(pseudovariety_from_theory(t, three), InputError);
}

TEST_CASE("theory naturality", "[profinite]") {
  auto all = truncated_theory(named_predicate("all", DSignature::set), {A}, 3);
  CHECK(theory_naturality_check(all, FreeMorphism::identity(A, DSignature::set)));
  auto idem = truncated_theory(named_predicate("idempotent", DSignature::set), {A, AB}, 3);
  FreeMorphism a_ab(A, AB, DSignature::set,
                    {FreeDElement::word(DSignature::set, AB.parse_word("ab"))});
  CHECK(theory_naturality_check(idem, a_ab));
  for (auto const& f : morphisms_up_to(AB, A, DSignature::set, 2)) {
    REQUIRE(theory_naturality_check(idem, f));
  }
  // an inconsistent family: trivial on {a}, Z2 on {b}
  Alphabet const  B = Alphabet::parse("b");
  TruncatedTheory bad;
  bad.size_bound = 2;
  bad.entries.emplace(A, limit_of({trivial_monoid(A, DSignature::set)}));
  bad.entries.emplace(B, limit_of({oracle::cyclic_monoid({0, 2}, B)}));
  FreeMorphism a_b(A, B, DSignature::set, {FreeDElement::word(DSignature::set, {0})});
  auto verdict = theory_naturality_check(bad, a_b);
  CHECK_FALSE(verdict.holds);
  CHECK_FALSE(verdict.witness.empty());
  FreeMorphism b_a(B, A, DSignature::set, {FreeDElement::word(DSignature::set, {0})});
  CHECK(theory_naturality_check(bad, b_a));
  CHECK_THROWS_AS(theory_naturality_check(bad, a_ab), InputError);
}

TEST_CASE("truncated round trip on one letter", "[profinite]") {
  auto sample = enumerate_generated(A, DSignature::set, 6);
  REQUIRE(sample.size() == 21);
  for (auto const& name : {"all", "idempotent", "commutative", "x2=x3", "group"}) {
    auto p = named_predicate(name, DSignature::set);
    auto t = truncated_theory(p, {A}, 6);
    INFO(name);
    CHECK(t.warnings.empty());
    for (auto c : oracle::cyclic_up_to(6)) {
      auto g = oracle::cyclic_monoid(c);
      REQUIRE(pseudovariety_from_theory(t, g).holds == cyclic_satisfies(name, c));
      REQUIRE(p(g.monoid()) == cyclic_satisfies(name, c));
    }
    CHECK(theory_closure_check(t, sample).empty());
  }
}

TEST_CASE("truncated round trip on two letters", "[profinite][slow]") {
  auto sample = enumerate_generated(AB, DSignature::set, 3);
  for (auto const& name : {"idempotent", "commutative", "x2=x3", "all"}) {
    auto p = named_predicate(name, DSignature::set);
    auto t = truncated_theory(p, {AB}, 3);
    INFO(name);
    for (auto const& g : sample) {
      REQUIRE(pseudovariety_from_theory(t, g).holds == p(g.monoid()));
    }
    CHECK(theory_closure_check(t, sample).empty());
  }
}

TEST_CASE("theories in the ordered signature", "[profinite]") {
  auto p      = named_predicate("x2=x3", DSignature::pos);
  auto sample = enumerate_generated(A, DSignature::pos, 4);
  auto t      = truncated_theory(p, {A}, 4);
  for (auto const& g : sample) {
    REQUIRE(pseudovariety_from_theory(t, g).holds == p(g.monoid()));
  }
  CHECK(theory_closure_check(t, sample).empty());
}
